#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "tripoints/errors.hpp"
#include "tripoints/projplane.hpp"

using namespace tripoints;

namespace {

ProjPoint pt(const Field& f, int x, int y, int z) {
  return ProjPoint(f.from_int(x), f.from_int(y), f.from_int(z));
}

ProjLine ln(const Field& f, int a, int b, int c) {
  return ProjLine(f.from_int(a), f.from_int(b), f.from_int(c));
}

}  // namespace

TEST_CASE("point normalization") {
  Field f3(3, 1);
  // (2:2:0) scales to (1:1:0).
  ProjPoint p = pt(f3, 2, 2, 0);
  CHECK(p.x() == f3.one());
  CHECK(p.y() == f3.one());
  CHECK(p.z() == f3.zero());
  CHECK(p.str() == "1:1:0");
  CHECK(pt(f3, 2, 2, 0) == pt(f3, 1, 1, 0));

  // First nonzero coordinate becomes 1 even when it is not x.
  CHECK(pt(f3, 0, 2, 1).str() == "0:1:2");
  CHECK(pt(f3, 0, 0, 2).str() == "0:0:1");

  CHECK_THROWS_AS(pt(f3, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ln(f3, 0, 0, 0), std::invalid_argument);

  Field f9(3, 2);
  // Scaling by a non-prime-subfield unit: (t : t : 0) == (1 : 1 : 0).
  FieldElem t = f9.gen();
  CHECK(ProjPoint(t, t, f9.zero()) == pt(f9, 1, 1, 0));
}

TEST_CASE("meet and join") {
  Field f3(3, 1);
  // y = 0 meets x + y + z = 0 in (1:0:2).
  CHECK(meet(ln(f3, 0, 1, 0), ln(f3, 1, 1, 1)) == pt(f3, 1, 0, 2));
  // x = 0 meets y = 0 in (0:0:1).
  CHECK(meet(ln(f3, 1, 0, 0), ln(f3, 0, 1, 0)) == pt(f3, 0, 0, 1));
  CHECK_THROWS_AS(meet(ln(f3, 1, 0, 0), ln(f3, 2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(join(pt(f3, 1, 0, 2), pt(f3, 2, 0, 1)), std::invalid_argument);

  Field f4(2, 2);
  FieldElem t = f4.gen(), one = f4.one();
  // x + y + z = 0 meets t x + y + z = 0 in (0:1:1).
  ProjLine l1(one, one, one);
  ProjLine l2(t, one, one);
  CHECK(meet(l1, l2) == pt(f4, 0, 1, 1));

  // join inverts meet and lines contain their intersection.
  for (const auto& [a, b] : {std::pair{0, 1}, {1, 2}, {2, 5}}) {
    ProjLine la = dual_line(pt(f4, 1, a, b));
    ProjLine lb = dual_line(pt(f4, 0, 1, a + 1));
    ProjPoint m = meet(la, lb);
    CHECK(la.contains(m));
    CHECK(lb.contains(m));
    // Any two distinct points of la join back to la.
    std::vector<ProjPoint> on_la;
    for (const auto& x : all_points(f4))
      if (la.contains(x)) on_la.push_back(x);
    REQUIRE(on_la.size() == 5);
    for (size_t i = 0; i < on_la.size(); ++i)
      for (size_t j = i + 1; j < on_la.size(); ++j)
        CHECK(join(on_la[i], on_la[j]) == la);
  }
}

TEST_CASE("duality is an involution and swaps incidence") {
  Field f5(5, 1);
  ProjPoint p = pt(f5, 1, 2, 3);
  CHECK(dual_point(dual_line(p)) == p);
  ProjLine l = ln(f5, 1, 4, 0);
  CHECK(dual_line(dual_point(l)) == l);
  // p on l iff dual of l on dual of p.
  CHECK(l.contains(p) == dual_line(p).contains(dual_point(l)));
}

TEST_CASE("all_points enumerates P^2 in sorted order") {
  for (const auto& [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    Field f(p, n);
    uint64_t q = f.order();
    auto pts = all_points(f);
    REQUIRE(pts.size() == q * q + q + 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    std::set<std::string> seen;
    for (const auto& x : pts) seen.insert(x.str());
    CHECK(seen.size() == pts.size());
    // Every line of the dual plane carries q + 1 of them.
    ProjLine l = dual_line(pts[5 % pts.size()]);
    size_t on = 0;
    for (const auto& x : pts)
      if (l.contains(x)) ++on;
    CHECK(on == q + 1);
  }
}

TEST_CASE("cusp-curve parametrization") {
  for (const auto& [p, n] : {std::pair{3, 2}, {2, 3}, {7, 1}, {5, 1}}) {
    Field f(p, n);
    CubicForm curve = cuspidal_cubic(f);
    std::set<std::string> images;
    for (const auto& s : f.elements()) {
      ProjPoint pnt = cusp_point(s);
      CHECK(curve.eval(pnt).is_zero());
      CHECK(pnt != pt(f, 0, 0, 1));  // the cusp stays off the chart
      images.insert(pnt.str());
    }
    CHECK(images.size() == f.order());  // injective
    CHECK(cusp_point(f.zero()) == pt(f, 0, 1, 0));
    // The cusp and flex are the only curve points outside the image.
    auto all = all_points(f);
    size_t on_curve = 0;
    for (const auto& x : all)
      if (curve.eval(x).is_zero()) ++on_curve;
    CHECK(on_curve == f.order() + 1);
  }
}

TEST_CASE("collinearity on the curve is the zero-sum condition") {
  for (const auto& [p, n] :
       {std::pair{3, 1}, {3, 2}, {3, 3}, {2, 2}, {2, 3}, {5, 1}, {7, 1}, {13, 1}}) {
    Field f(p, n);
    auto elems = f.elements();
    for (const auto& s1 : elems)
      for (const auto& s2 : elems) {
        if (s1 == s2) continue;
        CHECK(chord_third(s1, s2) == -(s1 + s2));
        for (const auto& s3 : elems) {
          if (s3 == s1 || s3 == s2) continue;
          bool geometric = collinear(s1, s2, s3);
          CHECK(geometric == (s1 + s2 + s3).is_zero());
          CHECK(geometric ==
                collinear(cusp_point(s1), cusp_point(s2), cusp_point(s3)));
        }
      }
    CHECK_THROWS_AS(collinear(elems[1], elems[1], elems[0]), std::invalid_argument);
  }
}

TEST_CASE("tangent residual") {
  Field f3(3, 3);
  for (const auto& s : f3.elements()) CHECK(tangent_residual(s) == s);  // -2s = s
  Field f2(2, 3);
  for (const auto& s : f2.elements()) CHECK(tangent_residual(s).is_zero());
  Field f7(7, 1);
  for (const auto& s : f7.elements())
    CHECK(tangent_residual(s) == -(s + s));
}

TEST_CASE("chord-tangent group law is field addition") {
  for (const auto& [p, n] : {std::pair{3, 2}, {3, 3}, {2, 2}, {2, 3}, {5, 1}, {7, 1}}) {
    Field f(p, n);
    auto elems = f.elements();
    for (const auto& a : elems)
      for (const auto& b : elems) CHECK(group_add(a, b) == a + b);
    // Neutral element and inverses fall out.
    for (const auto& a : elems) {
      CHECK(group_add(a, f.zero()) == a);
      CHECK(group_add(a, -a).is_zero());
    }
  }
}

TEST_CASE("cubic forms: evaluation, partials, printing") {
  Field f7(7, 1);
  CubicForm curve = cuspidal_cubic(f7);
  CHECK(curve.str() == "x^3 + 6*y^2*z");
  CHECK(curve.eval(pt(f7, 1, 1, 1)).is_zero());
  CHECK_FALSE(curve.eval(pt(f7, 1, 1, 2)).is_zero());
  CHECK_FALSE(curve.is_zero());

  // d/dz (x^3 - y^2 z) = -y^2.
  auto dz = curve.partial(2);
  REQUIRE(dz.size() == 1);
  CHECK(dz[0].first == std::array<int, 3>{0, 2, 0});
  CHECK(dz[0].second == f7.from_int(-1));
  // d/dx = 3x^2.
  auto dx = curve.partial(0);
  REQUIRE(dx.size() == 1);
  CHECK(dx[0].first == std::array<int, 3>{2, 0, 0});
  CHECK(dx[0].second == f7.from_int(3));

  // In characteristic 3 the x-partial vanishes identically.
  Field f9(3, 2);
  CHECK(cuspidal_cubic(f9).partial(0).empty());
}

TEST_CASE("cubics through point sets") {
  Field f16(2, 4);
  // All 16 parametrized points pin the curve up to scale.
  std::vector<ProjPoint> pts;
  for (const auto& s : f16.elements()) pts.push_back(cusp_point(s));
  auto basis = cubics_through(f16, pts);
  REQUIRE(basis.size() == 1);
  CubicForm curve = cuspidal_cubic(f16);
  // Same vanishing locus: proportional coefficient vectors.
  const auto& got = basis[0].coeffs();
  const auto& want = curve.coeffs();
  FieldElem ratio = f16.zero();
  for (int i = 0; i < 10; ++i)
    if (!want[i].is_zero()) {
      ratio = got[i] / want[i];
      break;
    }
  CHECK_FALSE(ratio.is_zero());
  for (int i = 0; i < 10; ++i) CHECK(got[i] == want[i] * ratio);

  // Three points in general position leave a 7-dimensional space.
  Field f7(7, 1);
  auto b3 = cubics_through(f7, {pt(f7, 1, 0, 0), pt(f7, 0, 1, 0), pt(f7, 0, 0, 1)});
  CHECK(b3.size() == 7);
  for (const auto& c : b3) {
    CHECK(c.eval(pt(f7, 1, 0, 0)).is_zero());
    CHECK(c.eval(pt(f7, 0, 1, 0)).is_zero());
    CHECK(c.eval(pt(f7, 0, 0, 1)).is_zero());
  }

  // No points at all: the full 10-dimensional space.
  CHECK(cubics_through(f7, {}).size() == 10);

  // The 27 parametrized points over F_27 still admit the curve.
  Field f27(3, 3);
  std::vector<ProjPoint> pts27;
  for (const auto& s : f27.elements()) pts27.push_back(cusp_point(s));
  auto b27 = cubics_through(f27, pts27);
  CubicForm curve27 = cuspidal_cubic(f27);
  bool found = false;
  for (const auto& c : b27) {
    bool proportional = true;
    FieldElem r = f27.zero();
    for (int i = 0; i < 10 && proportional; ++i) {
      if (curve27.coeffs()[i].is_zero()) {
        proportional = c.coeffs()[i].is_zero();
      } else if (r.is_zero()) {
        r = c.coeffs()[i] / curve27.coeffs()[i];
      } else {
        proportional = c.coeffs()[i] == curve27.coeffs()[i] * r;
      }
    }
    found = found || (proportional && !c.is_zero());
  }
  CHECK(found);
}

TEST_CASE("classification of plane cubics") {
  Field f7(7, 1);

  CubicClassification cusp = classify_cubic(cuspidal_cubic(f7));
  CHECK(cusp.kind == CubicKind::cusp);
  REQUIRE(cusp.singular_points.size() == 1);
  CHECK(cusp.singular_points[0] == pt(f7, 0, 0, 1));
  CHECK(std::string(cubic_kind_name(cusp.kind)) == "cusp");

  // x y z = 0: three singular points, degenerate.
  std::vector<FieldElem> xyz(10, f7.zero());
  xyz[4] = f7.one();
  CubicClassification deg = classify_cubic(CubicForm(f7, xyz));
  CHECK(deg.kind == CubicKind::degenerate);
  CHECK(deg.singular_points.size() == 3);

  // Fermat cubic x^3 + y^3 + z^3 is smooth away from characteristic 3.
  std::vector<FieldElem> fermat(10, f7.zero());
  fermat[0] = fermat[6] = fermat[9] = f7.one();
  CubicClassification sm = classify_cubic(CubicForm(f7, fermat));
  CHECK(sm.kind == CubicKind::smooth);
  CHECK(sm.singular_points.empty());

  // Nodal cubic x^3 + y^3 - x y z: node at (0:0:1).
  std::vector<FieldElem> nodal(10, f7.zero());
  nodal[0] = nodal[6] = f7.one();
  nodal[4] = -f7.one();
  CubicClassification nd = classify_cubic(CubicForm(f7, nodal));
  CHECK(nd.kind == CubicKind::node);
  REQUIRE(nd.singular_points.size() == 1);
  CHECK(nd.singular_points[0] == pt(f7, 0, 0, 1));

  // The cuspidal curve stays a cusp in characteristics 2 and 3.
  CHECK(classify_cubic(cuspidal_cubic(Field(2, 2))).kind == CubicKind::cusp);
  CHECK(classify_cubic(cuspidal_cubic(Field(3, 2))).kind == CubicKind::cusp);

  CHECK_THROWS_AS(classify_cubic(CubicForm(f7, std::vector<FieldElem>(10, f7.zero()))),
                  std::invalid_argument);
}

TEST_CASE("meet of joins through a common point recovers it") {
  Field f5(5, 1);
  ProjPoint p = pt(f5, 1, 2, 3);
  for (const auto& a : all_points(f5)) {
    if (a == p) continue;
    for (const auto& b : all_points(f5)) {
      if (b == p || b == a) continue;
      ProjLine l1 = join(p, a);
      ProjLine l2 = join(p, b);
      if (l1 == l2) continue;
      CHECK(meet(l1, l2) == p);
    }
  }
}

TEST_CASE("point files round-trip") {
  Field f9(3, 2);
  std::vector<ProjPoint> pts = {pt(f9, 0, 1, 2), pt(f9, 1, 5, 8)};
  std::ostringstream out;
  write_points(out, f9, pts);
  std::istringstream in(out.str());
  auto [f, got] = read_points(in);
  CHECK(f == f9);
  CHECK(got == pts);

  // Re-serialization is byte-identical.
  std::ostringstream again;
  write_points(again, f, got);
  CHECK(again.str() == out.str());
}

TEST_CASE("point files reject malformed input") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_points(in), ParseError);
  };
  fails("");                                         // no header
  fails("field p=3 n=2\n");                          // header missing modulus
  fails("field p=3 n=2 modulus=1,0,1\n1:0\n");       // two coordinates
  fails("field p=3 n=2 modulus=1,0,1\n0:0:0\n");     // zero triple
  fails("field p=3 n=2 modulus=1,0,1\n2:0:1\n");     // not normalized
  fails("field p=3 n=2 modulus=1,0,1\n1:9:0\n");     // coordinate out of range
  fails("field p=3 n=2 modulus=1,0,1\n1:a:0\n");     // not a number

  // ParseError carries the offending line number.
  std::istringstream in("field p=3 n=2 modulus=1,0,1\n0:1:0\n2:0:1\n");
  try {
    read_points(in);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "tripoints/arrange.hpp"
#include "tripoints/errors.hpp"

using namespace tripoints;

namespace {

// Multiplicity census straight from the definition: walk every point of the
// plane and count the lines through it. Slow but independent of audit().
std::map<int, int64_t> brute_counts(const Arrangement& a) {
  std::map<int, int64_t> counts;
  for (const auto& pnt : all_points(a.field())) {
    int k = 0;
    for (const auto& ll : a.lines())
      if (ll.line.contains(pnt)) ++k;
    if (k >= 2) ++counts[k];
  }
  return counts;
}

std::map<int, int64_t> as_map(const SingularitySpectrum& s) { return s.counts(); }

}  // namespace

TEST_CASE("the three-line arrangement over F_3") {
  Field f3(3, 1);
  Arrangement a = build_char3(f3);
  REQUIRE(a.size() == 3);
  // Labels are the parameter encodings 0, 1, 2.
  CHECK(a.lines()[0].label == 0);
  CHECK(a.lines()[1].label == 1);
  CHECK(a.lines()[2].label == 2);

  SingularitySpectrum s = audit(a);
  CHECK(s.t(2) == 0);
  CHECK(s.t(3) == 1);
  CHECK(s.max_multiplicity() == 3);
  REQUIRE(s.points().size() == 1);
  // All three lines pass through one point; its labels are all of them.
  CHECK(s.points()[0].labels == std::vector<int64_t>{0, 1, 2});
  // That point is the dual of the flex-image line and is (1:0:2) here.
  CHECK(s.points()[0].point == ProjPoint(f3.one(), f3.zero(), f3.from_int(2)));
}

TEST_CASE("characteristic-3 arrangements have only triple points") {
  for (int n : {1, 2, 3, 4}) {
    Field f(3, n);
    uint64_t q = f.order();
    Arrangement a = build_char3(f);
    REQUIRE(a.size() == q);
    SingularitySpectrum s = audit(a);
    CHECK(s.t(2) == 0);
    CHECK(s.t(3) == static_cast<int64_t>(q * (q - 1) / 6));
    CHECK(s.max_multiplicity() == 3);
    // Census over the whole plane agrees (skip the largest for time).
    if (q <= 27) CHECK(brute_counts(a) == as_map(s));
  }
}

TEST_CASE("characteristic-2 arrangements have only triple points") {
  for (int n : {2, 3, 4, 5, 6}) {
    Field f(2, n);
    uint64_t q = f.order();
    Arrangement a = build_char2(f);
    REQUIRE(a.size() == q - 1);
    SingularitySpectrum s = audit(a);
    CHECK(s.t(2) == 0);
    CHECK(s.t(3) == static_cast<int64_t>((q - 1) * (q - 2) / 6));
    CHECK(s.max_multiplicity() == 3);
    if (q <= 32) CHECK(brute_counts(a) == as_map(s));
  }
}

TEST_CASE("generic-characteristic arrangements carry double points too") {
  for (int p : {5, 7, 11, 13}) {
    Field f(p, 1);
    uint64_t q = f.order();
    Arrangement a = build_generic(f);
    REQUIRE(a.size() == q);
    SingularitySpectrum s = audit(a);
    CHECK(s.t(2) == static_cast<int64_t>(q - 1));
    CHECK(s.t(3) == static_cast<int64_t>((q - 1) * (q - 2) / 6));
    CHECK(s.max_multiplicity() == 3);
    CHECK(brute_counts(a) == as_map(s));
  }
}

TEST_CASE("audit cross-checks the pair count identity") {
  Field f9(3, 2);
  SingularitySpectrum s = audit(build_char3(f9));
  // 12 triple points cover all C(9,2) = 36 line pairs.
  int64_t pairs = 0;
  for (const auto& [k, t] : s.counts()) pairs += t * k * (k - 1) / 2;
  CHECK(pairs == 36);
}

TEST_CASE("configuration check") {
  Field f9(3, 2);
  Arrangement l9 = build_char3(f9);
  SingularitySpectrum s9 = audit(l9);
  // Nine lines, twelve triple points, four on each line: a (12_3, 9_4) design.
  ConfigurationReport ok = check_configuration(l9, s9, 4, 3);
  CHECK(ok.ok);
  CHECK(ok.violations.empty());
  // Wrong r: every line is a named violation.
  ConfigurationReport bad_r = check_configuration(l9, s9, 5, 3);
  CHECK_FALSE(bad_r.ok);
  CHECK(bad_r.violations.size() == 9);
  CHECK(bad_r.violations[0].find("line ") == 0);

  Field f16(2, 4);
  Arrangement c15 = build_char2(f16);
  CHECK(check_configuration(c15, audit(c15), 7, 3).ok);

  // The generic shape is not an (n_k, m_r) configuration: double points break k.
  Field f7(7, 1);
  Arrangement g7 = build_generic(f7);
  ConfigurationReport rep = check_configuration(g7, audit(g7), 3, 3);
  CHECK_FALSE(rep.ok);
  bool has_point_violation = false;
  for (const auto& v : rep.violations)
    has_point_violation = has_point_violation || v.find("point ") == 0;
  CHECK(has_point_violation);
}

TEST_CASE("dual points recover the curve points") {
  Field f9(3, 2);
  Arrangement a = build_char3(f9);
  std::vector<ProjPoint> pts = dual_points(a);
  REQUIRE(pts.size() == 9);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i] == cusp_point(f9.decode(a.lines()[i].label)));
    CHECK(dual_line(pts[i]) == a.lines()[i].line);
  }
}

TEST_CASE("reference count rows") {
  Field f9(3, 2);
  Arrangement l9 = build_char3(f9);
  auto rows9 = reference_count_rows(l9, audit(l9));
  REQUIRE(rows9.size() == 2);
  CHECK(rows9[0].k == 3);
  CHECK(rows9[0].formula == "q(q-1)/6");
  CHECK(rows9[0].value == "12");
  CHECK(rows9[0].integral);
  CHECK(rows9[0].match);
  CHECK(rows9[1].k == 2);
  CHECK(rows9[1].value == "0");
  CHECK(rows9[1].match);
  CHECK(reference_row_line(rows9[0]) == "reference.t[3].q(q-1)/6=12 match");

  // Generic q = 7: the naive q(q-3)/6 is not even an integer; the count the
  // arrangement actually attains is (q-1)(q-2)/6, and t_2 is q - 1, not q.
  Field f7(7, 1);
  Arrangement g7 = build_generic(f7);
  auto rows7 = reference_count_rows(g7, audit(g7));
  REQUIRE(rows7.size() == 4);
  CHECK(rows7[0].formula == "q(q-3)/6");
  CHECK(rows7[0].value == "14/3");
  CHECK_FALSE(rows7[0].integral);
  CHECK_FALSE(rows7[0].match);
  CHECK(reference_row_line(rows7[0]) ==
        "reference.t[3].q(q-3)/6=14/3 MISMATCH (not an integer)");
  CHECK(rows7[1].formula == "(q-1)(q-2)/6");
  CHECK(rows7[1].value == "5");
  CHECK(rows7[1].match);
  CHECK(rows7[2].formula == "q");
  CHECK_FALSE(rows7[2].match);
  CHECK(rows7[3].formula == "q-1");
  CHECK(rows7[3].match);

  // q = 13: q(q-3)/6 is far from the measured count even though integral.
  Field f13(13, 1);
  Arrangement g13 = build_generic(f13);
  auto rows13 = reference_count_rows(g13, audit(g13));
  CHECK(rows13[0].value == "65/3");
  CHECK_FALSE(rows13[0].integral);
  CHECK(rows13[1].value == "22");
  CHECK(rows13[1].match);
}

TEST_CASE("spectrum and audit reports") {
  Field f3(3, 1);
  Arrangement a = build_char3(f3);
  SingularitySpectrum s = audit(a);
  std::string rep = spectrum_report(s, true);
  CHECK(rep.find("lines=3\n") != std::string::npos);
  CHECK(rep.find("t[3]=1\n") != std::string::npos);
  CHECK(rep.find("1:0:2 -> {0,1,2}") != std::string::npos);

  std::string full = audit_report(a, s, false);
  CHECK(full.find("reference.t[3].q(q-1)/6=1 match") != std::string::npos);
  CHECK(full.find("1:0:2") == std::string::npos);  // points suppressed
}

TEST_CASE("arrangement files round-trip byte-for-byte") {
  for (const auto& [p, n] : {std::pair{3, 2}, {2, 3}, {7, 1}}) {
    Field f(p, n);
    Arrangement a = p == 2 ? build_char2(f) : (p == 3 ? build_char3(f) : build_generic(f));
    std::ostringstream out;
    write_arrangement(out, a);
    std::istringstream in(out.str());
    Arrangement back = read_arrangement(in);
    CHECK(back.field() == f);
    REQUIRE(back.size() == a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(back.lines()[i].label == a.lines()[i].label);
      CHECK(back.lines()[i].line == a.lines()[i].line);
    }
    std::ostringstream again;
    write_arrangement(again, back);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("arrangement reader rejects malformed input") {
  auto fails_at = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_arrangement(in);
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  const std::string hdr = "field p=3 n=1 modulus=0,1\n";
  fails_at("nonsense\n", 1);
  fails_at(hdr + "0\n", 2);                    // no coordinates
  fails_at(hdr + "x 1:0:0\n", 2);              // label not a number
  fails_at(hdr + "0 1:0:0 extra\n", 2);        // trailing token
  fails_at(hdr + "0 0:0:0\n", 2);              // zero triple
  fails_at(hdr + "0 2:0:1\n", 2);              // not normalized
  fails_at(hdr + "0 1:0:0\n0 0:1:0\n", 3);     // duplicate label
  fails_at(hdr + "0 1:0:0\n1 1:0:0\n", 3);     // duplicate line
}

TEST_CASE("arrangement construction guards") {
  Field f3(3, 1);
  ProjLine l(f3.one(), f3.zero(), f3.zero());
  ProjLine l2(f3.zero(), f3.one(), f3.zero());
  CHECK_THROWS_AS(Arrangement(f3, {{0, l}, {0, l2}}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(f3, {{0, l}, {1, l}}), std::invalid_argument);
  CHECK_THROWS_AS(build_char3(Field(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_char2(Field(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_char2(Field(2, 1)), std::invalid_argument);  // q = 2: no lines
  CHECK_THROWS_AS(build_generic(Field(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_generic(Field(2, 2)), std::invalid_argument);
}

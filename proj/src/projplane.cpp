#include "tripoints/projplane.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tripoints/errors.hpp"
#include "tripoints/linalg.hpp"

namespace tripoints {

namespace {

// Scale a coordinate triple so its first nonzero entry is 1.
std::array<FieldElem, 3> normalize3(const FieldElem& a, const FieldElem& b,
                                    const FieldElem& c, const char* what) {
  std::array<FieldElem, 3> v{a, b, c};
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw std::invalid_argument(std::string(what) + ": zero triple");
  FieldElem s = v[lead].inv();
  for (int i = 0; i < 3; ++i) v[i] = v[i] * s;
  return v;
}

std::array<FieldElem, 3> cross(const std::array<FieldElem, 3>& u,
                               const std::array<FieldElem, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

std::string triple_str(const std::array<FieldElem, 3>& v) {
  std::ostringstream os;
  os << v[0].encode() << ':' << v[1].encode() << ':' << v[2].encode();
  return os.str();
}

bool triple_less(const std::array<FieldElem, 3>& u, const std::array<FieldElem, 3>& v) {
  for (int i = 0; i < 3; ++i) {
    if (u[i].encode() != v[i].encode()) return u[i].encode() < v[i].encode();
  }
  return false;
}

}  // namespace

ProjPoint::ProjPoint(const FieldElem& x, const FieldElem& y, const FieldElem& z)
    : c_(normalize3(x, y, z, "ProjPoint")) {}

bool ProjPoint::operator==(const ProjPoint& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool ProjPoint::operator<(const ProjPoint& o) const { return triple_less(c_, o.c_); }

std::string ProjPoint::str() const { return triple_str(c_); }

ProjLine::ProjLine(const FieldElem& a, const FieldElem& b, const FieldElem& c)
    : c_(normalize3(a, b, c, "ProjLine")) {}

bool ProjLine::contains(const ProjPoint& p) const {
  return (c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.z()).is_zero();
}

bool ProjLine::operator==(const ProjLine& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool ProjLine::operator<(const ProjLine& o) const { return triple_less(c_, o.c_); }

std::string ProjLine::str() const { return triple_str(c_); }

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw std::invalid_argument("meet: lines coincide");
  auto w = cross({l1[0], l1[1], l1[2]}, {l2[0], l2[1], l2[2]});
  return ProjPoint(w[0], w[1], w[2]);
}

ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  if (p1 == p2) throw std::invalid_argument("join: points coincide");
  auto w = cross({p1[0], p1[1], p1[2]}, {p2[0], p2[1], p2[2]});
  return ProjLine(w[0], w[1], w[2]);
}

ProjPoint dual_point(const ProjLine& l) { return ProjPoint(l[0], l[1], l[2]); }

ProjLine dual_line(const ProjPoint& p) { return ProjLine(p[0], p[1], p[2]); }

bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  FieldElem det = p1[0] * (p2[1] * p3[2] - p2[2] * p3[1]) -
                  p1[1] * (p2[0] * p3[2] - p2[2] * p3[0]) +
                  p1[2] * (p2[0] * p3[1] - p2[1] * p3[0]);
  return det.is_zero();
}

std::vector<ProjPoint> all_points(const Field& field) {
  std::vector<ProjPoint> pts;
  const uint64_t q = field.order();
  pts.reserve(q * q + q + 1);
  FieldElem zero = field.zero();
  FieldElem one = field.one();
  // Generated directly in encode()-lexicographic order of normalized triples.
  pts.emplace_back(zero, zero, one);
  for (uint64_t z = 0; z < q; ++z) pts.emplace_back(zero, one, field.decode(z));
  for (uint64_t y = 0; y < q; ++y) {
    for (uint64_t z = 0; z < q; ++z) {
      pts.emplace_back(one, field.decode(y), field.decode(z));
    }
  }
  return pts;
}

ProjPoint cusp_point(const FieldElem& s) {
  Field f = s.field();
  return ProjPoint(s, f.one(), s * s * s);
}

namespace {

// Divide p (ascending coefficients) by (u - s); returns the quotient and
// checks the remainder is zero.
std::vector<FieldElem> divide_out_root(const std::vector<FieldElem>& p,
                                       const FieldElem& s) {
  std::vector<FieldElem> q(p.size() - 1, s.field().zero());
  FieldElem carry = s.field().zero();
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + s * carry;
    q[i - 1] = carry;
  }
  FieldElem rem = p[0] + s * carry;
  if (!rem.is_zero()) throw std::logic_error("divide_out_root: nonzero remainder");
  return q;
}

// Parameters of the cubic's intersection with the line a x + b y + c z = 0
// satisfy c s^3 + a s + b = 0; c != 0 exactly when the line avoids the cusp.
std::vector<FieldElem> restricted_cubic(const ProjLine& l) {
  Field f = l.field();
  return {l.b(), l.a(), f.zero(), l.c()};
}

}  // namespace

FieldElem chord_third(const FieldElem& s1, const FieldElem& s2) {
  if (s1 == s2) throw std::invalid_argument("chord_third: equal parameters");
  ProjLine l = join(cusp_point(s1), cusp_point(s2));
  if (l.c().is_zero()) throw std::logic_error("chord_third: chord through the cusp");
  auto p = restricted_cubic(l);
  auto lin = divide_out_root(divide_out_root(p, s1), s2);
  return -(lin[0] / lin[1]);
}

FieldElem tangent_residual(const FieldElem& s) {
  Field f = s.field();
  // Gradient of x^3 - y^2 z at (s : 1 : s^3): (3 s^2, -2 s^3, -1).
  FieldElem a = f.from_int(3) * s * s;
  FieldElem b = -(f.from_int(2) * s * s * s);
  FieldElem c = -f.one();
  ProjLine l(a, b, c);
  auto p = restricted_cubic(l);
  auto lin = divide_out_root(divide_out_root(p, s), s);
  return -(lin[0] / lin[1]);
}

FieldElem group_add(const FieldElem& s1, const FieldElem& s2) {
  FieldElem t = (s1 == s2) ? tangent_residual(s1) : chord_third(s1, s2);
  FieldElem zero = s1.field().zero();
  return t.is_zero() ? tangent_residual(t) : chord_third(t, zero);
}

bool collinear(const FieldElem& s1, const FieldElem& s2, const FieldElem& s3) {
  if (s1 == s2 || s1 == s3 || s2 == s3) {
    throw std::invalid_argument("collinear: parameters must be pairwise distinct");
  }
  return collinear(cusp_point(s1), cusp_point(s2), cusp_point(s3));
}

const std::array<std::array<int, 3>, 10>& CubicForm::monomials() {
  static const std::array<std::array<int, 3>, 10> m = {{{3, 0, 0},
                                                        {2, 1, 0},
                                                        {2, 0, 1},
                                                        {1, 2, 0},
                                                        {1, 1, 1},
                                                        {1, 0, 2},
                                                        {0, 3, 0},
                                                        {0, 2, 1},
                                                        {0, 1, 2},
                                                        {0, 0, 3}}};
  return m;
}

CubicForm::CubicForm(const Field& field, std::vector<FieldElem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 10) throw std::invalid_argument("CubicForm: need 10 coefficients");
  for (const auto& c : coeffs_) {
    if (!c.valid() || c.field() != field_) {
      throw std::invalid_argument("CubicForm: coefficient field mismatch");
    }
  }
}

FieldElem CubicForm::eval(const FieldElem& x, const FieldElem& y,
                          const FieldElem& z) const {
  FieldElem acc = field_.zero();
  const auto& mons = monomials();
  for (int i = 0; i < 10; ++i) {
    if (coeffs_[i].is_zero()) continue;
    FieldElem t = coeffs_[i];
    for (int e = 0; e < mons[i][0]; ++e) t = t * x;
    for (int e = 0; e < mons[i][1]; ++e) t = t * y;
    for (int e = 0; e < mons[i][2]; ++e) t = t * z;
    acc = acc + t;
  }
  return acc;
}

std::vector<std::pair<std::array<int, 3>, FieldElem>> CubicForm::partial(int var) const {
  if (var < 0 || var > 2) throw std::invalid_argument("partial: variable index");
  std::vector<std::pair<std::array<int, 3>, FieldElem>> out;
  const auto& mons = monomials();
  for (int i = 0; i < 10; ++i) {
    int e = mons[i][var];
    if (e == 0 || coeffs_[i].is_zero()) continue;
    FieldElem c = coeffs_[i] * field_.from_int(e);
    if (c.is_zero()) continue;
    std::array<int, 3> m = mons[i];
    m[var] -= 1;
    out.emplace_back(m, c);
  }
  return out;
}

bool CubicForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

std::string CubicForm::str() const {
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  const auto& mons = monomials();
  bool first = true;
  for (int i = 0; i < 10; ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (coeffs_[i].encode() != 1) {
      os << coeffs_[i].encode();
      printed = true;
    }
    for (int v = 0; v < 3; ++v) {
      int e = mons[i][v];
      if (e == 0) continue;
      if (printed) os << '*';
      os << names[v];
      if (e > 1) os << '^' << e;
      printed = true;
    }
  }
  if (first) os << '0';
  return os.str();
}

CubicForm cuspidal_cubic(const Field& field) {
  std::vector<FieldElem> c(10, field.zero());
  c[0] = field.one();          // x^3
  c[7] = -field.one();         // y^2 z
  return CubicForm(field, c);
}

std::vector<CubicForm> cubics_through(const Field& field,
                                      const std::vector<ProjPoint>& points) {
  linalg::Matrix m;
  m.reserve(points.size());
  const auto& mons = CubicForm::monomials();
  for (const auto& p : points) {
    if (p.field() != field) throw std::invalid_argument("cubics_through: field mismatch");
    std::vector<FieldElem> row;
    row.reserve(10);
    for (int i = 0; i < 10; ++i) {
      FieldElem t = field.one();
      for (int e = 0; e < mons[i][0]; ++e) t = t * p.x();
      for (int e = 0; e < mons[i][1]; ++e) t = t * p.y();
      for (int e = 0; e < mons[i][2]; ++e) t = t * p.z();
      row.push_back(t);
    }
    m.push_back(std::move(row));
  }
  std::vector<CubicForm> out;
  for (auto& v : linalg::kernel_basis(m, field, 10)) {
    out.emplace_back(field, std::move(v));
  }
  return out;
}

namespace {

FieldElem eval_terms(const std::vector<std::pair<std::array<int, 3>, FieldElem>>& terms,
                     const Field& field, const ProjPoint& p) {
  FieldElem acc = field.zero();
  for (const auto& [m, c] : terms) {
    FieldElem t = c;
    for (int v = 0; v < 3; ++v) {
      for (int e = 0; e < m[v]; ++e) t = t * p[v];
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace

CubicClassification classify_cubic(const CubicForm& f) {
  Field field = f.field();
  if (f.is_zero()) throw std::invalid_argument("classify_cubic: zero form");

  auto px = f.partial(0);
  auto py = f.partial(1);
  auto pz = f.partial(2);

  std::vector<ProjPoint> sing;
  for (const auto& p : all_points(field)) {
    if (!f.eval(p).is_zero()) continue;
    if (!eval_terms(px, field, p).is_zero()) continue;
    if (!eval_terms(py, field, p).is_zero()) continue;
    if (!eval_terms(pz, field, p).is_zero()) continue;
    sing.push_back(p);
  }

  if (sing.empty()) return {CubicKind::smooth, {}};
  if (sing.size() > 1) return {CubicKind::degenerate, std::move(sing)};

  // Unique singular point: expand in the affine chart where its leading
  // coordinate is 1 and classify by the quadratic part a*u^2 + b*u*v + c*v^2.
  const ProjPoint& s = sing[0];
  int lead = 0;
  while (s[lead].is_zero()) ++lead;
  int ua = (lead == 0) ? 1 : 0;
  int vb = (lead == 2) ? 1 : 2;

  static const int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};

  FieldElem quad[3] = {field.zero(), field.zero(), field.zero()};  // u^2, uv, v^2
  const auto& mons = CubicForm::monomials();
  for (int i = 0; i < 10; ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    int eu = mons[i][ua];
    int ev = mons[i][vb];
    // (s_u + u)^eu (s_v + v)^ev, with the lead coordinate fixed at 1.
    for (int du = 0; du <= eu; ++du) {
      for (int dv = 0; dv <= ev; ++dv) {
        if (du + dv != 2) continue;
        FieldElem c = f.coeffs()[i] * field.from_int(binom[eu][du] * binom[ev][dv]);
        c = c * s[ua].pow(static_cast<uint64_t>(eu - du));
        c = c * s[vb].pow(static_cast<uint64_t>(ev - dv));
        int slot = (du == 2) ? 0 : (du == 1 ? 1 : 2);
        quad[slot] = quad[slot] + c;
      }
    }
  }

  CubicKind kind;
  if (quad[0].is_zero() && quad[1].is_zero() && quad[2].is_zero()) {
    kind = CubicKind::degenerate;
  } else if (field.p() == 2) {
    kind = quad[1].is_zero() ? CubicKind::cusp : CubicKind::node;
  } else {
    FieldElem disc = quad[1] * quad[1] - field.from_int(4) * quad[0] * quad[2];
    kind = disc.is_zero() ? CubicKind::cusp : CubicKind::node;
  }
  return {kind, std::move(sing)};
}

const char* cubic_kind_name(CubicKind k) {
  switch (k) {
    case CubicKind::smooth: return "smooth";
    case CubicKind::node: return "node";
    case CubicKind::cusp: return "cusp";
    case CubicKind::degenerate: return "degenerate";
  }
  return "?";
}

ProjPoint parse_point(const Field& field, const std::string& token, int line_no) {
  std::array<uint64_t, 3> enc{};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t end = (i < 2) ? token.find(':', pos) : token.size();
    if (end == std::string::npos) throw ParseError(line_no, "expected x:y:z triple");
    std::string part = token.substr(pos, end - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(line_no, "bad coordinate '" + part + "'");
    }
    enc[i] = std::stoull(part);
    if (enc[i] >= field.order()) {
      throw ParseError(line_no, "coordinate " + part + " out of range");
    }
    pos = end + 1;
  }
  FieldElem x = field.decode(enc[0]);
  FieldElem y = field.decode(enc[1]);
  FieldElem z = field.decode(enc[2]);
  if (x.is_zero() && y.is_zero() && z.is_zero()) {
    throw ParseError(line_no, "zero coordinate triple");
  }
  ProjPoint p(x, y, z);
  if (p.x() != x || p.y() != y || p.z() != z) {
    throw ParseError(line_no, "triple " + token + " is not normalized");
  }
  return p;
}

std::pair<Field, std::vector<ProjPoint>> read_points(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing field header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Field field = parse_field_header(line, 1);

  std::vector<ProjPoint> pts;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError(line_no, "empty line");
    pts.push_back(parse_point(field, line, line_no));
  }
  return {field, std::move(pts)};
}

void write_points(std::ostream& out, const Field& field,
                  const std::vector<ProjPoint>& points) {
  out << field.header() << '\n';
  for (const auto& p : points) out << p.str() << '\n';
}

}  // namespace tripoints

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "tripoints/gf.hpp"

namespace tripoints {

/// Point of P^2(K) in normalized homogeneous coordinates: the first nonzero
/// coordinate in (x, y, z) order is 1. Construction normalizes and rejects
/// (0, 0, 0).
class ProjPoint {
 public:
  ProjPoint(const FieldElem& x, const FieldElem& y, const FieldElem& z);

  Field field() const { return c_[0].field(); }
  const FieldElem& x() const { return c_[0]; }
  const FieldElem& y() const { return c_[1]; }
  const FieldElem& z() const { return c_[2]; }
  const FieldElem& operator[](int i) const { return c_[i]; }

  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  /// encode()-lexicographic on normalized coordinates.
  bool operator<(const ProjPoint& o) const;

  /// "x:y:z" with canonical integer encodings.
  std::string str() const;

 private:
  std::array<FieldElem, 3> c_;
};

/// Line {(x:y:z) : a x + b y + c z = 0}, stored with the same normalization
/// as points (coordinate triple up to scale, first nonzero is 1).
class ProjLine {
 public:
  ProjLine(const FieldElem& a, const FieldElem& b, const FieldElem& c);

  Field field() const { return c_[0].field(); }
  const FieldElem& a() const { return c_[0]; }
  const FieldElem& b() const { return c_[1]; }
  const FieldElem& c() const { return c_[2]; }
  const FieldElem& operator[](int i) const { return c_[i]; }

  bool contains(const ProjPoint& p) const;

  bool operator==(const ProjLine& o) const;
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  bool operator<(const ProjLine& o) const;

  std::string str() const;

 private:
  std::array<FieldElem, 3> c_;
};

/// Intersection point of two distinct lines (cross product of coefficient
/// triples). Throws if the lines coincide.
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

/// Line through two distinct points. Throws if the points coincide.
ProjLine join(const ProjPoint& p1, const ProjPoint& p2);

/// Duality is the coordinate identity: (a:b:c) as a line <-> as a point.
ProjPoint dual_point(const ProjLine& l);
ProjLine dual_line(const ProjPoint& p);

bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

/// All q^2 + q + 1 points, sorted by ProjPoint::operator< (encode()-lex).
std::vector<ProjPoint> all_points(const Field& field);

// --- the cuspidal cubic x^3 - y^2 z ---
//
// Its smooth locus is parametrized by s -> (s : 1 : s^3); the flex (s = 0)
// is (0:1:0) and the cusp (0:0:1) stays off the parametrization.

/// x^3 - y^2 z as a CubicForm-compatible coefficient vector owner below;
/// the point for parameter s.
ProjPoint cusp_point(const FieldElem& s);

/// Three pairwise distinct parameters lie on one line iff s1 + s2 + s3 = 0.
/// Throws unless pairwise distinct.
bool collinear(const FieldElem& s1, const FieldElem& s2, const FieldElem& s3);

/// Third parameter on the chord through s1 != s2: -(s1 + s2).
FieldElem chord_third(const FieldElem& s1, const FieldElem& s2);

/// Residual parameter of the tangent line at s: -2s (so s itself in
/// characteristic 3, and 0 in characteristic 2).
FieldElem tangent_residual(const FieldElem& s);

/// Chord-tangent group law with the flex s = 0 as neutral element. The
/// parametrization makes it plain addition: group_add(s1, s2) = s1 + s2,
/// which the implementation reaches geometrically.
FieldElem group_add(const FieldElem& s1, const FieldElem& s2);

/// Homogeneous cubic in x, y, z. Coefficients are indexed by the fixed
/// monomial order x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
class CubicForm {
 public:
  CubicForm(const Field& field, std::vector<FieldElem> coeffs);

  Field field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }

  FieldElem eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const;
  FieldElem eval(const ProjPoint& p) const { return eval(p.x(), p.y(), p.z()); }

  /// Formal partial derivative with respect to variable 0, 1 or 2, returned
  /// as exponent-vector/coefficient pairs of the degree-2 result.
  std::vector<std::pair<std::array<int, 3>, FieldElem>> partial(int var) const;

  bool is_zero() const;
  std::string str() const;

  /// Exponent triples (i, j, k) of the 10 monomials x^i y^j z^k, in
  /// coefficient order.
  static const std::array<std::array<int, 3>, 10>& monomials();

 private:
  Field field_;
  std::vector<FieldElem> coeffs_;
};

/// x^3 - y^2 z over the given field.
CubicForm cuspidal_cubic(const Field& field);

/// Basis of the space of cubics vanishing on all given points (kernel of the
/// 10-column incidence matrix), deterministic order.
std::vector<CubicForm> cubics_through(const Field& field,
                                      const std::vector<ProjPoint>& points);

enum class CubicKind { smooth, node, cusp, degenerate };

struct CubicClassification {
  CubicKind kind;
  std::vector<ProjPoint> singular_points;  // sorted
};

/// Exhaustive singular-point scan over P^2(K); a unique singular point is
/// classified by the quadratic part of the local affine expansion there
/// (zero -> degenerate; in odd characteristic, discriminant b^2 - 4ac zero
/// -> cusp, else node; in characteristic 2, zero cross term -> cusp).
CubicClassification classify_cubic(const CubicForm& f);

const char* cubic_kind_name(CubicKind k);

// --- point files: field header line, then one "x:y:z" per line ---

ProjPoint parse_point(const Field& field, const std::string& token, int line_no);
std::pair<Field, std::vector<ProjPoint>> read_points(std::istream& in);
void write_points(std::ostream& out, const Field& field,
                  const std::vector<ProjPoint>& points);

}  // namespace tripoints

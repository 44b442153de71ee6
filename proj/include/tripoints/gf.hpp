#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tripoints {

namespace detail {
struct FieldData;
}

class FieldElem;

/// GF(p^n) presented as F_p[t]/(m(t)) with m monic irreducible of degree n.
///
/// Field and FieldElem are small trivially-copyable values. The backing data
/// is interned per (p, n, modulus) and lives for the whole process, so copies
/// never dangle and two fields compare equal exactly when their presentation
/// matches. Everything here is immutable after construction.
class Field {
 public:
  /// Modulus taken from the built-in table (p in {2,3,5,7,11,13}, n <= 7).
  /// The table pins the monic irreducible with the smallest coefficient
  /// encoding, so encodings are reproducible across runs and machines.
  Field(int p, int n);

  /// Explicit modulus, coefficients c0..cn low degree first. Must be monic of
  /// degree n and irreducible over F_p; verified exhaustively at construction.
  Field(int p, int n, const std::vector<int>& modulus);

  int p() const;
  int n() const;
  uint64_t order() const;  // q = p^n
  std::vector<int> modulus() const;

  /// "field p=<p> n=<n> modulus=<c0,c1,...,cn>"
  std::string header() const;

  FieldElem zero() const;
  FieldElem one() const;
  /// Image of the integer v in the prime subfield (v reduced mod p).
  FieldElem from_int(int64_t v) const;
  /// Element with the given coefficient vector (length <= n, low degree
  /// first); entries are reduced mod p.
  FieldElem from_coeffs(const std::vector<int>& coeffs) const;
  /// Inverse of FieldElem::encode(); requires code < q.
  FieldElem decode(uint64_t code) const;
  /// The class of t.
  FieldElem gen() const;

  /// All q elements in increasing encode() order, starting with 0.
  std::vector<FieldElem> elements() const;

  /// All F_p-linear combinations of the basis, deduplicated, in encode()
  /// order. A linearly dependent basis is fine; the empty basis gives {0}.
  std::vector<FieldElem> span(const std::vector<FieldElem>& basis) const;

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

 private:
  friend class FieldElem;
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

/// Parses a field header line as written by Field::header().
Field parse_field_header(const std::string& line, int line_no = 1);

/// An element of a Field. Canonical form: every coefficient reduced mod p;
/// equality is coefficient-wise. encode() maps bijectively onto [0, q).
class FieldElem {
 public:
  FieldElem() : d_(nullptr), c_{} {}  // invalid until assigned from a Field

  Field field() const;
  bool valid() const { return d_ != nullptr; }
  bool is_zero() const;

  /// Sum of coeffs[i] * p^i; canonical textual form is this integer in decimal.
  uint64_t encode() const;

  /// The coefficient vector (length n). Additive: coords(a+b) = coords(a) +
  /// coords(b) componentwise mod p.
  std::vector<int> coords() const;

  FieldElem operator-() const;
  FieldElem inv() const;  // requires *this != 0
  FieldElem pow(uint64_t e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string str() const;  // decimal encode

  static constexpr int kMaxDeg = 8;

 private:
  friend class Field;
  FieldElem(const detail::FieldData* d, const std::array<uint8_t, kMaxDeg>& c)
      : d_(d), c_(c) {}

  const detail::FieldData* d_;
  std::array<uint8_t, kMaxDeg> c_;
};

}  // namespace tripoints

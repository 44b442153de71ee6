#include "tripoints/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tripoints/errors.hpp"

namespace tripoints {

namespace detail {

struct FieldData {
  int p = 0;
  int n = 0;
  uint64_t q = 1;
  std::array<uint8_t, 9> mod{};     // c0..cn, monic
  std::array<uint64_t, 8> ppow{};   // p^0..p^(n)
};

}  // namespace detail

using detail::FieldData;

namespace {

constexpr int kMaxDeg = FieldElem::kMaxDeg;  // storage bound; fields in scope have n <= 7

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// -- dense polynomial helpers over F_p, used only at Field construction time --

using Poly = std::vector<int>;  // low degree first, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  // m monic
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int c = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

int poly_eval(const Poly& a, int x, int p) {
  int v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = (v * x + *it) % p;
  return v;
}

Poly poly_from_code(uint64_t code, int deg, int p) {
  Poly c(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  c[deg] = 1;  // monic
  return c;
}

// Irreducibility over F_p: root scan decides degree <= 3; above that, trial
// division by every monic irreducible of degree <= n/2. Fields in scope are
// tiny, so nothing faster is warranted.
bool poly_irreducible(const Poly& f, int p);

std::vector<Poly> monic_irreducibles(int deg, int p) {
  std::vector<Poly> out;
  uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (uint64_t code = 0; code < count; ++code) {
    Poly f = poly_from_code(code, deg, p);
    if (poly_irreducible(f, p)) out.push_back(std::move(f));
  }
  return out;
}

bool poly_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return true;
  if (n <= 3) {
    for (int x = 0; x < p; ++x)
      if (poly_eval(f, x, p) == 0) return false;
    return true;
  }
  for (int d = 1; d <= n / 2; ++d) {
    for (const Poly& m : monic_irreducibles(d, p)) {
      if (poly_mod(f, m, p).empty()) return false;
    }
  }
  return true;
}

// Built-in modulus table: for each (p, n) the monic irreducible of degree n
// over F_p whose coefficient encoding sum(c_i * p^i) is smallest. Values are
// frozen so element encodings stay stable; a unit test re-verifies
// irreducibility of every entry.
struct TableEntry {
  int p;
  int n;
  std::array<int, 8> mod;  // c0..cn
};

constexpr TableEntry kModulusTable[] = {
    {2, 1, {0, 1}},          {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}}, {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {3, 1, {0, 1}},          {3, 2, {1, 0, 1}},          {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}}, {3, 5, {1, 2, 0, 0, 0, 1}}, {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
    {5, 1, {0, 1}},          {5, 2, {2, 0, 1}},          {5, 3, {1, 1, 0, 1}},
    {5, 4, {2, 0, 0, 0, 1}}, {5, 5, {1, 4, 0, 0, 0, 1}}, {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {7, 1, {0, 1}},          {7, 2, {1, 0, 1}},          {7, 3, {2, 0, 0, 1}},
    {7, 4, {1, 1, 0, 0, 1}}, {7, 5, {3, 1, 0, 0, 0, 1}}, {7, 6, {2, 0, 0, 0, 0, 0, 1}},
    {7, 7, {1, 6, 0, 0, 0, 0, 0, 1}},
    {11, 1, {0, 1}},          {11, 2, {1, 0, 1}},          {11, 3, {4, 1, 0, 1}},
    {11, 4, {2, 1, 0, 0, 1}}, {11, 5, {2, 0, 0, 0, 0, 1}}, {11, 6, {2, 1, 0, 0, 0, 0, 1}},
    {11, 7, {4, 1, 0, 0, 0, 0, 0, 1}},
    {13, 1, {0, 1}},          {13, 2, {2, 0, 1}},          {13, 3, {2, 0, 0, 1}},
    {13, 4, {2, 0, 0, 0, 1}}, {13, 5, {2, 4, 0, 0, 0, 1}}, {13, 6, {2, 0, 0, 0, 0, 0, 1}},
    {13, 7, {2, 3, 0, 0, 0, 0, 0, 1}},
};

std::vector<int> table_modulus(int p, int n) {
  for (const auto& e : kModulusTable) {
    if (e.p == p && e.n == n) {
      return std::vector<int>(e.mod.begin(), e.mod.begin() + n + 1);
    }
  }
  throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(p) + "^" +
                              std::to_string(n) + "); supply one explicitly");
}

// Interned field data: one immutable FieldData per distinct (p, n, modulus),
// kept alive for the whole process.
const FieldData* intern_field(int p, int n, const std::vector<int>& modulus_raw) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (n > 7) throw std::invalid_argument("extension degree > 7 is out of scope");
  if (static_cast<int>(modulus_raw.size()) != n + 1)
    throw std::invalid_argument("modulus must have exactly n+1 coefficients");

  std::vector<int> mod(n + 1);
  for (int i = 0; i <= n; ++i) mod[i] = ((modulus_raw[i] % p) + p) % p;
  if (mod[n] != 1) throw std::invalid_argument("modulus must be monic of degree n");
  if (!poly_irreducible(mod, p))
    throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));

  using Key = std::tuple<int, int, std::vector<int>>;
  static std::mutex mu;
  static auto* pool = new std::map<Key, const FieldData*>();

  std::lock_guard<std::mutex> lock(mu);
  Key key{p, n, mod};
  auto it = pool->find(key);
  if (it != pool->end()) return it->second;

  auto* d = new FieldData();
  d->p = p;
  d->n = n;
  d->q = 1;
  d->ppow[0] = 1;
  for (int i = 0; i < n; ++i) {
    d->q *= static_cast<uint64_t>(p);
    d->ppow[i + 1] = d->q;
  }
  for (int i = 0; i <= n; ++i) d->mod[i] = static_cast<uint8_t>(mod[i]);
  (*pool)[key] = d;
  return d;
}

using Coeffs = std::array<uint8_t, kMaxDeg>;

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(int p, int n) : d_(intern_field(p, n, table_modulus(p, n))) {}

Field::Field(int p, int n, const std::vector<int>& modulus)
    : d_(intern_field(p, n, modulus)) {}

int Field::p() const { return d_->p; }
int Field::n() const { return d_->n; }
uint64_t Field::order() const { return d_->q; }

std::vector<int> Field::modulus() const {
  return std::vector<int>(d_->mod.begin(), d_->mod.begin() + d_->n + 1);
}

std::string Field::header() const {
  std::ostringstream os;
  os << "field p=" << d_->p << " n=" << d_->n << " modulus=";
  for (int i = 0; i <= d_->n; ++i) {
    if (i) os << ',';
    os << static_cast<int>(d_->mod[i]);
  }
  return os.str();
}

FieldElem Field::zero() const { return FieldElem(d_, Coeffs{}); }

FieldElem Field::one() const {
  Coeffs c{};
  c[0] = 1;
  return FieldElem(d_, c);
}

FieldElem Field::from_int(int64_t v) const {
  Coeffs c{};
  c[0] = static_cast<uint8_t>(((v % d_->p) + d_->p) % d_->p);
  return FieldElem(d_, c);
}

FieldElem Field::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_->n)
    throw std::invalid_argument("coefficient vector longer than extension degree");
  Coeffs c{};
  for (size_t i = 0; i < coeffs.size(); ++i)
    c[i] = static_cast<uint8_t>(((coeffs[i] % d_->p) + d_->p) % d_->p);
  return FieldElem(d_, c);
}

FieldElem Field::decode(uint64_t code) const {
  if (code >= d_->q) throw std::invalid_argument("encode value out of range [0, q)");
  Coeffs c{};
  for (int i = 0; i < d_->n; ++i) {
    c[i] = static_cast<uint8_t>(code % d_->p);
    code /= d_->p;
  }
  return FieldElem(d_, c);
}

FieldElem Field::gen() const {
  Coeffs c{};
  if (d_->n == 1) {
    // t is reduced by the degree-1 modulus t + c0: class of t is -c0
    c[0] = static_cast<uint8_t>((d_->p - d_->mod[0]) % d_->p);
  } else {
    c[1] = 1;
  }
  return FieldElem(d_, c);
}

std::vector<FieldElem> Field::elements() const {
  if (d_->q > (1u << 20))
    throw std::invalid_argument("field too large to enumerate");
  std::vector<FieldElem> out;
  out.reserve(d_->q);
  for (uint64_t code = 0; code < d_->q; ++code) out.push_back(decode(code));
  return out;
}

std::vector<FieldElem> Field::span(const std::vector<FieldElem>& basis) const {
  std::vector<uint64_t> codes{0};
  for (const FieldElem& b : basis) {
    if (b.d_ != d_) throw std::invalid_argument("basis element from a different field");
    std::vector<uint64_t> next;
    FieldElem scaled = zero();
    for (int k = 0; k < d_->p; ++k) {
      for (uint64_t s : codes) next.push_back((decode(s) + scaled).encode());
      scaled = scaled + b;
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    codes = std::move(next);
  }
  std::vector<FieldElem> out;
  out.reserve(codes.size());
  for (uint64_t s : codes) out.push_back(decode(s));
  return out;
}

Field parse_field_header(const std::string& line, int line_no) {
  std::istringstream is(line);
  std::string tag, ptok, ntok, mtok;
  is >> tag >> ptok >> ntok >> mtok;
  std::string rest;
  if (tag != "field" || ptok.rfind("p=", 0) != 0 || ntok.rfind("n=", 0) != 0 ||
      mtok.rfind("modulus=", 0) != 0 || (is >> rest))
    throw ParseError(line_no, "expected 'field p=<p> n=<n> modulus=<c0,c1,...,cn>'");
  int p = 0, n = 0;
  std::vector<int> mod;
  try {
    p = std::stoi(ptok.substr(2));
    n = std::stoi(ntok.substr(2));
    std::istringstream ms(mtok.substr(8));
    std::string item;
    while (std::getline(ms, item, ',')) mod.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw ParseError(line_no, "malformed number in field header");
  }
  try {
    return Field(p, n, mod);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, std::string("bad field header: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// FieldElem

Field FieldElem::field() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  return Field(d_);
}

bool FieldElem::is_zero() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  for (int i = 0; i < d_->n; ++i)
    if (c_[i]) return false;
  return true;
}

uint64_t FieldElem::encode() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  uint64_t v = 0;
  for (int i = 0; i < d_->n; ++i) v += c_[i] * d_->ppow[i];
  return v;
}

std::vector<int> FieldElem::coords() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  return std::vector<int>(c_.begin(), c_.begin() + d_->n);
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (d_ != o.d_) return false;
  if (!d_) return true;
  for (int i = 0; i < d_->n; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

namespace {

const FieldData* check_pair(const FieldData* da, const FieldData* db) {
  if (!da || !db) throw std::invalid_argument("uninitialized field element");
  if (da != db) throw std::invalid_argument("elements belong to different fields");
  return da;
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const FieldData* d = check_pair(a.d_, b.d_);
  FieldElem r(d, {});
  for (int i = 0; i < d->n; ++i) {
    int v = a.c_[i] + b.c_[i];
    r.c_[i] = static_cast<uint8_t>(v >= d->p ? v - d->p : v);
  }
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  const FieldData* d = check_pair(a.d_, b.d_);
  FieldElem r(d, {});
  for (int i = 0; i < d->n; ++i) {
    int v = a.c_[i] - b.c_[i];
    r.c_[i] = static_cast<uint8_t>(v < 0 ? v + d->p : v);
  }
  return r;
}

FieldElem FieldElem::operator-() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  FieldElem r(d_, {});
  for (int i = 0; i < d_->n; ++i) r.c_[i] = static_cast<uint8_t>(c_[i] ? d_->p - c_[i] : 0);
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const FieldData* d = check_pair(a.d_, b.d_);
  const int n = d->n, p = d->p;
  // schoolbook product, then reduction by the monic modulus
  std::array<int, 2 * FieldElem::kMaxDeg> prod{};
  for (int i = 0; i < n; ++i) {
    if (!a.c_[i]) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    int c = prod[k] % p;
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) {
      prod[k - n + i] -= c * d->mod[i];
    }
  }
  FieldElem r(d, {});
  for (int i = 0; i < n; ++i) r.c_[i] = static_cast<uint8_t>(((prod[i] % p) + p) % p);
  return r;
}

FieldElem FieldElem::pow(uint64_t e) const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  FieldElem base = *this;
  FieldElem acc = Field(d_).one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElem FieldElem::inv() const {
  if (!d_) throw std::invalid_argument("uninitialized field element");
  if (is_zero()) throw std::invalid_argument("inversion of zero");
  // extended Euclid in F_p[t] on (modulus, this)
  const int p = d_->p;
  auto reduce = [p](int v) { return ((v % p) + p) % p; };
  std::vector<int> r0(d_->mod.begin(), d_->mod.begin() + d_->n + 1);
  std::vector<int> r1(c_.begin(), c_.begin() + d_->n);
  std::vector<int> s0{0}, s1{1};  // cofactors of *this*
  auto deg = [](const std::vector<int>& a) {
    int dg = -1;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i]) dg = static_cast<int>(i);
    return dg;
  };
  auto inv_mod_p = [&](int a) {
    a = reduce(a);
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw std::logic_error("no inverse mod p");
  };
  while (true) {
    int d1 = deg(r1);
    if (d1 < 0) throw std::logic_error("gcd with irreducible modulus must be a unit");
    if (d1 == 0) break;
    int d0 = deg(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // kill the leading term of r0 with r1
    int c = reduce(r0[d0] * inv_mod_p(r1[d1]));
    int shift = d0 - d1;
    if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
    for (int i = 0; i <= d1; ++i) r0[shift + i] = reduce(r0[shift + i] - c * r1[i]);
    for (size_t i = 0; i < s1.size(); ++i) s0[shift + i] = reduce(s0[shift + i] - c * s1[i]);
    if (deg(r0) < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  // r1 is a nonzero constant; this * s1 == r1 (mod modulus)
  int scale = inv_mod_p(r1[0]);
  FieldElem out(d_, {});
  for (size_t i = 0; i < s1.size() && static_cast<int>(i) < d_->n; ++i)
    out.c_[i] = static_cast<uint8_t>(reduce(s1[i] * scale));
  return out;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

std::string FieldElem::str() const { return std::to_string(encode()); }

}  // namespace tripoints

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "tripoints/arrange.hpp"

namespace tripoints {

using Triple = std::array<int64_t, 3>;  // strictly increasing

/// Ground set of labels plus a set of 3-element blocks, stored canonically:
/// each triple sorted, triples sorted lexicographically, no duplicates.
class TripleSystem {
 public:
  TripleSystem(std::vector<int64_t> ground, std::vector<Triple> triples);

  const std::vector<int64_t>& ground() const { return ground_; }
  const std::vector<Triple>& triples() const { return triples_; }
  bool has_triple(int64_t a, int64_t b, int64_t c) const;
  size_t degree(int64_t label) const;

  bool operator==(const TripleSystem& o) const {
    return ground_ == o.ground_ && triples_ == o.triples_;
  }
  bool operator!=(const TripleSystem& o) const { return !(*this == o); }

 private:
  std::vector<int64_t> ground_;  // sorted
  std::vector<Triple> triples_;
};

/// Collinearity triples of an audited arrangement: ground = line labels,
/// blocks = label sets of the triple points.
TripleSystem from_arrangement(const Arrangement& a, const SingularitySpectrum& s);

/// Zero-sum triples {a, b, c}, a + b + c = 0, over a characteristic-3 field;
/// labels are element encodings.
TripleSystem make_zero_sum_triples(const Field& field);

/// Triples {a, b, a + b} of distinct nonzero elements over a
/// characteristic-2 field of order >= 4.
TripleSystem make_sum_triples(const Field& field);

/// Triples {u, v, u xor v} on the nonzero vectors of (F_2)^n, labeled by
/// their integer values 1 .. 2^n - 1. Requires n >= 2.
TripleSystem make_projection_matroid(int n);

/// True when every 2-subset of the ground set lies in exactly one triple.
bool is_steiner(const TripleSystem& ts);

using LabelMap = std::map<int64_t, int64_t>;

/// Label bijection sending triples onto triples, exactly; nullopt when the
/// systems are not isomorphic. Deterministic backtracking over degree
/// profiles with forced-completion propagation.
std::optional<LabelMap> isomorphic(const TripleSystem& a, const TripleSystem& b);

/// Check that `m` is a bijection a.ground() -> b.ground() mapping the triple
/// set of `a` exactly onto that of `b`.
bool verify_label_map(const TripleSystem& a, const TripleSystem& b, const LabelMap& m);

struct AutomorphismInfo {
  uint64_t order;
  std::vector<LabelMap> generators;  // may be empty when tracking was abandoned
  bool generators_complete;          // generators generate the full group
};

/// Exact order of the automorphism group by exhaustive search (ground size
/// capped at 31), plus a best-effort generating set.
AutomorphismInfo automorphism_group(const TripleSystem& ts);

/// Induced system on a subset of the ground set: the triples fully inside it.
TripleSystem restrict_to(const TripleSystem& ts, const std::vector<int64_t>& subset);

TripleSystem read_triple_system(std::istream& in);
void write_triple_system(std::ostream& out, const TripleSystem& ts);

}  // namespace tripoints

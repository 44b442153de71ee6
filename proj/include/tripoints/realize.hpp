#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tripoints/projplane.hpp"
#include "tripoints/triples.hpp"

namespace tripoints {

enum class RealizeStatus { realizable, unrealizable, unknown };

const char* realize_status_name(RealizeStatus s);

/// Exhaustive-search envelope: beyond these sizes a search only runs in
/// best-effort mode and never reports "unrealizable".
constexpr size_t kRealizeGroundCap = 31;
constexpr uint64_t kRealizeFieldCap = 27;

struct RealizeOptions {
  bool count_all = false;    // enumerate every frame-fixed embedding
  bool best_effort = false;  // run beyond the caps; exhaustion is not claimed
  uint64_t node_limit = 0;   // abort after this many branch placements (0 = off)
};

/// Injective map from ground labels to points with collinear triples exactly
/// the system's triples.
struct Realization {
  std::map<int64_t, ProjPoint> points;
};

struct RealizeResult {
  RealizeStatus status = RealizeStatus::unknown;
  std::vector<Realization> witnesses;  // one (or all with count_all)
  uint64_t witness_count = 0;
  uint64_t nodes = 0;   // branch placements tried
  uint64_t forced = 0;  // placements forced by propagation
  std::string normalization;  // how coordinates were pinned
};

/// Lexicographically first 4-subset of the ground set containing no triple,
/// i.e. labels that any realization sends to a projective frame.
std::optional<std::array<int64_t, 4>> find_frame(const TripleSystem& ts);

/// Decide whether the system embeds in P^2 over the field. A frame found by
/// find_frame is pinned to (1:0:0), (0:1:0), (0:0:1), (1:1:1), which kills
/// the PGL_3 action; without one, a maximal greedy general-position prefix
/// of the ground set is pinned to a prefix of those points and the witness
/// count is taken over the remaining free labels.
RealizeResult realize_over(const TripleSystem& ts, const Field& field,
                           const RealizeOptions& opts = {});

/// Full re-check of a witness: label map injective, every 3-subset collinear
/// exactly when it is a triple.
bool verify_realization(const TripleSystem& ts, const Realization& r);

/// Polynomial presentation of the realization conditions: one 3x3
/// determinant per triple (must vanish) and per non-triple 3-subset (must
/// not). With normalize, the find_frame labels are substituted by the
/// standard frame coordinates and their variables disappear. Requires
/// nonnegative labels.
std::string export_ideal(const TripleSystem& ts, bool normalize);

}  // namespace tripoints

#include "tripoints/realize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dense_index.hpp"

namespace tripoints {

const char* realize_status_name(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::realizable: return "REALIZABLE";
    case RealizeStatus::unrealizable: return "UNREALIZABLE";
    case RealizeStatus::unknown: return "UNKNOWN";
  }
  return "?";
}

std::optional<std::array<int64_t, 4>> find_frame(const TripleSystem& ts) {
  const auto& g = ts.ground();
  const int m = static_cast<int>(g.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (ts.has_triple(g[i], g[j], g[k])) continue;
        for (int l = k + 1; l < m; ++l) {
          if (ts.has_triple(g[i], g[j], g[l]) || ts.has_triple(g[i], g[k], g[l]) ||
              ts.has_triple(g[j], g[k], g[l])) {
            continue;
          }
          return std::array<int64_t, 4>{g[i], g[j], g[k], g[l]};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

using detail::DenseIndex;

struct Solver {
  const DenseIndex& D;
  const std::vector<ProjPoint>& pts;
  std::vector<int> pos;        // label idx -> point idx, -1 unplaced
  std::vector<bool> used;      // by point idx
  std::vector<int> trail;      // placement order
  std::vector<int> cnt2;       // fully placed partner pairs per label
  bool count_all = false;
  uint64_t node_limit = 0;
  bool aborted = false;
  uint64_t nodes = 0, forced = 0, found = 0;
  std::vector<std::vector<int>> witnesses;

  Solver(const DenseIndex& d, const std::vector<ProjPoint>& p)
      : D(d), pts(p), pos(d.m, -1), used(p.size(), false), cnt2(d.m, 0) {}

  bool can_place(int u, int pidx) const {
    if (used[pidx]) return false;
    const ProjPoint& P = pts[pidx];
    // Collinearity demands of u's triples first: they cut hardest.
    for (const auto& [a, b] : D.prs[u]) {
      if (pos[a] != -1 && pos[b] != -1 &&
          !collinear(P, pts[pos[a]], pts[pos[b]])) {
        return false;
      }
    }
    // Every other placed pair must stay off a common line with P.
    for (size_t i = 0; i < trail.size(); ++i) {
      for (size_t j = i + 1; j < trail.size(); ++j) {
        int a = trail[i], b = trail[j];
        if (D.triple(u, a, b)) continue;
        if (collinear(P, pts[pos[a]], pts[pos[b]])) return false;
      }
    }
    return true;
  }

  void place(int u, int pidx) {
    pos[u] = pidx;
    used[pidx] = true;
    trail.push_back(u);
    for (const auto& [a, b] : D.prs[u]) {
      if (pos[a] != -1 && pos[b] == -1) cnt2[b] += 1;
      if (pos[b] != -1 && pos[a] == -1) cnt2[a] += 1;
    }
  }

  void unplace_to(size_t mark) {
    while (trail.size() > mark) {
      int u = trail.back();
      for (const auto& [a, b] : D.prs[u]) {
        if (pos[a] != -1 && pos[b] == -1) cnt2[b] -= 1;
        if (pos[b] != -1 && pos[a] == -1) cnt2[a] -= 1;
      }
      used[pos[u]] = false;
      pos[u] = -1;
      trail.pop_back();
    }
  }

  // Place every label pinned down by two distinct chords; false on conflict.
  bool propagate() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int u = 0; u < D.m; ++u) {
        if (pos[u] != -1 || cnt2[u] < 2) continue;
        std::optional<ProjLine> first;
        std::optional<ProjPoint> target;
        for (const auto& [a, b] : D.prs[u]) {
          if (pos[a] == -1 || pos[b] == -1) continue;
          ProjLine l = join(pts[pos[a]], pts[pos[b]]);
          if (!first) {
            first = l;
          } else if (l != *first) {
            target = meet(l, *first);
            break;
          }
        }
        if (!target) continue;  // all chords coincide: only a line constraint
        auto it = std::lower_bound(pts.begin(), pts.end(), *target);
        int pidx = static_cast<int>(it - pts.begin());
        if (!can_place(u, pidx)) return false;
        place(u, pidx);
        ++forced;
        progress = true;
      }
    }
    return true;
  }

  int pick() const {
    int best = -1;
    for (int u = 0; u < D.m; ++u) {
      if (pos[u] != -1) continue;
      if (best == -1 || cnt2[u] > cnt2[best] ||
          (cnt2[u] == cnt2[best] && cnt2[best] == 0 && D.deg[u] > D.deg[best])) {
        best = u;
      }
    }
    return best;
  }

  // Returns true to stop the whole search.
  bool dfs() {
    if (static_cast<int>(trail.size()) == D.m) {
      ++found;
      witnesses.push_back(pos);
      return !count_all;
    }
    int u = pick();
    std::optional<ProjLine> line;
    if (cnt2[u] > 0) {
      for (const auto& [a, b] : D.prs[u]) {
        if (pos[a] != -1 && pos[b] != -1) {
          line = join(pts[pos[a]], pts[pos[b]]);
          break;
        }
      }
    }
    for (int pidx = 0; pidx < static_cast<int>(pts.size()); ++pidx) {
      if (line && !line->contains(pts[pidx])) continue;
      if (!can_place(u, pidx)) continue;
      ++nodes;
      if (node_limit && nodes > node_limit) {
        aborted = true;
        return true;
      }
      size_t mark = trail.size();
      place(u, pidx);
      if (propagate() && dfs()) return true;
      unplace_to(mark);
    }
    return false;
  }
};

}  // namespace

RealizeResult realize_over(const TripleSystem& ts, const Field& field,
                           const RealizeOptions& opts) {
  const size_t m = ts.ground().size();
  if (m < 3) throw std::invalid_argument("realize_over: ground set smaller than 3");
  const bool beyond_caps = m > kRealizeGroundCap || field.order() > kRealizeFieldCap;
  if (beyond_caps && !opts.best_effort) {
    throw std::invalid_argument(
        "realize_over: beyond the exhaustive caps (ground <= 31, field order <= 27); "
        "use best_effort");
  }

  DenseIndex d(ts);
  std::vector<ProjPoint> pts = all_points(field);
  Solver s(d, pts);
  s.count_all = opts.count_all;
  s.node_limit = opts.node_limit;

  RealizeResult res;

  // Pin a frame (or a maximal general-position prefix) to fixed coordinates.
  std::vector<int> pinned;
  std::vector<ProjPoint> coords;
  {
    FieldElem c0 = field.zero(), c1 = field.one();
    ProjPoint std4[4] = {ProjPoint(c1, c0, c0), ProjPoint(c0, c1, c0),
                         ProjPoint(c0, c0, c1), ProjPoint(c1, c1, c1)};
    std::ostringstream note;
    if (auto frame = find_frame(ts)) {
      note << "frame {";
      for (int i = 0; i < 4; ++i) {
        pinned.push_back(d.idx((*frame)[i]));
        coords.push_back(std4[i]);
        note << ((i == 0) ? "" : ",") << (*frame)[i];
      }
      note << "} -> (1:0:0),(0:1:0),(0:0:1),(1:1:1)";
    } else {
      // Greedy general-position prefix of the ground set, at most 3 labels.
      std::vector<int> chosen;
      for (int u = 0; u < d.m && chosen.size() < 3; ++u) {
        bool ok = true;
        for (size_t i = 0; i < chosen.size() && ok; ++i) {
          for (size_t j = i + 1; j < chosen.size() && ok; ++j) {
            if (d.triple(u, chosen[i], chosen[j])) ok = false;
          }
        }
        if (ok) chosen.push_back(u);
      }
      note << "no 4-label frame; partial frame {";
      for (size_t i = 0; i < chosen.size(); ++i) {
        pinned.push_back(chosen[i]);
        coords.push_back(std4[i]);
        note << ((i == 0) ? "" : ",") << d.labels[chosen[i]];
      }
      note << "} -> standard points";
    }
    res.normalization = note.str();
  }

  bool pin_conflict = false;
  for (size_t i = 0; i < pinned.size(); ++i) {
    auto it = std::lower_bound(pts.begin(), pts.end(), coords[i]);
    int pidx = static_cast<int>(it - pts.begin());
    // Defensive: the pinned labels span no triple and the standard points
    // are in general position, so this cannot fail.
    if (!s.can_place(pinned[i], pidx)) {
      pin_conflict = true;
      break;
    }
    s.place(pinned[i], pidx);
  }

  if (!pin_conflict && s.propagate()) {
    s.dfs();
  }

  res.nodes = s.nodes;
  res.forced = s.forced;
  res.witness_count = s.found;
  for (const auto& w : s.witnesses) {
    Realization r;
    for (int u = 0; u < d.m; ++u) r.points.emplace(d.labels[u], pts[w[u]]);
    if (!verify_realization(ts, r)) {
      throw std::logic_error("realize_over: witness failed re-check");
    }
    res.witnesses.push_back(std::move(r));
  }

  if (s.found > 0) {
    res.status = RealizeStatus::realizable;
  } else if (s.aborted || beyond_caps) {
    res.status = RealizeStatus::unknown;
  } else {
    res.status = RealizeStatus::unrealizable;
  }
  return res;
}

bool verify_realization(const TripleSystem& ts, const Realization& r) {
  const auto& g = ts.ground();
  std::vector<const ProjPoint*> p;
  p.reserve(g.size());
  for (int64_t x : g) {
    auto it = r.points.find(x);
    if (it == r.points.end()) return false;
    p.push_back(&it->second);
  }
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (*p[i] == *p[j]) return false;
    }
  }
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = i + 1; j < p.size(); ++j) {
      for (size_t k = j + 1; k < p.size(); ++k) {
        bool col = collinear(*p[i], *p[j], *p[k]);
        if (col != ts.has_triple(g[i], g[j], g[k])) return false;
      }
    }
  }
  return true;
}

namespace {

struct IdealRow {
  bool pinned = false;
  int coords[3] = {0, 0, 0};  // when pinned
  std::string var[3];         // when free, indexed by column
};

std::string det_string(const IdealRow& r0, const IdealRow& r1, const IdealRow& r2) {
  static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static const int sign[6] = {1, -1, -1, 1, 1, -1};
  const IdealRow* rows[3] = {&r0, &r1, &r2};

  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < 6; ++t) {
    // Column-major term: column c takes row perm[t][c], so factors read
    // x.. * y.. * z.. .
    std::vector<std::string> factors;
    bool zero = false;
    for (int c = 0; c < 3 && !zero; ++c) {
      const IdealRow& r = *rows[perm[t][c]];
      if (r.pinned) {
        if (r.coords[c] == 0) zero = true;
      } else {
        factors.push_back(r.var[c]);
      }
    }
    if (zero) continue;
    std::string mono = factors.empty() ? "1" : factors[0];
    for (size_t i = 1; i < factors.size(); ++i) mono += "*" + factors[i];
    if (first) {
      if (sign[t] < 0) os << '-';
      os << mono;
      first = false;
    } else {
      os << (sign[t] < 0 ? " - " : " + ") << mono;
    }
  }
  if (first) throw std::logic_error("det_string: vanished identically");
  return os.str();
}

}  // namespace

std::string export_ideal(const TripleSystem& ts, bool normalize) {
  const auto& g = ts.ground();
  for (int64_t x : g) {
    if (x < 0) throw std::invalid_argument("export_ideal: negative labels unsupported");
  }

  static const int std4[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  std::map<int64_t, const int*> pin;
  if (normalize) {
    auto frame = find_frame(ts);
    if (!frame) {
      throw std::invalid_argument("export_ideal: no 4-label frame to normalize against");
    }
    for (int i = 0; i < 4; ++i) pin[(*frame)[i]] = std4[i];
  }

  std::map<int64_t, IdealRow> rows;
  std::ostringstream vars;
  bool first_var = true;
  for (int64_t x : g) {
    IdealRow r;
    auto it = pin.find(x);
    if (it != pin.end()) {
      r.pinned = true;
      for (int i = 0; i < 3; ++i) r.coords[i] = it->second[i];
    } else {
      r.pinned = false;
      const char* names = "xyz";
      for (int i = 0; i < 3; ++i) {
        r.var[i] = std::string(1, names[i]) + std::to_string(x);
        vars << (first_var ? "" : ",") << r.var[i];
        first_var = false;
      }
    }
    rows.emplace(x, std::move(r));
  }

  std::ostringstream os;
  os << "ring vars=" << vars.str() << '\n';
  os << "== vanishing ==\n";
  for (const auto& t : ts.triples()) {
    os << det_string(rows.at(t[0]), rows.at(t[1]), rows.at(t[2])) << '\n';
  }
  os << "== nonvanishing ==\n";
  const int m = static_cast<int>(g.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (ts.has_triple(g[i], g[j], g[k])) continue;
        os << det_string(rows.at(g[i]), rows.at(g[j]), rows.at(g[k])) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace tripoints

#include "tripoints/triples.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dense_index.hpp"
#include "tripoints/errors.hpp"

namespace tripoints {

TripleSystem::TripleSystem(std::vector<int64_t> ground, std::vector<Triple> triples)
    : ground_(std::move(ground)), triples_(std::move(triples)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
    throw std::invalid_argument("TripleSystem: duplicate ground label");
  }
  for (auto& t : triples_) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw std::invalid_argument("TripleSystem: repeated label in a triple");
    }
    for (int64_t x : t) {
      if (!std::binary_search(ground_.begin(), ground_.end(), x)) {
        throw std::invalid_argument("TripleSystem: triple label " + std::to_string(x) +
                                    " not in ground set");
      }
    }
  }
  std::sort(triples_.begin(), triples_.end());
  if (std::adjacent_find(triples_.begin(), triples_.end()) != triples_.end()) {
    throw std::invalid_argument("TripleSystem: duplicate triple");
  }
}

bool TripleSystem::has_triple(int64_t a, int64_t b, int64_t c) const {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

size_t TripleSystem::degree(int64_t label) const {
  size_t n = 0;
  for (const auto& t : triples_) {
    if (t[0] == label || t[1] == label || t[2] == label) ++n;
  }
  return n;
}

TripleSystem from_arrangement(const Arrangement& a, const SingularitySpectrum& s) {
  std::vector<int64_t> ground;
  for (const auto& ll : a.lines()) ground.push_back(ll.label);
  std::vector<Triple> triples;
  for (const auto& sp : s.points()) {
    if (sp.labels.size() > 3) {
      throw std::invalid_argument("from_arrangement: point of multiplicity > 3");
    }
    if (sp.labels.size() == 3) {
      triples.push_back({sp.labels[0], sp.labels[1], sp.labels[2]});
    }
  }
  return TripleSystem(std::move(ground), std::move(triples));
}

TripleSystem make_zero_sum_triples(const Field& field) {
  if (field.p() != 3) {
    throw std::invalid_argument("make_zero_sum_triples: characteristic must be 3");
  }
  std::vector<int64_t> ground;
  std::vector<Triple> triples;
  auto elems = field.elements();
  for (const auto& e : elems) ground.push_back(static_cast<int64_t>(e.encode()));
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      FieldElem c = -(elems[i] + elems[j]);
      if (c == elems[i] || c == elems[j]) continue;
      int64_t ci = static_cast<int64_t>(c.encode());
      int64_t ai = static_cast<int64_t>(elems[i].encode());
      int64_t bi = static_cast<int64_t>(elems[j].encode());
      if (ci > bi) triples.push_back({ai, bi, ci});
    }
  }
  return TripleSystem(std::move(ground), std::move(triples));
}

TripleSystem make_sum_triples(const Field& field) {
  if (field.p() != 2 || field.order() < 4) {
    throw std::invalid_argument("make_sum_triples: need characteristic 2, q >= 4");
  }
  std::vector<int64_t> ground;
  std::vector<Triple> triples;
  auto elems = field.elements();
  for (const auto& e : elems) {
    if (!e.is_zero()) ground.push_back(static_cast<int64_t>(e.encode()));
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero()) continue;
    for (size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[j].is_zero()) continue;
      FieldElem c = elems[i] + elems[j];  // == -(a + b) in characteristic 2
      int64_t ci = static_cast<int64_t>(c.encode());
      int64_t bi = static_cast<int64_t>(elems[j].encode());
      if (ci > bi) {
        triples.push_back({static_cast<int64_t>(elems[i].encode()), bi, ci});
      }
    }
  }
  return TripleSystem(std::move(ground), std::move(triples));
}

TripleSystem make_projection_matroid(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("make_projection_matroid: need 2 <= n <= 10");
  int64_t top = (int64_t{1} << n) - 1;
  std::vector<int64_t> ground;
  for (int64_t v = 1; v <= top; ++v) ground.push_back(v);
  std::vector<Triple> triples;
  for (int64_t u = 1; u <= top; ++u) {
    for (int64_t v = u + 1; v <= top; ++v) {
      int64_t w = u ^ v;
      if (w > v) triples.push_back({u, v, w});
    }
  }
  return TripleSystem(std::move(ground), std::move(triples));
}

bool is_steiner(const TripleSystem& ts) {
  const auto& g = ts.ground();
  if (g.size() < 3) return false;
  std::map<std::pair<int64_t, int64_t>, int> cover;
  for (const auto& t : ts.triples()) {
    cover[{t[0], t[1]}] += 1;
    cover[{t[0], t[2]}] += 1;
    cover[{t[1], t[2]}] += 1;
  }
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      auto it = cover.find({g[i], g[j]});
      if (it == cover.end() || it->second != 1) return false;
    }
  }
  return true;
}

namespace {

using Dense = detail::DenseIndex;
using Perm = std::vector<uint8_t>;

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Backtracking label-map search between two Dense systems. Branches on the
// unassigned label with the most fully-assigned partner pairs (candidates
// then come from a single third_list), falling back to max degree.
struct MapSearch {
  const Dense& A;
  const Dense& B;
  std::vector<int> img, pre;
  std::vector<int> cnt2;  // per A-label: #triples with both partners assigned
  std::vector<int> order; // assignment trail
  bool count_all = false;
  uint64_t found = 0;
  // Generator tracking (automorphism use only).
  bool track_gens = false;
  bool gens_complete = true;
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> closure;
  static constexpr size_t kClosureCap = size_t{1} << 21;

  MapSearch(const Dense& a, const Dense& b)
      : A(a), B(b), img(a.m, -1), pre(b.m, -1), cnt2(a.m, 0) {}

  bool can_assign(int u, int v) const {
    if (pre[v] != -1) return false;
    if (A.deg[u] != B.deg[v]) return false;
    for (const auto& [a, b] : A.prs[u]) {
      if (img[a] != -1 && img[b] != -1 && !B.triple(v, img[a], img[b])) return false;
    }
    return true;
  }

  void assign(int u, int v) {
    img[u] = v;
    pre[v] = u;
    order.push_back(u);
    for (const auto& [a, b] : A.prs[u]) {
      if (img[a] != -1 && img[b] == -1) cnt2[b] += 1;
      if (img[b] != -1 && img[a] == -1) cnt2[a] += 1;
    }
  }

  void unassign(int u) {
    for (const auto& [a, b] : A.prs[u]) {
      if (img[a] != -1 && img[b] == -1) cnt2[b] -= 1;
      if (img[b] != -1 && img[a] == -1) cnt2[a] -= 1;
    }
    pre[img[u]] = -1;
    img[u] = -1;
    order.pop_back();
  }

  int pick() const {
    int best = -1;
    for (int u = 0; u < A.m; ++u) {
      if (img[u] != -1) continue;
      if (best == -1 || cnt2[u] > cnt2[best] ||
          (cnt2[u] == cnt2[best] && cnt2[best] == 0 && A.deg[u] > A.deg[best])) {
        best = u;
      }
    }
    return best;
  }

  // Returns true to stop the whole search (first-witness mode).
  bool dfs() {
    if (static_cast<int>(order.size()) == A.m) {
      ++found;
      if (track_gens) record_witness();
      return !count_all;
    }
    int u = pick();
    if (cnt2[u] > 0) {
      // Candidates must complete some fully-assigned pair of u.
      const std::pair<int, int>* done = nullptr;
      for (const auto& pr : A.prs[u]) {
        if (img[pr.first] != -1 && img[pr.second] != -1) {
          done = &pr;
          break;
        }
      }
      for (int v : B.third_list(img[done->first], img[done->second])) {
        if (!can_assign(u, v)) continue;
        assign(u, v);
        if (dfs()) return true;
        unassign(u);
      }
    } else {
      for (int v = 0; v < B.m; ++v) {
        if (!can_assign(u, v)) continue;
        assign(u, v);
        if (dfs()) return true;
        unassign(u);
      }
    }
    return false;
  }

  void record_witness() {
    if (!track_gens || !gens_complete) return;
    Perm w(img.begin(), img.end());
    if (closure.count(w)) return;
    gens.push_back(w);
    // Re-close under the enlarged generating set.
    std::vector<Perm> queue(closure.begin(), closure.end());
    queue.push_back(w);
    closure.insert(w);
    while (!queue.empty()) {
      Perm s = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : gens) {
        Perm t(s.size());
        for (size_t i = 0; i < s.size(); ++i) t[i] = g[s[i]];
        if (closure.insert(t).second) queue.push_back(t);
        if (closure.size() > kClosureCap) {
          gens_complete = false;
          gens.clear();
          closure.clear();
          return;
        }
      }
    }
  }
};

bool same_degree_profile(const Dense& a, const Dense& b) {
  std::vector<int> da = a.deg, db = b.deg;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

}  // namespace

std::optional<LabelMap> isomorphic(const TripleSystem& a, const TripleSystem& b) {
  if (a.ground().size() != b.ground().size()) return std::nullopt;
  if (a.triples().size() != b.triples().size()) return std::nullopt;
  Dense da(a), db(b);
  if (!same_degree_profile(da, db)) return std::nullopt;

  MapSearch s(da, db);
  if (da.m == 0 || s.dfs()) {
    LabelMap m;
    for (int u = 0; u < da.m; ++u) m[da.labels[u]] = db.labels[s.img[u]];
    if (da.m > 0 && !verify_label_map(a, b, m)) {
      throw std::logic_error("isomorphic: witness failed re-check");
    }
    return m;
  }
  return std::nullopt;
}

bool verify_label_map(const TripleSystem& a, const TripleSystem& b, const LabelMap& m) {
  if (m.size() != a.ground().size() || a.ground().size() != b.ground().size()) {
    return false;
  }
  std::set<int64_t> image;
  for (int64_t x : a.ground()) {
    auto it = m.find(x);
    if (it == m.end()) return false;
    if (!std::binary_search(b.ground().begin(), b.ground().end(), it->second)) return false;
    if (!image.insert(it->second).second) return false;
  }
  std::vector<Triple> mapped;
  for (const auto& t : a.triples()) {
    Triple u{m.at(t[0]), m.at(t[1]), m.at(t[2])};
    std::sort(u.begin(), u.end());
    mapped.push_back(u);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.triples();
}

AutomorphismInfo automorphism_group(const TripleSystem& ts) {
  if (ts.ground().size() > 31) {
    throw std::invalid_argument("automorphism_group: ground set larger than 31");
  }
  Dense d(ts);
  MapSearch s(d, d);
  s.count_all = true;
  s.track_gens = true;
  // Seed the closure with the identity so it is never reported as a generator.
  Perm id(d.m);
  for (int i = 0; i < d.m; ++i) id[i] = static_cast<uint8_t>(i);
  s.closure.insert(id);
  if (d.m > 0) s.dfs();

  AutomorphismInfo info;
  info.order = (d.m == 0) ? 1 : s.found;
  info.generators_complete = s.gens_complete && (!s.track_gens || s.closure.size() == info.order);
  for (const auto& g : s.gens) {
    LabelMap m;
    for (int i = 0; i < d.m; ++i) m[d.labels[i]] = d.labels[g[i]];
    if (!verify_label_map(ts, ts, m)) {
      throw std::logic_error("automorphism_group: generator failed re-check");
    }
    info.generators.push_back(std::move(m));
  }
  return info;
}

TripleSystem restrict_to(const TripleSystem& ts, const std::vector<int64_t>& subset) {
  std::vector<int64_t> ground = subset;
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw std::invalid_argument("restrict_to: duplicate label in subset");
  }
  for (int64_t x : ground) {
    if (!std::binary_search(ts.ground().begin(), ts.ground().end(), x)) {
      throw std::invalid_argument("restrict_to: label " + std::to_string(x) +
                                  " not in ground set");
    }
  }
  std::vector<Triple> triples;
  for (const auto& t : ts.triples()) {
    bool inside = true;
    for (int64_t x : t) {
      if (!std::binary_search(ground.begin(), ground.end(), x)) {
        inside = false;
        break;
      }
    }
    if (inside) triples.push_back(t);
  }
  return TripleSystem(std::move(ground), std::move(triples));
}

TripleSystem read_triple_system(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing ground line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream hs(line);
  std::string kw;
  hs >> kw;
  if (kw != "ground") throw ParseError(1, "expected 'ground <labels...>'");
  std::vector<int64_t> ground;
  int64_t v;
  while (hs >> v) {
    if (!ground.empty() && v <= ground.back()) {
      throw ParseError(1, "ground labels must be strictly increasing");
    }
    ground.push_back(v);
  }
  if (!hs.eof()) throw ParseError(1, "bad ground label");

  std::vector<Triple> triples;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError(line_no, "empty line");
    std::istringstream is(line);
    Triple t;
    std::string extra;
    if (!(is >> t[0] >> t[1] >> t[2]) || (is >> extra)) {
      throw ParseError(line_no, "expected '<a> <b> <c>'");
    }
    if (!(t[0] < t[1] && t[1] < t[2])) {
      throw ParseError(line_no, "triple not in increasing order");
    }
    if (!triples.empty() && !(triples.back() < t)) {
      throw ParseError(line_no, "triples out of order or duplicated");
    }
    triples.push_back(t);
  }
  try {
    return TripleSystem(std::move(ground), std::move(triples));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

void write_triple_system(std::ostream& out, const TripleSystem& ts) {
  out << "ground";
  for (int64_t x : ts.ground()) out << ' ' << x;
  out << '\n';
  for (const auto& t : ts.triples()) {
    out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

}  // namespace tripoints

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tripoints/triples.hpp"

namespace tripoints::detail {

// Index-space view of a triple system shared by the search engines.
struct DenseIndex {
  int m = 0;
  std::vector<int64_t> labels;                        // index -> label
  std::vector<int> deg;                               // triples per label
  std::vector<std::vector<int>> thirds;               // (a*m+b) -> sorted c list
  std::vector<std::vector<std::pair<int, int>>> prs;  // per label: partner pairs

  explicit DenseIndex(const TripleSystem& ts) {
    labels = ts.ground();
    m = static_cast<int>(labels.size());
    deg.assign(m, 0);
    thirds.assign(static_cast<size_t>(m) * m, {});
    prs.assign(m, {});
    for (const auto& t : ts.triples()) {
      int v[3] = {idx(t[0]), idx(t[1]), idx(t[2])};
      for (int i = 0; i < 3; ++i) {
        deg[v[i]] += 1;
        int x = v[(i + 1) % 3], y = v[(i + 2) % 3];
        prs[v[i]].push_back({std::min(x, y), std::max(x, y)});
        thirds[static_cast<size_t>(x) * m + y].push_back(v[i]);
        thirds[static_cast<size_t>(y) * m + x].push_back(v[i]);
      }
    }
    for (auto& v : thirds) std::sort(v.begin(), v.end());
    for (auto& v : prs) std::sort(v.begin(), v.end());
  }

  int idx(int64_t label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    return static_cast<int>(it - labels.begin());
  }

  const std::vector<int>& third_list(int a, int b) const {
    return thirds[static_cast<size_t>(a) * m + b];
  }

  bool triple(int a, int b, int c) const {
    const auto& l = third_list(a, b);
    return std::binary_search(l.begin(), l.end(), c);
  }
};

}  // namespace tripoints::detail

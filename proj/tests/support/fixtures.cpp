#include "support/fixtures.hpp"

#include <algorithm>

namespace testsupport {

using specbound::Hypergraph;
using specbound::Index;
using specbound::SparseTensor;

SparseTensor make_tensor(int m, int n,
                         const std::vector<std::pair<std::vector<Index>, double>>& entries) {
  std::vector<Index> subs;
  std::vector<double> vals;
  for (const auto& [tup, v] : entries) {
    subs.insert(subs.end(), tup.begin(), tup.end());
    vals.push_back(v);
  }
  return SparseTensor(m, n, std::move(subs), std::move(vals));
}

Hypergraph make_hypergraph(int k, int n, const std::vector<std::vector<Index>>& edges) {
  Hypergraph h;
  h.k = k;
  h.n = n;
  h.edges = edges;
  for (auto& e : h.edges)
    std::sort(e.begin(), e.end());
  return h;
}

Hypergraph h1() { return make_hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}}); }

Hypergraph complete3(int n) {
  std::vector<std::vector<Index>> edges;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      for (Index c = b + 1; c < n; ++c)
        edges.push_back({a, b, c});
  return make_hypergraph(3, n, edges);
}

SparseTensor p3_matrix() {
  return make_tensor(2, 3, {{{0, 1}, 1.0}, {{1, 0}, 1.0}, {{1, 2}, 1.0}, {{2, 1}, 1.0}});
}

SparseTensor k13_matrix() {
  return make_tensor(2, 4,
                     {{{0, 1}, 1.0},
                      {{0, 2}, 1.0},
                      {{0, 3}, 1.0},
                      {{1, 0}, 1.0},
                      {{2, 0}, 1.0},
                      {{3, 0}, 1.0}});
}

SparseTensor triangle_matrix() {
  return make_tensor(2, 3,
                     {{{0, 1}, 1.0},
                      {{0, 2}, 1.0},
                      {{1, 0}, 1.0},
                      {{1, 2}, 1.0},
                      {{2, 0}, 1.0},
                      {{2, 1}, 1.0}});
}

SparseTensor complete_bipartite(int p, int q) {
  std::vector<std::pair<std::vector<Index>, double>> entries;
  for (Index u = 0; u < p; ++u)
    for (Index w = 0; w < q; ++w) {
      entries.push_back({{u, static_cast<Index>(p + w)}, 1.0});
      entries.push_back({{static_cast<Index>(p + w), u}, 1.0});
    }
  return make_tensor(2, p + q, entries);
}

}  // namespace testsupport

#include "specbound/irreducibility.hpp"

#include <algorithm>
#include <deque>

namespace specbound {

RepresentationMatrix representation_matrix(const SparseTensor &t) {
  const auto n = static_cast<std::size_t>(t.dim());
  RepresentationMatrix g;
  g.n = t.dim();
  g.values.assign(n * n, 0.0);
  std::vector<Index> distinct;
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    distinct.assign(tup.begin() + 1, tup.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto lead = static_cast<std::size_t>(tup[0]);
    for (Index j : distinct)
      g.values[lead * n + static_cast<std::size_t>(j)] += t.value(e);
  }
  return g;
}

namespace {

// Iterative Tarjan over an adjacency list; returns the number of SCCs.
int count_sccs(const std::vector<std::vector<Index>> &adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dfn(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int timer = 0;
  int scc_count = 0;

  struct Frame {
    int v;
    std::size_t next_edge;
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (dfn[static_cast<std::size_t>(root)] != -1)
      continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      auto &[v, next_edge] = call_stack.back();
      const auto vu = static_cast<std::size_t>(v);
      if (next_edge == 0) {
        dfn[vu] = low[vu] = timer++;
        stack.push_back(v);
        on_stack[vu] = true;
      }
      bool descended = false;
      while (next_edge < adj[vu].size()) {
        const int w = adj[vu][next_edge++];
        const auto wu = static_cast<std::size_t>(w);
        if (dfn[wu] == -1) {
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wu])
          low[vu] = std::min(low[vu], dfn[wu]);
      }
      if (descended)
        continue;
      if (low[vu] == dfn[vu]) {
        ++scc_count;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
        } while (w != v);
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const auto pu = static_cast<std::size_t>(call_stack.back().v);
        low[pu] = std::min(low[pu], low[vu]);
      }
    }
  }
  return scc_count;
}

} // namespace

bool is_weakly_irreducible(const SparseTensor &t) {
  if (t.dim() == 1)
    return true;
  return count_sccs(neighbor_sets(t)) == 1;
}

bool neighbor_nonempty_check(const SparseTensor &t) {
  const auto nbs = neighbor_sets(t);
  std::vector<bool> appears(nbs.size(), false);
  for (const auto &nb : nbs)
    for (Index j : nb)
      appears[static_cast<std::size_t>(j)] = true;
  for (std::size_t i = 0; i < nbs.size(); ++i)
    if (nbs[i].empty() || !appears[i])
      return false;
  return true;
}

std::optional<BipartitionWitness> bipartition_structure(const SparseTensor &t) {
  if (!t.zero_diagonal())
    throw PreconditionError("bipartition_structure: tensor must have a zero diagonal");
  if (!is_weakly_irreducible(t))
    throw PreconditionError("bipartition_structure: tensor must be weakly irreducible");

  const auto n = static_cast<std::size_t>(t.dim());
  const int m = t.order();

  // Parity constraints between index pairs: lead differs from the first
  // tail index, tail indices all agree.
  struct Constraint {
    Index other;
    bool differ;
  };
  std::vector<std::vector<Constraint>> edges(n);
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    edges[static_cast<std::size_t>(tup[0])].push_back({tup[1], true});
    edges[static_cast<std::size_t>(tup[1])].push_back({tup[0], true});
    for (int p = 2; p < m; ++p) {
      edges[static_cast<std::size_t>(tup[1])].push_back({tup[p], false});
      edges[static_cast<std::size_t>(tup[p])].push_back({tup[1], false});
    }
  }

  std::vector<int> color(n, -1);
  std::deque<Index> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1)
      continue;
    color[start] = 0;
    queue.push_back(static_cast<Index>(start));
    while (!queue.empty()) {
      const Index v = queue.front();
      queue.pop_front();
      for (const auto &c : edges[static_cast<std::size_t>(v)]) {
        const int want = color[static_cast<std::size_t>(v)] ^ (c.differ ? 1 : 0);
        auto &cw = color[static_cast<std::size_t>(c.other)];
        if (cw == -1) {
          cw = want;
          queue.push_back(c.other);
        } else if (cw != want) {
          return std::nullopt;
        }
      }
    }
  }

  BipartitionWitness witness;
  for (std::size_t i = 0; i < n; ++i)
    (color[i] == 0 ? witness.u : witness.w).push_back(static_cast<Index>(i));
  if (witness.u.empty() || witness.w.empty())
    return std::nullopt;
  return witness;
}

} // namespace specbound

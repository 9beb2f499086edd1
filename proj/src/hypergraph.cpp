#include "specbound/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <sstream>

#include "parse_util.hpp"
#include "specbound/errors.hpp"

namespace specbound {

Hypergraph parse_hypergraph(std::string_view text) {
  using detail::parse_fail;
  using detail::parse_int;
  using detail::tokenize;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  Hypergraph h;
  bool have_header = false;
  std::set<std::vector<Index>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty())
      continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "hypergraph")
        parse_fail(line_no, "expected header 'hypergraph <k> <n>'");
      long k = parse_int(tokens[1], line_no);
      long n = parse_int(tokens[2], line_no);
      if (k < 2 || k > 32)
        parse_fail(line_no, "uniformity k must be in [2, 32]");
      if (n < 1)
        parse_fail(line_no, "vertex count must be at least 1");
      h.k = static_cast<int>(k);
      h.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (tokens.size() != static_cast<std::size_t>(h.k))
      parse_fail(line_no, "expected " + std::to_string(h.k) + " vertex ids");
    std::vector<Index> edge;
    edge.reserve(static_cast<std::size_t>(h.k));
    for (const auto& tok : tokens) {
      long v = parse_int(tok, line_no);
      if (v < 1 || v > h.n)
        parse_fail(line_no, "vertex " + std::to_string(v) + " out of range 1.." +
                                std::to_string(h.n));
      edge.push_back(static_cast<Index>(v - 1));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      parse_fail(line_no, "repeated vertex within an edge");
    if (!seen.insert(edge).second)
      parse_fail(line_no, "duplicate edge");
    h.edges.push_back(std::move(edge));
  }
  if (!have_header)
    throw InputError("missing 'hypergraph <k> <n>' header");
  return h;
}

bool is_connected(const Hypergraph& h) {
  if (h.n <= 1)
    return true;
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(h.n));
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (Index v : h.edges[e])
      incident[static_cast<std::size_t>(v)].push_back(e);

  std::vector<char> vertex_seen(static_cast<std::size_t>(h.n), 0);
  std::vector<char> edge_seen(h.edges.size(), 0);
  std::queue<Index> frontier;
  frontier.push(0);
  vertex_seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const Index v = frontier.front();
    frontier.pop();
    for (std::size_t e : incident[static_cast<std::size_t>(v)]) {
      if (edge_seen[e])
        continue;
      edge_seen[e] = 1;
      for (Index u : h.edges[e])
        if (!vertex_seen[static_cast<std::size_t>(u)]) {
          vertex_seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          frontier.push(u);
        }
    }
  }
  return reached == h.n;
}

std::vector<double> degrees(const Hypergraph& h) {
  std::vector<double> d(static_cast<std::size_t>(h.n), 0.0);
  for (const auto& e : h.edges)
    for (Index v : e)
      d[static_cast<std::size_t>(v)] += 1.0;
  return d;
}

SparseTensor adjacency_tensor(const Hypergraph& h, std::size_t cap) {
  const int k = h.k;
  double tail_perms = 1.0;  // (k-1)!
  for (int i = 2; i < k; ++i)
    tail_perms *= static_cast<double>(i);
  const double predicted =
      static_cast<double>(h.edges.size()) * static_cast<double>(k) * tail_perms;
  if (predicted > static_cast<double>(cap)) {
    std::ostringstream msg;
    msg << "adjacency tensor needs " << predicted << " stored entries (cap "
        << cap << "); use the closed-form hypergraph bounds instead";
    throw ResourceError(msg.str());
  }

  const double value = 1.0 / tail_perms;
  const auto nnz = static_cast<std::size_t>(predicted);
  std::vector<Index> subs;
  std::vector<double> vals;
  subs.reserve(nnz * static_cast<std::size_t>(k));
  vals.reserve(nnz);

  std::vector<Index> tail(static_cast<std::size_t>(k) - 1);
  for (const auto& edge : h.edges) {
    for (int lead = 0; lead < k; ++lead) {
      tail.clear();
      for (int p = 0; p < k; ++p)
        if (p != lead)
          tail.push_back(edge[static_cast<std::size_t>(p)]);
      // tail starts sorted; next_permutation cycles it back to sorted.
      do {
        subs.push_back(edge[static_cast<std::size_t>(lead)]);
        subs.insert(subs.end(), tail.begin(), tail.end());
        vals.push_back(value);
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  }
  return SparseTensor(k, h.n, std::move(subs), std::move(vals), /*symmetric=*/true);
}

SparseTensor signless_laplacian_tensor(const Hypergraph& h, std::size_t cap) {
  return add_diagonal(adjacency_tensor(h, cap), DiagonalShift(degrees(h)));
}

namespace {

// sum over edges containing i of the product of w over the other vertices,
// divided by w_i^{k-1}; one explicit product per (edge, member) pair.
std::vector<double> scaled_edge_sums(const Hypergraph& h, std::span<const double> w) {
  std::vector<double> sums(static_cast<std::size_t>(h.n), 0.0);
  for (const auto& edge : h.edges) {
    for (std::size_t p = 0; p < edge.size(); ++p) {
      double prod = 1.0;
      for (std::size_t q = 0; q < edge.size(); ++q)
        if (q != p)
          prod *= w[static_cast<std::size_t>(edge[q])];
      sums[static_cast<std::size_t>(edge[p])] += prod;
    }
  }
  for (std::size_t i = 0; i < sums.size(); ++i)
    sums[i] /= int_pow(w[i], h.k - 1);
  return sums;
}

struct PairScan {
  double lower = std::numeric_limits<double>::infinity();
  double upper = -std::numeric_limits<double>::infinity();
  IndexPair argmin;
  IndexPair argmax;
};

bool lex_less(IndexPair a, IndexPair b) {
  return a.i < b.i || (a.i == b.i && a.j < b.j);
}

// Min/max over unordered pairs {i,j} inside an edge; exact ties go to the
// lexicographically smallest pair regardless of edge order.
template <typename F>
PairScan scan_edge_pairs(const Hypergraph& h, F&& pair_fn) {
  PairScan s;
  for (const auto& edge : h.edges) {
    for (std::size_t p = 0; p < edge.size(); ++p) {
      for (std::size_t q = p + 1; q < edge.size(); ++q) {
        const IndexPair ij{edge[p], edge[q]};
        const double v = pair_fn(ij.i, ij.j);
        if (v < s.lower || (v == s.lower && lex_less(ij, s.argmin))) {
          s.lower = v;
          s.argmin = ij;
        }
        if (v > s.upper || (v == s.upper && lex_less(ij, s.argmax))) {
          s.upper = v;
          s.argmax = ij;
        }
      }
    }
  }
  return s;
}

void require_bounds_input(const Hypergraph& h, const WeightVector& b, const char* who) {
  if (h.k < 3)
    throw PreconditionError(std::string(who) +
                            ": requires k >= 3; use the tensor path for k = 2");
  if (b.size() != static_cast<std::size_t>(h.n))
    throw PreconditionError(std::string(who) + ": weight length does not match vertex count");
  if (h.edges.empty())
    throw PreconditionError(std::string(who) + ": hypergraph has no edges");
  if (!is_connected(h))
    throw PreconditionError(std::string(who) + ": hypergraph is not connected");
}

std::optional<EqualityWitness> uniform_flag(std::span<const double> c) {
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = 0.0;
  double csum = 0.0;
  for (double v : c) {
    cmin = std::min(cmin, v);
    cmax = std::max(cmax, v);
    csum += v;
  }
  if (cmax - cmin > 1e-9 * cmax)
    return std::nullopt;
  EqualityWitness w;
  w.kind = EqualityWitness::Kind::uniform;
  w.value = csum / static_cast<double>(c.size());
  return w;
}

}  // namespace

HypergraphProfile profile(const Hypergraph& h, const WeightVector& b) {
  if (b.size() != static_cast<std::size_t>(h.n))
    throw PreconditionError("profile: weight length does not match vertex count");
  HypergraphProfile out;
  out.d = degrees(h);
  out.b.assign(b.values().begin(), b.values().end());
  out.b_prime = scaled_edge_sums(h, b.values());
  if (std::all_of(out.d.begin(), out.d.end(), [](double di) { return di >= 1.0; }))
    out.m_avg = scaled_edge_sums(h, out.d);
  return out;
}

BoundReport adjacency_bounds(const Hypergraph& h, const WeightVector& b) {
  require_bounds_input(h, b, "adjacency_bounds");
  const std::vector<double> bp = scaled_edge_sums(h, b.values());
  const PairScan s = scan_edge_pairs(
      h, [&](Index i, Index j) {
        return std::sqrt(bp[static_cast<std::size_t>(i)] * bp[static_cast<std::size_t>(j)]);
      });

  BoundReport rep;
  rep.method = BoundMethod::adjacency;
  rep.lower = s.lower;
  rep.upper = s.upper;
  rep.argmin = s.argmin;
  rep.argmax = s.argmax;
  rep.equality = uniform_flag(bp);
  return rep;
}

BoundReport qlaplacian_bounds(const Hypergraph& h, const WeightVector& b) {
  require_bounds_input(h, b, "qlaplacian_bounds");
  const std::vector<double> d = degrees(h);
  const std::vector<double> bp = scaled_edge_sums(h, b.values());
  const PairScan s = scan_edge_pairs(h, [&](Index i, Index j) {
    const double di = d[static_cast<std::size_t>(i)];
    const double dj = d[static_cast<std::size_t>(j)];
    const double diff = di - dj;
    const double cross =
        4.0 * bp[static_cast<std::size_t>(i)] * bp[static_cast<std::size_t>(j)];
    return 0.5 * (di + dj + std::sqrt(diff * diff + cross));
  });

  std::vector<double> c(static_cast<std::size_t>(h.n));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = d[i] + bp[i];

  BoundReport rep;
  rep.method = BoundMethod::qlaplacian;
  rep.lower = s.lower;
  rep.upper = s.upper;
  rep.argmin = s.argmin;
  rep.argmax = s.argmax;
  rep.equality = uniform_flag(c);
  return rep;
}

}  // namespace specbound

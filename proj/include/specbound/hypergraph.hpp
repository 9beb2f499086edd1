#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/tensor.hpp"

namespace specbound {

/// k-uniform hypergraph on vertices 1..n (0-based internally). Every edge
/// is a sorted list of k distinct vertices; edges are pairwise distinct and
/// kept in input order.
struct Hypergraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Index>> edges;
};

/// Text format: a `hypergraph <k> <n>` header, then one edge per line as
/// k space-separated 1-based vertex ids. '#' starts a comment. Repeated
/// vertices within an edge and duplicate edges are parse errors.
Hypergraph parse_hypergraph(std::string_view text);

/// True iff every two vertices are joined by a walk. Equivalent to weak
/// irreducibility of the adjacency tensor. Vacuously true for n = 1.
bool is_connected(const Hypergraph& h);

/// d_i = number of edges containing i.
std::vector<double> degrees(const Hypergraph& h);

inline constexpr std::size_t kDefaultTensorCap = 10'000'000;

/// Adjacency tensor: for each edge and each lead vertex in it, all (k-1)!
/// tail permutations stored with value 1/(k-1)!. Symmetric, zero diagonal,
/// row sums equal to the degrees. Refuses to materialize more than `cap`
/// entries (|E| * k * (k-1)! grows fast; the closed-form bounds below do
/// not materialize anything).
SparseTensor adjacency_tensor(const Hypergraph& h, std::size_t cap = kDefaultTensorCap);

/// Signless Laplacian Q = D + A: the adjacency tensor plus diagonal d_i.
SparseTensor signless_laplacian_tensor(const Hypergraph& h, std::size_t cap = kDefaultTensorCap);

/// Per-vertex closed-form data under weights b:
///   b_prime[i] = b_i^{-(k-1)} * sum over edges e containing i of
///                prod_{v in e, v != i} b_v
///   m_avg[i]   = b_prime[i] evaluated at b = d (degree-averaged profile);
///                left empty when some vertex is isolated.
struct HypergraphProfile {
  std::vector<double> d;
  std::vector<double> m_avg;
  std::vector<double> b;
  std::vector<double> b_prime;
};

HypergraphProfile profile(const Hypergraph& h, const WeightVector& b);

/// Spectral-radius bounds for the adjacency tensor without materializing
/// it: min/max of sqrt(b'_i b'_j) over unordered pairs {i,j} inside an
/// edge. Uniform equality witness iff all b'_i agree (1e-9 relative).
/// Requires k >= 3, H connected, at least one edge. For k = 2 use the
/// general tensor path on adjacency_tensor(h).
BoundReport adjacency_bounds(const Hypergraph& h, const WeightVector& b);

/// Same pair enumeration for Q = D + A with
/// g(i,j) = (d_i + d_j + sqrt((d_i - d_j)^2 + 4 b'_i b'_j))/2;
/// uniform equality witness iff all d_i + b'_i agree (1e-9 relative).
BoundReport qlaplacian_bounds(const Hypergraph& h, const WeightVector& b);

}  // namespace specbound

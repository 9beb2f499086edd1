#pragma once

#include <optional>
#include <vector>

#include "specbound/tensor.hpp"

namespace specbound {

/// n-by-n representation matrix G of a tensor: G(i, j) sums the values of
/// entries led by i whose tail contains j (once per distinct tail index).
/// Its positivity pattern is the digraph that decides weak irreducibility.
struct RepresentationMatrix {
  int n = 0;
  std::vector<double> values; // row-major

  double at(Index i, Index j) const {
    return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j)];
  }
};

RepresentationMatrix representation_matrix(const SparseTensor &t);

/// True iff the digraph on [n] with arcs {(i, j) : j in N(i)} is strongly
/// connected. A dimension-1 tensor counts as weakly irreducible.
bool is_weakly_irreducible(const SparseTensor &t);

/// True iff every index has a nonempty N(i) and appears in some N(k).
/// Implied by weak irreducibility for n >= 2; cheap sanity screen.
bool neighbor_nonempty_check(const SparseTensor &t);

/// A two-class split of the index set: every entry has its lead in one
/// class and its whole tail in the other. `ell` is a scale attached later
/// by equality detection; it is zero until then.
struct BipartitionWitness {
  std::vector<Index> u;
  std::vector<Index> w;
  double ell = 0.0;
};

/// Searches for a bipartition by constraint propagation: each entry forces
/// lead and tail into opposite classes and the whole tail into one class.
/// Vertex 1 always lands in U. Requires a weakly irreducible, zero-diagonal
/// tensor; returns empty when no such split exists.
std::optional<BipartitionWitness> bipartition_structure(const SparseTensor &t);

} // namespace specbound

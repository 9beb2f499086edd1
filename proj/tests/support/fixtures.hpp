#pragma once

#include <utility>
#include <vector>

#include "specbound/hypergraph.hpp"
#include "specbound/tensor.hpp"

// Hand-sized instances shared across the suites. Indices are 0-based, to
// match the library internals rather than the file format.
namespace testsupport {

specbound::SparseTensor make_tensor(
    int m, int n,
    const std::vector<std::pair<std::vector<specbound::Index>, double>>& entries);

specbound::Hypergraph make_hypergraph(int k, int n,
                                      const std::vector<std::vector<specbound::Index>>& edges);

// Two 3-uniform edges sharing a pair: {{0,1,2},{0,1,3}}; degrees (2,2,1,1).
specbound::Hypergraph h1();

// Complete 3-uniform hypergraph on n vertices.
specbound::Hypergraph complete3(int n);

// Path 0 - 1 - 2 as an adjacency matrix.
specbound::SparseTensor p3_matrix();

// Star with center 0 and three leaves, adjacency matrix.
specbound::SparseTensor k13_matrix();

// Triangle graph adjacency matrix.
specbound::SparseTensor triangle_matrix();

// Complete bipartite graph K_{p,q} adjacency matrix, parts [0,p) and [p,p+q).
specbound::SparseTensor complete_bipartite(int p, int q);

}  // namespace testsupport

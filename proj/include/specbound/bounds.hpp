#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "specbound/irreducibility.hpp"
#include "specbound/spectral.hpp"
#include "specbound/tensor.hpp"

namespace specbound {

enum class BoundMethod { rowsum, general_f, rowsum_f, adjacency, qlaplacian };

/// Stable text labels: rowsum, general-F, rowsum-F, adjacency, qlaplacian.
std::string_view method_label(BoundMethod m);

struct IndexPair {
  Index i = 0;
  Index j = 0;
};

struct PairValue {
  Index i = 0;
  Index j = 0;
  double value = 0.0;
};

/// Attached to a report when a bound is attained. uniform: every
/// t_i + S_i/R_i^{m-1} equals `value`, which is then the spectral radius.
/// bipartite: `bipartition` carries the two classes and the scale ell
/// linking them; `value` is the spectral radius the class identities
/// rho = t_i + ell^{m-1} S_i/R_i^{m-1}   (i in U)
/// rho = t_j + S_j/(ell^{m-1} R_j^{m-1}) (j in W)
/// were verified against.
struct EqualityWitness {
  enum class Kind { uniform, bipartite };
  Kind kind = Kind::uniform;
  double value = 0.0;
  std::optional<BipartitionWitness> bipartition;
};

/// Two-sided estimate with the attaining pairs. argmin/argmax are absent
/// for plain row-sum reports, which have no pair structure; otherwise both
/// satisfy j in N(i). pair_values is populated only on request.
struct BoundReport {
  BoundMethod method = BoundMethod::rowsum;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<IndexPair> argmin;
  std::optional<IndexPair> argmax;
  std::optional<std::vector<PairValue>> pair_values;
  std::optional<EqualityWitness> equality;
};

/// min_i r_i <= rho <= max_i r_i. No preconditions; the uniform witness
/// (all row sums equal within 1e-12 relative) certifies rho = r only when
/// the tensor is weakly irreducible.
BoundReport row_sum_bounds(const SparseTensor& t);

/// F(i,j) = (t_i + t_j + sqrt((t_i - t_j)^2 + 4 S_i S_j/(R_i R_j)^{m-1}))/2.
/// Bit-exactly symmetric in (i, j).
double pair_value_f(Index i, Index j, const DiagonalShift& t,
                    const RowProfile& profile, const WeightVector& r, int m);

/// Extremes of F(i, j) over ordered pairs with j in N(i); they bracket the
/// spectral radius of A + diag(t). Requires A weakly irreducible with zero
/// diagonal and n >= 2. Ties go to the lexicographically smallest pair.
/// Tensors flagged symmetric are enumerated over unordered pairs only,
/// which changes nothing observable since F is symmetric.
///
/// Either bound is attained exactly when every F(i, j) coincides, so a
/// collapsed report is the only equality candidate; the witness is then
/// derived from the collapsed value without running the power iteration.
BoundReport general_bounds(const SparseTensor& a, const DiagonalShift& t,
                           const WeightVector& r, bool emit_pairs = false);

/// general_bounds specialized to R = r(A), the row-sum weights.
BoundReport rowsum_weighted_bounds(const SparseTensor& a, const DiagonalShift& t,
                                   bool emit_pairs = false);

/// Checks the two equality characterizations against an externally computed
/// spectral radius: the uniform condition directly, then the bipartite one
/// by solving ell from the first vertex of U and verifying both class
/// identities for every vertex (1e-9 relative). Inputs must satisfy the
/// general_bounds preconditions. Empty means neither condition holds.
std::optional<EqualityWitness> detect_equality(const SparseTensor& a,
                                               const DiagonalShift& t,
                                               const WeightVector& r,
                                               const PerronEstimate& est);

}  // namespace specbound

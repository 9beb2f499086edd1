#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

using Index = std::int32_t;

/// x^e by repeated multiplication. Exponents here are tiny (tensor order
/// minus one), and repeated multiplication keeps results bit-reproducible.
inline double int_pow(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i)
    out *= x;
  return out;
}

/// Strictly positive per-index weights R_1..R_n.
class WeightVector {
public:
  explicit WeightVector(std::vector<double> w);
  static WeightVector ones(int n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> values() const { return w_; }

private:
  std::vector<double> w_;
};

/// Nonnegative diagonal shifts t_1..t_n.
class DiagonalShift {
public:
  explicit DiagonalShift(std::vector<double> t);
  static DiagonalShift zeros(int n);

  std::size_t size() const { return t_.size(); }
  double operator[](std::size_t i) const { return t_[i]; }
  std::span<const double> values() const { return t_; }

private:
  std::vector<double> t_;
};

/// Per-index row data of a tensor under a given weight vector:
///   row_sums[i]      r_i, the plain sum over entries with lead index i
///   weighted_sums[i] S_i = sum over entries of value * R_{i2} * ... * R_{im}
///   neighbors[i]     N(i), the distinct tail indices of entries led by i
struct RowProfile {
  std::vector<double> row_sums;
  std::vector<double> weighted_sums;
  std::vector<std::vector<Index>> neighbors;
};

/// Order-m, dimension-n nonnegative sparse tensor.
///
/// Entries are kept as a coordinate list sorted lexicographically by the
/// full index tuple, values strictly positive (zeros are never stored),
/// indices 0-based internally. Duplicate tuples are rejected. The sorted
/// order makes every summation over entries bit-reproducible.
class SparseTensor {
public:
  /// `subscripts` holds entry tuples flattened back to back
  /// (entry e occupies subscripts[e*order .. e*order+order-1]).
  /// Set `symmetric` only for tensors invariant under all index
  /// permutations; it enables a pair-enumeration shortcut downstream.
  SparseTensor(int order, int dim, std::vector<Index> subscripts,
               std::vector<double> values, bool symmetric = false);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t entry_count() const { return values_.size(); }
  std::span<const Index> tuple(std::size_t e) const {
    return std::span<const Index>(subs_).subspan(e * order_, order_);
  }
  double value(std::size_t e) const { return values_[e]; }
  bool symmetric() const { return symmetric_; }

  /// The vector (T x^{m-1})_i = sum over entries of value * x_{i2}...x_{im}.
  /// Summation runs in stored (lexicographic) entry order. A member rather
  /// than a free function so unqualified calls cannot drift to std::apply
  /// through argument-dependent lookup.
  std::vector<double> apply(std::span<const double> x) const;

  /// True iff no entry (i, i, ..., i) is stored.
  bool zero_diagonal() const;

private:
  int order_;
  int dim_;
  std::vector<Index> subs_;
  std::vector<double> values_;
  bool symmetric_;
};

/// Componentwise r-th power, r >= 1.
std::vector<double> power_vector(std::span<const double> x, int r);

/// Row sums, weighted row sums under `weights`, and neighbor sets in one pass.
RowProfile row_profile(const SparseTensor &t, const WeightVector &weights);

/// T + diag(shift). Requires T to have a zero diagonal; shift components
/// equal to zero are not stored.
SparseTensor add_diagonal(const SparseTensor &t, const DiagonalShift &shift);

/// The diagonal-similar tensor D^{-(m-1)} T D: entry (i, i2, ..., im)
/// becomes D_i^{-(m-1)} * value * D_{i2} * ... * D_{im}. Same support as T;
/// the spectrum is unchanged.
SparseTensor diagonal_similarity(const SparseTensor &t, const WeightVector &d);

/// N(i) for every i, without computing sums.
std::vector<std::vector<Index>> neighbor_sets(const SparseTensor &t);

/// Text format: a `tensor <m> <n>` header, then one `<i1> ... <im> <value>`
/// line per entry with 1-based indices and a strictly positive value.
/// '#' starts a comment; blank lines are ignored. Duplicate tuples are a
/// parse error.
SparseTensor parse_tensor(std::string_view text);

/// Inverse of parse_tensor (indices rendered 1-based).
std::string format_tensor(const SparseTensor &t);

} // namespace specbound

#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

constexpr double kWitnessTol = 1e-9;

std::optional<EqualityWitness> uniform_witness(const DiagonalShift& t,
                                               const RowProfile& profile,
                                               const WeightVector& r, int m) {
  const std::size_t n = r.size();
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = 0.0;
  double csum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = t[i] + profile.weighted_sums[i] / int_pow(r[i], m - 1);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    csum += c;
  }
  if (cmax - cmin > kWitnessTol * cmax)
    return std::nullopt;
  EqualityWitness w;
  w.kind = EqualityWitness::Kind::uniform;
  w.value = csum / static_cast<double>(n);
  return w;
}

// ell is solved from the first vertex of U (the class holding vertex 1),
// then both class identities are checked for every vertex at the given rho.
std::optional<EqualityWitness> bipartite_witness(const SparseTensor& a,
                                                 const DiagonalShift& t,
                                                 const RowProfile& profile,
                                                 const WeightVector& r, int m,
                                                 double rho) {
  auto split = bipartition_structure(a);
  if (!split)
    return std::nullopt;

  const auto lead = static_cast<std::size_t>(split->u.front());
  const double ell_pow_raw =
      (rho - t[lead]) * int_pow(r[lead], m - 1) / profile.weighted_sums[lead];
  if (!(ell_pow_raw > 0.0))
    return std::nullopt;
  const double ell = std::pow(ell_pow_raw, 1.0 / static_cast<double>(m - 1));
  const double ell_pow = int_pow(ell, m - 1);
  const double tol = kWitnessTol * rho;

  for (Index i : split->u) {
    const auto ui = static_cast<std::size_t>(i);
    const double v = t[ui] + ell_pow * profile.weighted_sums[ui] / int_pow(r[ui], m - 1);
    if (std::abs(v - rho) > tol)
      return std::nullopt;
  }
  for (Index j : split->w) {
    const auto uj = static_cast<std::size_t>(j);
    const double v = t[uj] + profile.weighted_sums[uj] / (ell_pow * int_pow(r[uj], m - 1));
    if (std::abs(v - rho) > tol)
      return std::nullopt;
  }

  EqualityWitness w;
  w.kind = EqualityWitness::Kind::bipartite;
  w.value = rho;
  split->ell = ell;
  w.bipartition = std::move(*split);
  return w;
}

}  // namespace

std::string_view method_label(BoundMethod m) {
  switch (m) {
    case BoundMethod::rowsum: return "rowsum";
    case BoundMethod::general_f: return "general-F";
    case BoundMethod::rowsum_f: return "rowsum-F";
    case BoundMethod::adjacency: return "adjacency";
    case BoundMethod::qlaplacian: return "qlaplacian";
  }
  return "unknown";
}

BoundReport row_sum_bounds(const SparseTensor& t) {
  const RowProfile profile = row_profile(t, WeightVector::ones(t.dim()));
  const auto [lo, hi] =
      std::minmax_element(profile.row_sums.begin(), profile.row_sums.end());

  BoundReport rep;
  rep.method = BoundMethod::rowsum;
  rep.lower = *lo;
  rep.upper = *hi;
  if (rep.upper - rep.lower <= 1e-12 * std::abs(rep.upper)) {
    EqualityWitness w;
    w.kind = EqualityWitness::Kind::uniform;
    w.value = 0.5 * (rep.lower + rep.upper);
    rep.equality = w;
  }
  return rep;
}

double pair_value_f(Index i, Index j, const DiagonalShift& t,
                    const RowProfile& profile, const WeightVector& r, int m) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  const double ti = t[ui];
  const double tj = t[uj];
  const double diff = ti - tj;
  // 4.0 is exact to multiply by, and the remaining products commute
  // bit-exactly, so F(i,j) == F(j,i) without further care.
  const double cross = 4.0 * profile.weighted_sums[ui] * profile.weighted_sums[uj] /
                       int_pow(r[ui] * r[uj], m - 1);
  return 0.5 * (ti + tj + std::sqrt(diff * diff + cross));
}

BoundReport general_bounds(const SparseTensor& a, const DiagonalShift& t,
                           const WeightVector& r, bool emit_pairs) {
  const int n = a.dim();
  if (n < 2)
    throw PreconditionError("general_bounds: dimension must be at least 2");
  if (t.size() != static_cast<std::size_t>(n) || r.size() != static_cast<std::size_t>(n))
    throw PreconditionError("general_bounds: shift or weight length does not match dimension");
  if (!a.zero_diagonal())
    throw PreconditionError("general_bounds: tensor has a nonzero diagonal entry");
  if (!is_weakly_irreducible(a))
    throw PreconditionError("general_bounds: tensor is not weakly irreducible");

  const int m = a.order();
  const RowProfile profile = row_profile(a, r);

  BoundReport rep;
  rep.method = BoundMethod::general_f;
  rep.lower = std::numeric_limits<double>::infinity();
  rep.upper = -std::numeric_limits<double>::infinity();
  std::vector<PairValue> table;

  for (Index i = 0; i < n; ++i) {
    for (Index j : profile.neighbors[static_cast<std::size_t>(i)]) {
      if (a.symmetric() && j < i)
        continue;  // mirror pair (j, i) was or will be seen, F is symmetric
      const double v = pair_value_f(i, j, t, profile, r, m);
      if (emit_pairs)
        table.push_back({i, j, v});
      if (v < rep.lower) {
        rep.lower = v;
        rep.argmin = IndexPair{i, j};
      }
      if (v > rep.upper) {
        rep.upper = v;
        rep.argmax = IndexPair{i, j};
      }
    }
  }
  if (emit_pairs)
    rep.pair_values = std::move(table);

  // Equality in either direction forces every F(i, j) to the same value,
  // so only a collapsed report can carry a witness. The collapsed midpoint
  // then *is* the spectral radius, which lets the bipartite identities be
  // verified without an iterative solve.
  rep.equality = uniform_witness(t, profile, r, m);
  if (!rep.equality && rep.upper - rep.lower <= kWitnessTol * rep.upper)
    rep.equality =
        bipartite_witness(a, t, profile, r, m, 0.5 * (rep.lower + rep.upper));
  return rep;
}

BoundReport rowsum_weighted_bounds(const SparseTensor& a, const DiagonalShift& t,
                                   bool emit_pairs) {
  RowProfile plain = row_profile(a, WeightVector::ones(a.dim()));
  for (double ri : plain.row_sums)
    if (!(ri > 0.0))
      throw PreconditionError(
          "rowsum_weighted_bounds: zero row sum, tensor is reducible");
  BoundReport rep =
      general_bounds(a, t, WeightVector(std::move(plain.row_sums)), emit_pairs);
  rep.method = BoundMethod::rowsum_f;
  return rep;
}

std::optional<EqualityWitness> detect_equality(const SparseTensor& a,
                                               const DiagonalShift& t,
                                               const WeightVector& r,
                                               const PerronEstimate& est) {
  const RowProfile profile = row_profile(a, r);
  if (auto w = uniform_witness(t, profile, r, a.order()))
    return w;
  return bipartite_witness(a, t, profile, r, a.order(), est.rho);
}

}  // namespace specbound

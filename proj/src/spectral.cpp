#include "specbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/irreducibility.hpp"

namespace specbound {

namespace {

// Rescale so the largest entry is exactly 1. Keeps iterates away from
// overflow/underflow without disturbing the ratio bracket.
void normalize_max(std::vector<double>& x) {
  double mx = 0.0;
  for (double v : x) mx = std::max(mx, v);
  for (double& v : x) v /= mx;
}

}  // namespace

double residual(const SparseTensor& t, double rho, const std::vector<double>& x) {
  if (x.size() != static_cast<std::size_t>(t.dim()))
    throw PreconditionError("residual: vector length does not match tensor dimension");
  const std::vector<double> y = t.apply(x);
  const int m = t.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::max(worst, std::abs(y[i] - rho * int_pow(x[i], m - 1)));
  return worst;
}

PerronEstimate perron(const SparseTensor& t, const IterationConfig& cfg) {
  if (!(cfg.tol > 0.0))
    throw PreconditionError("perron: tolerance must be positive");
  if (cfg.max_iter < 1)
    throw PreconditionError("perron: max_iter must be at least 1");
  if (!(cfg.shift >= 0.0))
    throw PreconditionError("perron: shift must be nonnegative");
  if (!is_weakly_irreducible(t))
    throw PreconditionError("perron: tensor is not weakly irreducible");

  const int n = t.dim();
  const int m = t.order();

  if (n == 1) {
    // Single diagonal entry, or none at all.
    double rho = t.entry_count() > 0 ? t.value(0) : 0.0;
    PerronEstimate est;
    est.rho = rho;
    est.x.assign(1, 1.0);
    est.iterations = 0;
    est.residual = 0.0;
    est.bracket = 0.0;
    if (cfg.bracket_trace) cfg.bracket_trace->push_back({rho, rho});
    return est;
  }

  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  int it = 0;

  for (; it < cfg.max_iter; ++it) {
    std::vector<double> y = t.apply(x);
    for (int i = 0; i < n; ++i)
      y[static_cast<std::size_t>(i)] += cfg.shift * int_pow(x[static_cast<std::size_t>(i)], m - 1);

    double step_lo = std::numeric_limits<double>::infinity();
    double step_hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ratio = y[static_cast<std::size_t>(i)] /
                           int_pow(x[static_cast<std::size_t>(i)], m - 1);
      step_lo = std::min(step_lo, ratio);
      step_hi = std::max(step_hi, ratio);
    }
    // The bracket is monotone for the shifted iteration; clamping guards
    // against rounding jitter near convergence.
    lo = std::max(lo, step_lo);
    hi = std::min(hi, step_hi);
    if (cfg.bracket_trace) cfg.bracket_trace->push_back({lo - cfg.shift, hi - cfg.shift});

    if (hi - lo <= cfg.tol * hi) {
      ++it;
      break;
    }

    // Next iterate: x <- y^{[1/(m-1)]}, renormalized.
    for (double& v : y) v = std::pow(v, 1.0 / static_cast<double>(m - 1));
    normalize_max(y);
    x.swap(y);
  }

  if (hi - lo > cfg.tol * hi)
    throw ConvergenceError("perron: bracket did not close within " +
                               std::to_string(cfg.max_iter) + " iterations",
                           lo - cfg.shift, hi - cfg.shift);

  PerronEstimate est;
  est.rho = 0.5 * (lo + hi) - cfg.shift;
  normalize_max(x);
  est.x = std::move(x);
  est.iterations = it;
  est.bracket = hi - lo;
  est.residual = residual(t, est.rho, est.x);
  return est;
}

}  // namespace specbound

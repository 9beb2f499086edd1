#pragma once

#include <utility>
#include <vector>

#include "specbound/tensor.hpp"

namespace specbound {

// Controls for the shifted power iteration. The default shift of 1 keeps the
// iteration map primitive even when the tensor's pattern is 2-colorable, so
// the bracket always closes.
struct IterationConfig {
  double tol = 1e-12;
  int max_iter = 100000;
  double shift = 1.0;
  // When set, receives the (lower, upper) bracket after every iteration.
  std::vector<std::pair<double, double>>* bracket_trace = nullptr;
};

struct PerronEstimate {
  double rho = 0.0;
  std::vector<double> x;  // positive eigenvector, scaled to max entry 1
  int iterations = 0;
  double residual = 0.0;  // max_i |(Bx^{m-1})_i - rho * x_i^{m-1}|
  double bracket = 0.0;   // final upper - lower gap
};

// Spectral radius of a nonnegative weakly irreducible tensor via the
// min/max collatz ratio bracket on y = Bx^{m-1} + shift * x^{[m-1]}.
// Throws PreconditionError if the tensor is not weakly irreducible and
// ConvergenceError (carrying the last bracket) if max_iter is exhausted.
PerronEstimate perron(const SparseTensor& t, const IterationConfig& cfg = {});

// Recomputes max_i |(Bx^{m-1})_i - rho * x_i^{m-1}| for a claimed eigenpair.
double residual(const SparseTensor& t, double rho, const std::vector<double>& x);

}  // namespace specbound

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "specbound/bounds.hpp"
#include "specbound/hypergraph.hpp"
#include "specbound/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace specbound;
using doctest::Approx;
using testsupport::make_tensor;

TEST_CASE("perron recovers known spectral radii") {
  SUBCASE("3-regular 3-uniform hypergraph") {
    auto a = adjacency_tensor(testsupport::complete3(4));
    auto est = perron(a);
    CHECK(est.rho == Approx(3.0).epsilon(1e-10));
    for (double v : est.x)
      CHECK(v == Approx(1.0).epsilon(1e-8));
  }

  SUBCASE("two 3-uniform edges sharing a pair") {
    auto a = adjacency_tensor(testsupport::h1());
    auto est = perron(a);
    CHECK(est.rho == Approx(std::cbrt(4.0)).epsilon(1e-8));
    // Eigenvector shape (c, c, 1, 1) scaled to max 1, c = 2^{1/3}.
    CHECK(est.x[0] == Approx(1.0).epsilon(1e-6));
    CHECK(est.x[2] == Approx(1.0 / std::cbrt(2.0)).epsilon(1e-6));
  }

  SUBCASE("signless Laplacian radius solves a cubic") {
    // rho = 1 + s^2 where s is the root of s^3 - s - 2 in [1, 2].
    auto q = signless_laplacian_tensor(testsupport::h1());
    const double s = testsupport::bisect_root(
        [](double v) { return v * v * v - v - 2.0; }, 1.0, 2.0);
    auto est = perron(q);
    CHECK(est.rho == Approx(1.0 + s * s).epsilon(1e-8));
  }

  SUBCASE("bipartite path needs the shift") {
    auto p3 = testsupport::p3_matrix();
    auto est = perron(p3);
    CHECK(est.rho == Approx(std::sqrt(2.0)).epsilon(1e-10));

    IterationConfig unshifted;
    unshifted.shift = 0.0;
    unshifted.max_iter = 200;
    CHECK_THROWS_AS(perron(p3, unshifted), ConvergenceError);
  }
}

TEST_CASE("residual is zero on exact eigenpairs") {
  SparseTensor swap2(2, 2, {0, 1, 1, 0}, {1.0, 1.0});
  CHECK(residual(swap2, 1.0, {1.0, 1.0}) == 0.0);

  auto a = adjacency_tensor(testsupport::complete3(4));
  CHECK(residual(a, 3.0, {1.0, 1.0, 1.0, 1.0}) == 0.0);

  auto est = perron(adjacency_tensor(testsupport::h1()));
  CHECK(est.residual <= 1e-8 * est.rho);
  CHECK(residual(adjacency_tensor(testsupport::h1()), est.rho, est.x) == est.residual);

  CHECK_THROWS_AS(residual(swap2, 1.0, {1.0, 1.0, 1.0}), PreconditionError);
}

TEST_CASE("perron validates its inputs") {
  auto p3 = testsupport::p3_matrix();
  IterationConfig bad;

  bad.tol = 0.0;
  CHECK_THROWS_AS(perron(p3, bad), PreconditionError);
  bad = {};
  bad.max_iter = 0;
  CHECK_THROWS_AS(perron(p3, bad), PreconditionError);
  bad = {};
  bad.shift = -1.0;
  CHECK_THROWS_AS(perron(p3, bad), PreconditionError);

  CHECK_THROWS_AS(perron(make_tensor(2, 2, {{{0, 1}, 1.0}})), PreconditionError);
}

TEST_CASE("exhausted iterations raise an error that still brackets rho") {
  auto a = adjacency_tensor(testsupport::h1());
  IterationConfig tight;
  tight.max_iter = 3;
  const double rho = std::cbrt(4.0);
  try {
    perron(a, tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.lower_estimate <= rho + 1e-12);
    CHECK(e.upper_estimate >= rho - 1e-12);
    CHECK(e.lower_estimate <= e.upper_estimate);
  }
}

TEST_CASE("dimension-1 tensors are handled directly") {
  auto scalar = make_tensor(2, 1, {{{0, 0}, 2.5}});
  auto est = perron(scalar);
  CHECK(est.rho == 2.5);
  CHECK(est.x == std::vector<double>{1.0});
  CHECK(est.iterations == 0);

  SparseTensor empty(3, 1, {}, {});
  CHECK(perron(empty).rho == 0.0);
}

TEST_CASE("bracket trace is monotone and ends containing rho") {
  auto a = adjacency_tensor(testsupport::h1());
  std::vector<std::pair<double, double>> trace;
  IterationConfig cfg;
  cfg.bracket_trace = &trace;
  auto est = perron(a, cfg);
  REQUIRE(trace.size() >= 2);
  CHECK(static_cast<int>(trace.size()) == est.iterations);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i].first >= trace[i - 1].first - 1e-14);
    CHECK(trace[i].second <= trace[i - 1].second + 1e-14);
  }
  CHECK(trace.back().first <= est.rho);
  CHECK(trace.back().second >= est.rho);
}

TEST_CASE("perron sits inside the row-sum bracket on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 5);
    auto t = testsupport::random_irreducible_tensor(rng, m, n, 0.4);
    auto est = perron(t);
    auto rows = row_sum_bounds(t);
    CHECK(est.rho >= rows.lower - 1e-9 * (1.0 + rows.upper));
    CHECK(est.rho <= rows.upper + 1e-9 * (1.0 + rows.upper));
  }
}

TEST_CASE("spectral radius is invariant under diagonal similarity") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 4);
    auto t = testsupport::random_irreducible_tensor(rng, m, n, 0.5);
    auto d = testsupport::random_values(rng, n, 0.5, 2.0);
    auto s = diagonal_similarity(t, WeightVector(d));
    const double r1 = perron(t).rho;
    const double r2 = perron(s).rho;
    CHECK(r2 == Approx(r1).epsilon(1e-8));
  }
}

TEST_CASE("order-2 estimates agree with the dense eigensolver") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto t = testsupport::random_irreducible_tensor(rng, 2, n, 0.5);
    const double iter = perron(t).rho;
    const double dense = testsupport::dense_spectral_radius(t);
    CHECK(iter == Approx(dense).epsilon(1e-8));
  }
}

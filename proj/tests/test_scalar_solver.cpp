// Copyright 2026 The mdregion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mdr/error.hpp"
#include "mdr/scalar_solver.hpp"
#include "mdr/verify.hpp"
#include "oracles.hpp"

using namespace mdr;

namespace {

WeightProfile prof(std::vector<double> beta) { return group_weights(beta); }

// beta = (2,2,1): alpha = (2,1), m = (2,1).
const std::vector<double> kB221{2, 2, 1};
const std::vector<double> kUnitK{1, 1, 1};

double uk_w(const ChainResult& c) { return c.uk.back(); }

// Finite-difference gradient of F at y.
std::vector<double> grad_F(const ScalarInstance& s, const WeightProfile& p,
                           std::vector<double> y) {
  std::vector<double> g;
  for (size_t j = 0; j < y.size(); ++j) {
    const double h = 1e-6 * y[j];
    std::vector<double> yp = y, ym = y;
    yp[j] += h;
    ym[j] -= h;
    g.push_back((F_objective(s, p, yp) - F_objective(s, p, ym)) / (2 * h));
  }
  return g;
}

std::vector<double> increments(const std::vector<double>& sigma2) {
  std::vector<double> y;
  double prev = 0.0;
  for (double x : sigma2) {
    y.push_back(x - prev);
    prev = x;
  }
  return y;
}

}  // namespace

TEST_CASE("scalar instance derived quantities") {
  const ScalarInstance s = make_scalar_instance(1.0, 1.0 / 6, {0.5, 0.5});
  CHECK(s.k[0] == doctest::Approx(1.0));
  CHECK(s.k_target == doctest::Approx(0.2));
  CHECK(s.k_up == doctest::Approx(0.5));
  bool thrown = false;
  try {
    make_scalar_instance(1.0, 0.6, {0.5, 0.5});
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::kInvalidInstance;
  }
  CHECK(thrown);
}

TEST_CASE("chain_solve examples") {
  const ChainResult c = chain_solve(kUnitK, prof(kB221), 0.1);
  REQUIRE(c.feasible);
  CHECK(c.uk[0] == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(c.sigma2[1] == doctest::Approx(9.0 / 35).epsilon(1e-14));
  CHECK(c.uk[1] == doctest::Approx(1881.0 / 9625).epsilon(1e-14));

  const std::vector<double> k2{1, 1};
  const ChainResult c1 = chain_solve(k2, prof({1, 1}), 0.6);
  REQUIRE(c1.feasible);
  CHECK(c1.uk[0] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(c1.uk[0] == doctest::Approx(oracle::equal_noise_uk(1, 2, 0.6)));

  const ChainResult bad = chain_solve(kUnitK, prof(kB221), 0.5);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.failed_stage == 2);
}

TEST_CASE("bisect_sigma1 examples") {
  const ScalarInstance s = make_scalar_instance(1.0, 1.0 / 6, {0.5, 0.5});
  const BisectionResult b = bisect_sigma1(s, prof({1, 1}));
  CHECK(std::abs(b.sigma1sq - 0.6) < 1e-10);

  // Target just below k_up pushes the root toward zero.
  const double kt = 0.5 - 1e-7;
  const ScalarInstance near = make_scalar_instance(1.0, 1.0 / (1.0 / kt + 1.0), {0.5, 0.5});
  CHECK(bisect_sigma1(near, prof({1, 1})).sigma1sq < 1e-6);

  const double target = 1881.0 / 9625;
  const double dk = 1.0 / (1.0 / target + 1.0);
  const ScalarInstance t = make_scalar_instance(1.0, dk, {0.5, 0.5, 0.5});
  CHECK(std::abs(bisect_sigma1(t, prof(kB221)).sigma1sq - 0.1) < 1e-6);

  // Target above k_up has no root.
  bool thrown = false;
  try {
    bisect_sigma1(make_scalar_instance(1.0, 0.4, {0.5, 0.5}), prof({1, 1}));
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::kBracketingFailure;
  }
  CHECK(thrown);
}

TEST_CASE("bisection is independent of the initial bracket") {
  Rng rng(21);
  for (int it = 0; it < 20; ++it) {
    const int L = 2 + it % 4;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const double a = bisect_sigma1(s, p, 1e-12, 1e-9).sigma1sq;
    const double b = bisect_sigma1(s, p, 1e-12, 10.0 * s.var_x).sigma1sq;
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("chain limits as sigma_1^2 vanishes") {
  Rng rng(22);
  for (int it = 0; it < 20; ++it) {
    const int L = 2 + it % 4;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const std::vector<double> k = to_sorted_order(p, s.k);
    const ChainResult c = chain_solve(k, p, 1e-8);
    REQUIRE(c.feasible);
    CHECK(std::abs(uk_w(c) - s.k_up) < 1e-6 * s.k_up);
    for (int j = 1; j < p.J(); ++j) CHECK(c.sigma2[j] < 1e-6);
  }
}

TEST_CASE("solve examples") {
  const ScalarSolution loose =
      solve(make_scalar_instance(1.0, 0.4, {0.5, 0.5}), prof({1, 1}));
  CHECK(loose.scenario == Scenario::kLooseCentral);
  CHECK(loose.rates_caller[0] == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(loose.rates_caller[1] == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(loose.d0_star == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(induced_ladder(loose), Error);

  const ScalarInstance si = make_scalar_instance(1.0, 1.0 / 6, {0.5, 0.5});
  const ScalarSolution interior = solve(si, prof({1, 1}));
  CHECK(interior.scenario == Scenario::kInterior);
  CHECK(interior.value == doctest::Approx(0.5 * std::log(6.25)).epsilon(1e-12));
  CHECK(std::abs(interior.ladder.sigma2[0] - 0.6) < 1e-10);
  CHECK(interior.channel.Kw().determinant() == doctest::Approx(0.64));
  CHECK(kkt_residual(si, prof({1, 1}), interior.ladder) < 1e-8);

  const WeightProfile p = prof(kB221);
  const ScalarSolution e9 = solve(make_scalar_instance(1.0, 0.05, {0.5, 0.5, 0.9}), p);
  const ScalarSolution e99 = solve(make_scalar_instance(1.0, 0.05, {0.5, 0.5, 0.99}), p);
  CHECK(e9.scenario == Scenario::kEnhanced);
  CHECK(e99.scenario == Scenario::kEnhanced);
  CHECK(std::abs(e9.value - e99.value) < 1e-8);
  REQUIRE(e9.enhancement.has_value());
  CHECK(e9.enhancement->replaced_index == 2);
  CHECK(e9.enhancement->k_L_prime <= e9.enhancement->k_L);
  CHECK(e9.ladder.lambda > 0.0);
  CHECK(e9.ladder.sigma2.back() == 1.0);
}

TEST_CASE("enhanced value matches the F maximization") {
  const WeightProfile p = prof(kB221);
  const ScalarInstance s = make_scalar_instance(1.0, 0.05, {0.5, 0.5, 0.9});
  const ScalarSolution sol = solve(s, p);
  REQUIRE(sol.scenario == Scenario::kEnhanced);
  CHECK(kkt_residual(s, p, sol.ladder) < 1e-8);
  const std::vector<double> y = maximize_F(s, p);
  const std::vector<double> want = increments(sol.ladder.sigma2);
  for (size_t j = 0; j < y.size(); ++j) CHECK(std::abs(y[j] - want[j]) < 1e-6);
  // On the boundary the gradient is a positive multiple of the all-ones vector.
  const double h = 1e-6;
  for (size_t j = 1; j < want.size(); ++j) {
    std::vector<double> a = want, b = want;
    a[j] += h;
    a[0] -= h;
    b[j] -= h;
    b[0] += h;
    CHECK(std::abs(F_objective(s, p, a) - F_objective(s, p, b)) / (2 * h) < 1e-5);
  }
  std::vector<double> inner = want;
  for (double& x : inner) x *= 1.0 - h;
  CHECK(F_objective(s, p, want) - F_objective(s, p, inner) > 0.0);
}

TEST_CASE("F objective at interior solutions") {
  Rng rng(23);
  for (int it = 0; it < 10; ++it) {
    const int L = 3 + it % 3;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    if (p.J() < 2) continue;
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const ScalarSolution sol = solve(s, p);
    const std::vector<double> y = increments(sol.ladder.sigma2);
    CHECK(std::isfinite(F_objective(s, p, y)));
    for (double g : grad_F(s, p, y)) CHECK(std::abs(g) < 1e-5);
    CHECK(kkt_residual(s, p, sol.ladder) < 1e-8);
    CHECK(sol.ladder.lambda == 0.0);
    const std::vector<double> arg = maximize_F(s, p);
    for (size_t j = 0; j < y.size(); ++j) CHECK(std::abs(arg[j] - y[j]) < 1e-6);
  }
}

TEST_CASE("F objective domain") {
  const ScalarInstance s = make_scalar_instance(1.0, 0.05, {0.5, 0.5, 0.6});
  const std::vector<double> bad{0.1, -0.1};
  CHECK_THROWS_AS(F_objective(s, prof(kB221), bad), Error);
  const std::vector<double> one{0.1};
  CHECK_THROWS_AS(F_objective(s, prof({1, 1, 1}), one), Error);
}

TEST_CASE("kkt residual detects perturbations") {
  const WeightProfile p = prof(kB221);
  const ScalarInstance s = make_scalar_instance(1.0, 0.1, {0.5, 0.5, 0.6});
  const ScalarSolution sol = solve(s, p);
  REQUIRE(sol.scenario == Scenario::kInterior);
  CHECK(kkt_residual(s, p, sol.ladder) < 1e-8);
  ScalarLadder bumped = sol.ladder;
  bumped.sigma2[0] += 1e-4;
  CHECK(kkt_residual(s, p, bumped) > 1e-5);
}

TEST_CASE("induced ladder examples") {
  ScalarSolution sol;
  sol.var_x = 1.0;
  sol.scenario = Scenario::kInterior;
  sol.ladder.sigma2 = {1e-12, 0.5, 1.0 - 1e-15};
  const AuxiliaryLadder l = induced_ladder(sol);
  CHECK(l.N[0](0, 0) < 1e-11);
  CHECK(l.N[1](0, 0) == doctest::Approx(1.0));
  CHECK(l.N[2](0, 0) == doctest::Approx(1e12));
}

TEST_CASE("tightness on random interior instances") {
  Rng rng(24);
  for (int it = 0; it < 25; ++it) {
    const int L = 2 + it % 4;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const ScalarSolution sol = solve(s, p);
    const double ws = weighted_sum(p, sol.rates);
    CHECK(std::abs(ws - sol.value) < 1e-8);
    const double b = bound_objective(to_problem_instance(s), p, induced_ladder(sol));
    CHECK(std::abs(b - ws) < 1e-6);
    CHECK(fixedpoint_residual(sol.channel) < 1e-9);
    if (p.J() >= 2) CHECK(proportionality_residual(sol.channel) < 1e-8);
  }
}

TEST_CASE("enhancement invariants on random instances") {
  Rng rng(25);
  int built = 0;
  for (int it = 0; it < 60 && built < 8; ++it) {
    const int L = 2 + it % 3;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const auto s = random_enhanced_instance(rng, L, p);
    if (!s) continue;
    ++built;
    const ScalarSolution a = solve(*s, p);
    REQUIRE(a.enhancement.has_value());
    CHECK(a.enhancement->k_L_prime <= a.enhancement->k_L);
    CHECK(a.ladder.lambda >= 0.0);
    ScalarInstance moved = *s;
    const int idx = a.enhancement->replaced_index;
    moved.d[idx] = 0.5 * (moved.d[idx] + moved.var_x);
    const ScalarSolution b = solve(make_scalar_instance(moved.var_x, moved.d0, moved.d), p);
    CHECK(std::abs(a.value - b.value) < 1e-8);
  }
  CHECK(built == 8);
}

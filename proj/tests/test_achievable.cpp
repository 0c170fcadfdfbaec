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

#include "doctest.h"
#include "mdr/achievable.hpp"
#include "mdr/scalar_solver.hpp"
#include "mdr/verify.hpp"

using namespace mdr;

namespace {

OptimizerOptions quick() {
  OptimizerOptions o;
  o.starts = 3;
  return o;
}

}  // namespace

TEST_CASE("achieve reaches the scalar optimum on the sum-rate example") {
  const std::vector<double> beta{1, 1};
  const WeightProfile p = group_weights(beta);
  const ProblemInstance inst =
      to_problem_instance(make_scalar_instance(1.0, 1.0 / 6, {0.5, 0.5}));
  const AchieveResult r = achieve(inst, p, quick());
  REQUIRE(r.channel.has_value());
  CHECK(channel_meets_constraints(inst, *r.channel));
  CHECK(r.value == doctest::Approx(0.5 * std::log(6.25)).epsilon(1e-6));
  CHECK(r.value >= 0.5 * std::log(6.25) - 1e-9);
  CHECK(weighted_sum(p, r.rates) == doctest::Approx(r.value).epsilon(1e-12));
  CHECK_FALSE(r.loose_corner);
}

TEST_CASE("achieve takes the loose corner when the central constraint is slack") {
  const std::vector<double> beta{2, 1};
  const WeightProfile p = group_weights(beta);
  const ProblemInstance inst =
      to_problem_instance(make_scalar_instance(1.0, 0.4, {0.5, 0.5}));
  const AchieveResult r = achieve(inst, p, quick());
  CHECK(r.loose_corner);
  CHECK(r.value == doctest::Approx(loose_central_bound(inst, p)).epsilon(1e-12));
  CHECK(r.rates_caller[0] == doctest::Approx(0.5 * std::log(2.0)));
}

TEST_CASE("achieve brackets the scalar optimum from above") {
  Rng rng(41);
  for (int it = 0; it < 3; ++it) {
    const int L = 2 + it % 2;
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const double opt = solve(s, p).value;
    const AchieveResult r = achieve(to_problem_instance(s), p, quick());
    REQUIRE(r.channel.has_value());
    CHECK(channel_meets_constraints(to_problem_instance(s), *r.channel));
    CHECK(r.value >= opt - 1e-8);
    CHECK(r.value - opt < 1e-4);
  }
}

TEST_CASE("achieve on an isotropic vector instance") {
  const std::vector<double> beta{1, 1};
  const ProblemInstance iso =
      make_instance(SpdMatrix::identity(2), SpdMatrix::identity(2, 1.0 / 6),
                    {SpdMatrix::identity(2, 0.5), SpdMatrix::identity(2, 0.5)});
  const AchieveResult r = achieve(iso, group_weights(beta), quick());
  REQUIRE(r.channel.has_value());
  CHECK(r.value >= std::log(6.25) - 1e-8);
  CHECK(r.value - std::log(6.25) < 1e-4);
}

TEST_CASE("channel constraint check rejects excessive noise") {
  const std::vector<double> beta{1, 1};
  const WeightProfile p = group_weights(beta);
  const ProblemInstance inst =
      to_problem_instance(make_scalar_instance(1.0, 1.0 / 6, {0.5, 0.5}));
  const auto good = TestChannel::make({SpdMatrix::scalar(1), SpdMatrix::scalar(1)},
                                      {SpdMatrix::scalar(0.6)}, p);
  CHECK(channel_meets_constraints(inst, good));
  const auto noisy = TestChannel::make({SpdMatrix::scalar(1.2), SpdMatrix::scalar(1)},
                                       {SpdMatrix::scalar(0.6)}, p);
  CHECK_FALSE(channel_meets_constraints(inst, noisy));
  const auto weak = TestChannel::make({SpdMatrix::scalar(1), SpdMatrix::scalar(1)},
                                      {SpdMatrix::scalar(0.3)}, p);
  CHECK_FALSE(channel_meets_constraints(inst, weak));
}

// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "qgame/strategy_grid.hpp"

namespace qgame {
namespace {

TEST_CASE("grid sizes match the published unique-strategy counts") {
  CHECK(build_grid({kPi, kPi / 2, kPi / 2}).size() == 8);
  CHECK(build_grid({kPi / 8, kPi / 8, kPi / 8}).size() == 1824);
  CHECK(build_grid({kPi / 32, kPi / 8, kPi / 8}).size() == 7968);
}

TEST_CASE("coarse grid contents") {
  const StrategyGrid grid = build_grid(oracle::kCoarseSteps);
  REQUIRE(grid.size() == 8);
  // theta = 0 keeps phi in {0, pi/2, pi, 3pi/2}; theta = pi keeps alpha in
  // the same four values. Everything else is a duplicate.
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(grid[i].params.theta() == 0.0);
    CHECK(grid[i].params.phi() == doctest::Approx(i * kPi / 2));
    CHECK(grid[i].params.alpha() == 0.0);
    CHECK(grid[i + 4].params.theta() == kPi);
    CHECK(grid[i + 4].params.phi() == 0.0);
    CHECK(grid[i + 4].params.alpha() == doctest::Approx(i * kPi / 2));
  }
}

TEST_CASE("retained matrices are pairwise distinct") {
  const StrategyGrid coarse = build_grid(oracle::kCoarseSteps);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    for (std::size_t j = i + 1; j < coarse.size(); ++j)
      CHECK(max_abs_diff(coarse[i].matrix, coarse[j].matrix) > kGridDedupTol);

  const StrategyGrid fine = build_grid({kPi / 8, kPi / 8, kPi / 8});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, fine.size() - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    CHECK(max_abs_diff(fine[i].matrix, fine[j].matrix) > kGridDedupTol);
  }
}

TEST_CASE("entries hold their own matrix and are lexicographically ordered") {
  for (const SteppingParams& steps :
       {oracle::kCoarseSteps, SteppingParams{kPi / 8, kPi / 8, kPi / 8},
        SteppingParams{kPi / 3, 0.9, 2.0}}) {
    const StrategyGrid grid = build_grid(steps);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(approx_equal(grid[i].matrix, strategy_matrix(grid[i].params),
                         kAlgebraTol));
      if (i > 0) CHECK(grid[i - 1].params < grid[i].params);
    }
    CHECK(grid[0].params == StrategyParams(0, 0, 0));
  }
}

TEST_CASE("grid construction is deterministic") {
  const SteppingParams steps{kPi / 4, kPi / 4, kPi / 4};
  const StrategyGrid a = build_grid(steps);
  const StrategyGrid b = build_grid(steps);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].matrix == b[i].matrix);
  }
}

TEST_CASE("endpoints are included when they are whole multiples") {
  // pi/3 does not divide exactly in floating point; 3 * (pi/3) must still
  // land on theta = pi.
  const StrategyGrid grid = build_grid({kPi / 3, kPi, kPi});
  bool has_pi = false;
  for (const GridEntry& e : grid.entries()) has_pi |= e.params.theta() == kPi;
  CHECK(has_pi);
}

TEST_CASE("invalid steps are rejected") {
  CHECK_THROWS_AS(build_grid({0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_grid({1.0, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_grid({1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_grid({kPi + 0.1, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_grid({1.0, 7.0, 1.0}), std::invalid_argument);
}

TEST_CASE("grid_lookup") {
  const StrategyGrid grid = build_grid(oracle::kCoarseSteps);
  CHECK(grid_lookup(grid, {0, 0, 0}) == std::optional<std::size_t>(0));
  const auto flip = grid_lookup(grid, {kPi, 0, 0});
  REQUIRE(flip.has_value());
  CHECK(grid_lookup(grid, {kPi, 2 * kPi, 0}) == flip);
  CHECK_FALSE(grid_lookup(grid, {kPi / 3, 0, 0}).has_value());
}

}  // namespace
}  // namespace qgame

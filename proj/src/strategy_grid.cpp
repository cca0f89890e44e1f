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


#include "qgame/strategy_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgame {
namespace {

// Number of whole steps that fit in [0, bound]. A multiple that lands within
// rounding noise of the bound counts as the bound itself.
std::size_t step_count(double step, double bound) {
  return static_cast<std::size_t>(std::floor(bound / step + 1e-9));
}

double multiple(std::size_t n, double step, double bound) {
  return std::min(static_cast<double>(n) * step, bound);
}

void check_step(const char* name, double step, double bound) {
  if (!std::isfinite(step) || step <= 0.0 || step > bound * (1.0 + 1e-12)) {
    throw std::invalid_argument(std::string("step ") + name + " = " +
                                std::to_string(step) + " must lie in (0, " +
                                std::to_string(bound) + "]");
  }
}

}  // namespace

void SteppingParams::validate() const {
  check_step("d_theta", d_theta, kPi);
  check_step("d_phi", d_phi, 2.0 * kPi);
  check_step("d_alpha", d_alpha, 2.0 * kPi);
}

StrategyGrid build_grid(const SteppingParams& steps) {
  steps.validate();
  const std::size_t n_theta = step_count(steps.d_theta, kPi);
  const std::size_t n_phi = step_count(steps.d_phi, 2.0 * kPi);
  const std::size_t n_alpha = step_count(steps.d_alpha, 2.0 * kPi);

  // Candidates are generated in lexicographic order, so the first survivor of
  // each duplicate class is its lexicographically smallest triple. Entry
  // moduli are |cos(theta/2)| and |sin(theta/2)|, both monotone on [0, pi], so
  // a candidate can only duplicate survivors from theta rows whose moduli lie
  // within tolerance of its own.
  std::vector<GridEntry> kept;
  std::vector<std::pair<double, std::size_t>> row_starts;  // (theta, index)
  for (std::size_t j = 0; j <= n_theta; ++j) {
    const double theta = multiple(j, steps.d_theta, kPi);
    row_starts.emplace_back(theta, kept.size());
    std::size_t compare_begin = kept.size();
    for (auto it = row_starts.rbegin(); it != row_starts.rend(); ++it) {
      const double dc = std::abs(std::cos(it->first / 2.0) - std::cos(theta / 2.0));
      const double ds = std::abs(std::sin(it->first / 2.0) - std::sin(theta / 2.0));
      if (dc > kGridDedupTol || ds > kGridDedupTol) break;
      compare_begin = it->second;
    }
    for (std::size_t k = 0; k <= n_phi; ++k) {
      const double phi = multiple(k, steps.d_phi, 2.0 * kPi);
      for (std::size_t l = 0; l <= n_alpha; ++l) {
        const StrategyParams params(theta, phi,
                                    multiple(l, steps.d_alpha, 2.0 * kPi));
        const ComplexMatrix2 m = strategy_matrix(params);
        const bool duplicate = std::any_of(
            kept.begin() + static_cast<std::ptrdiff_t>(compare_begin),
            kept.end(), [&](const GridEntry& e) {
              return approx_equal(e.matrix, m, kGridDedupTol);
            });
        if (!duplicate) kept.push_back({params, m});
      }
    }
  }
  return StrategyGrid(std::move(kept), steps);
}

std::optional<std::size_t> grid_lookup(const StrategyGrid& grid,
                                       const StrategyParams& params) {
  const ComplexMatrix2 m = strategy_matrix(params);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (approx_equal(grid[i].matrix, m, kGridDedupTol)) return i;
  }
  return std::nullopt;
}

}  // namespace qgame

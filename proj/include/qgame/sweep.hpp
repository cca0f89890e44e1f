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


#ifndef QGAME_SWEEP_HPP_
#define QGAME_SWEEP_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qgame/equilibrium.hpp"
#include "qgame/ewl.hpp"
#include "qgame/strategy_grid.hpp"

namespace qgame {

inline constexpr std::size_t kDefaultGammaPoints = 65;
inline constexpr std::size_t kDefaultPriorPoints = 21;
inline constexpr double kDefaultBinWidth = 0.05;

// One equilibrium found at one sweep point. strategy_params holds the
// parameter triple of each entry of equilibrium.strategy_indices.
struct SweepRecord {
  double gamma = 0.0;
  std::optional<double> p;
  NashEquilibrium equilibrium;
  std::vector<StrategyParams> strategy_params;
};

// n points from lo to hi inclusive; the last point is exactly hi.
std::vector<double> uniform_points(double lo, double hi, std::size_t n);

struct SweepOptions {
  double epsilon = kDefaultEpsilon;
  unsigned threads = 1;
};

// Records are ordered by (gamma, strategy indices). Gamma points must be
// sorted and inside [0, pi/2]; gammas with no equilibrium add no records.
std::vector<SweepRecord> gamma_sweep(const GameDefinition& game,
                                     std::shared_ptr<const StrategyGrid> grid,
                                     std::span<const double> gamma_points,
                                     const SweepOptions& options = {});

// Records over the full (gamma, p) product, ordered by (gamma, p, indices).
std::vector<SweepRecord> bayes_sweep(const GameDefinition& game1,
                                     const GameDefinition& game2,
                                     std::shared_ptr<const StrategyGrid> grid,
                                     std::span<const double> gamma_points,
                                     std::span<const double> p_points,
                                     const SweepOptions& options = {});

struct CriticalBracket {
  double last_gamma_with = 0.0;
  double first_gamma_without = 0.0;
  PayoffPair branch_payoff_at_last;
};

using BranchSelector = std::function<bool(const SweepRecord&)>;

// Selects every record.
bool any_branch(const SweepRecord&);

// Selects records whose first two payoffs match (a, b) within tol.
BranchSelector payoff_branch(double a, double b, double tol = 1e-9);

// The adjacent pair of sweep points after which the selected branch never
// appears again. Empty when the branch never appears or is still present at
// the last point.
std::optional<CriticalBracket> critical_gamma(
    std::span<const SweepRecord> records, std::span<const double> gamma_points,
    const BranchSelector& selector);

// (theta_A, theta_B) for each record; for Bayesian records B is B1.
std::vector<std::pair<double, double>> scatter_theta(
    std::span<const SweepRecord> records);

// (theta_A, payoff_A) for each record.
std::vector<std::pair<double, double>> scatter_theta_payoff(
    std::span<const SweepRecord> records);

struct HistogramBin {
  double center = 0.0;
  std::size_t count = 0;
};

// A-payoffs of the records at the sweep gamma nearest to gamma_slice, binned
// on centers k * bin_width. Ascending by center; empty bins are omitted.
// Throws std::invalid_argument for a non-positive bin width.
std::vector<HistogramBin> payoff_histogram(std::span<const SweepRecord> records,
                                           double gamma_slice,
                                           double bin_width = kDefaultBinWidth);

}  // namespace qgame

#endif  // QGAME_SWEEP_HPP_

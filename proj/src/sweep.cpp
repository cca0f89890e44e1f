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


#include "qgame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace qgame {
namespace {

void require_sorted(std::span<const double> points, const char* what) {
  if (!std::is_sorted(points.begin(), points.end())) {
    throw std::invalid_argument(std::string(what) + " points must be sorted");
  }
}

SweepRecord make_record(double gamma, std::optional<double> p,
                        NashEquilibrium eq, const StrategyGrid& grid) {
  SweepRecord r;
  r.gamma = gamma;
  r.p = p;
  r.strategy_params.reserve(eq.strategy_indices.size());
  for (std::size_t idx : eq.strategy_indices) {
    r.strategy_params.push_back(grid[idx].params);
  }
  r.equilibrium = std::move(eq);
  return r;
}

}  // namespace

std::vector<double> uniform_points(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("point count must be positive");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = lo + static_cast<double>(i) * step;
  }
  out[n - 1] = hi;
  return out;
}

std::vector<SweepRecord> gamma_sweep(const GameDefinition& game,
                                     std::shared_ptr<const StrategyGrid> grid,
                                     std::span<const double> gamma_points,
                                     const SweepOptions& options) {
  require_sorted(gamma_points, "gamma");
  std::vector<SweepRecord> out;
  for (double g : gamma_points) {
    const PayoffTensor t =
        payoff_tensor(game, grid, EntanglementParam(g), options.threads);
    for (NashEquilibrium& eq : nash_two_player(t, options.epsilon)) {
      out.push_back(make_record(g, std::nullopt, std::move(eq), *grid));
    }
  }
  return out;
}

std::vector<SweepRecord> bayes_sweep(const GameDefinition& game1,
                                     const GameDefinition& game2,
                                     std::shared_ptr<const StrategyGrid> grid,
                                     std::span<const double> gamma_points,
                                     std::span<const double> p_points,
                                     const SweepOptions& options) {
  require_sorted(gamma_points, "gamma");
  require_sorted(p_points, "p");
  std::vector<PriorProbability> priors;
  priors.reserve(p_points.size());
  for (double p : p_points) priors.emplace_back(p);

  std::vector<SweepRecord> out;
  for (double g : gamma_points) {
    const EntanglementParam gamma(g);
    const PayoffTensor t1 = payoff_tensor(game1, grid, gamma, options.threads);
    const PayoffTensor t2 = payoff_tensor(game2, grid, gamma, options.threads);
    for (const PriorProbability& prior : priors) {
      for (NashEquilibrium& eq :
           nash_bayesian(t1, t2, prior, options.epsilon)) {
        out.push_back(make_record(g, prior.p(), std::move(eq), *grid));
      }
    }
  }
  return out;
}

bool any_branch(const SweepRecord&) { return true; }

BranchSelector payoff_branch(double a, double b, double tol) {
  return [a, b, tol](const SweepRecord& r) {
    const std::vector<double>& v = r.equilibrium.payoffs;
    return v.size() >= 2 && std::abs(v[0] - a) <= tol &&
           std::abs(v[1] - b) <= tol;
  };
}

std::optional<CriticalBracket> critical_gamma(
    std::span<const SweepRecord> records, std::span<const double> gamma_points,
    const BranchSelector& selector) {
  const SweepRecord* last = nullptr;
  for (const SweepRecord& r : records) {
    if (selector(r) && (last == nullptr || r.gamma >= last->gamma)) last = &r;
  }
  if (last == nullptr) return std::nullopt;
  auto it = std::upper_bound(gamma_points.begin(), gamma_points.end(),
                             last->gamma);
  if (it == gamma_points.end()) return std::nullopt;

  CriticalBracket bracket;
  bracket.last_gamma_with = last->gamma;
  bracket.first_gamma_without = *it;
  // Report the best A payoff of the branch at its last appearance.
  bool first = true;
  for (const SweepRecord& r : records) {
    if (r.gamma != last->gamma || !selector(r)) continue;
    const PayoffPair v{r.equilibrium.payoffs[0], r.equilibrium.payoffs[1]};
    if (first || v.a > bracket.branch_payoff_at_last.a) {
      bracket.branch_payoff_at_last = v;
      first = false;
    }
  }
  return bracket;
}

std::vector<std::pair<double, double>> scatter_theta(
    std::span<const SweepRecord> records) {
  std::vector<std::pair<double, double>> out;
  out.reserve(records.size());
  for (const SweepRecord& r : records) {
    out.emplace_back(r.strategy_params[0].theta(),
                     r.strategy_params[1].theta());
  }
  return out;
}

std::vector<std::pair<double, double>> scatter_theta_payoff(
    std::span<const SweepRecord> records) {
  std::vector<std::pair<double, double>> out;
  out.reserve(records.size());
  for (const SweepRecord& r : records) {
    out.emplace_back(r.strategy_params[0].theta(), r.equilibrium.payoffs[0]);
  }
  return out;
}

std::vector<HistogramBin> payoff_histogram(std::span<const SweepRecord> records,
                                           double gamma_slice,
                                           double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::invalid_argument("histogram bin width must be positive");
  }
  if (records.empty()) return {};
  double nearest = records.front().gamma;
  for (const SweepRecord& r : records) {
    if (std::abs(r.gamma - gamma_slice) < std::abs(nearest - gamma_slice)) {
      nearest = r.gamma;
    }
  }
  std::map<long long, std::size_t> counts;
  for (const SweepRecord& r : records) {
    if (r.gamma != nearest) continue;
    ++counts[std::llround(r.equilibrium.payoffs[0] / bin_width)];
  }
  std::vector<HistogramBin> out;
  out.reserve(counts.size());
  for (const auto& [bin, count] : counts) {
    out.push_back({static_cast<double>(bin) * bin_width, count});
  }
  return out;
}

}  // namespace qgame

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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also reports its wall time against its budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/ewl.hpp"
#include "qgame/strategy_grid.hpp"
#include "qgame/sweep.hpp"

namespace qgame {
namespace {

// Critical gamma of the PD branch on the 8-strategy grid, frozen from the
// deviation-oracle bisection (see test_sweep).
constexpr double kPdCriticalGamma = 0.6154797090;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::shared_ptr<const StrategyGrid> shared_grid(const SteppingParams& s) {
  return std::make_shared<const StrategyGrid>(build_grid(s));
}

std::vector<double> default_gammas() {
  return uniform_points(0.0, kPi / 2, kDefaultGammaPoints);
}

Outcome grid_counts() {
  Outcome o;
  const std::size_t coarse = build_grid({kPi, kPi / 2, kPi / 2}).size();
  const std::size_t fine = build_grid({kPi / 8, kPi / 8, kPi / 8}).size();
  const std::size_t finest = build_grid({kPi / 32, kPi / 8, kPi / 8}).size();
  o.require(coarse == 8, "coarse grid has " + std::to_string(coarse));
  o.require(fine == 1824, "pi/8 grid has " + std::to_string(fine));
  o.require(finest == 7968, "pi/32 grid has " + std::to_string(finest));
  return o;
}

Outcome classical_embedding() {
  Outcome o;
  const GameDefinition pd = oracle::prisoners_dilemma();
  const ComplexMatrix2 c = ComplexMatrix2::Identity();
  const ComplexMatrix2 d = strategy_matrix(StrategyParams(kPi, 0.0, kPi / 2));
  // Table cells for (A, B) in order CC, CD, DC, DD.
  const std::array<std::array<double, 2>, 4> table{
      {{3, 3}, {0, 5}, {5, 0}, {1, 1}}};
  const std::array<const ComplexMatrix2*, 2> moves{&c, &d};
  for (double gamma : default_gammas()) {
    for (std::size_t cell = 0; cell < 4; ++cell) {
      const PayoffPair p = expected_payoffs(
          CircuitKernel(EntanglementParam(gamma)).probs(*moves[cell / 2], *moves[cell % 2]),
          pd);
      o.require(std::abs(p.a - table[cell][0]) <= 1e-9 &&
                    std::abs(p.b - table[cell][1]) <= 1e-9,
                "cell " + std::to_string(cell) + " off at gamma " + std::to_string(gamma));
    }
  }
  return o;
}

Outcome bell_state() {
  Outcome o;
  const StateVector4 psi = qgame::apply(entangler(EntanglementParam(kPi / 2)), kBasis00);
  const std::array<double, 4> want{0.5, 0.0, 0.0, 0.5};
  for (std::size_t j = 0; j < 4; ++j) {
    o.require(std::abs(std::norm(psi[j]) - want[j]) <= 1e-12,
              "outcome " + std::to_string(j) + " probability " +
                  std::to_string(std::norm(psi[j])));
  }
  return o;
}

Outcome pd_phase_structure() {
  Outcome o;
  const auto grid = shared_grid(oracle::kCoarseSteps);
  const std::vector<double> gammas = default_gammas();
  const auto records = gamma_sweep(oracle::prisoners_dilemma(), grid, gammas);

  std::map<double, double> best_payoff;
  for (const SweepRecord& r : records) {
    const double a = r.equilibrium.payoffs[0];
    const auto [it, fresh] = best_payoff.emplace(r.gamma, a);
    if (!fresh) it->second = std::max(it->second, a);
    if (r.gamma == 0.0) {
      o.require(std::abs(r.equilibrium.payoffs[0] - 1.0) <= 1e-9 &&
                    std::abs(r.equilibrium.payoffs[1] - 1.0) <= 1e-9,
                "(a) classical equilibrium payoff is not (1, 1)");
    }
  }
  o.require(best_payoff.count(0.0) == 1, "(a) no equilibria at gamma = 0");
  double previous = -std::numeric_limits<double>::infinity();
  for (const auto& [gamma, value] : best_payoff) {
    o.require(value >= previous - 1e-9, "(b) max payoff drops at gamma " +
                                            std::to_string(gamma));
    previous = value;
  }
  o.require(best_payoff.count(gammas.back()) == 0, "(c) equilibria at gamma = pi/2");

  const auto bracket = critical_gamma(records, gammas, any_branch);
  o.require(bracket.has_value(), "(d) no critical bracket");
  if (bracket) {
    o.require(bracket->last_gamma_with > 0.0 && bracket->first_gamma_without < kPi / 2,
              "(d) bracket touches the interval ends");
    o.require(bracket->last_gamma_with < kPdCriticalGamma &&
                  kPdCriticalGamma < bracket->first_gamma_without,
              "(d) bracket does not contain the golden critical gamma");
  }
  return o;
}

Outcome matching_pennies_empty() {
  Outcome o;
  const auto records = gamma_sweep(oracle::matching_pennies(),
                                   shared_grid(oracle::kCoarseSteps), default_gammas());
  o.require(records.empty(), std::to_string(records.size()) + " equilibria found");
  return o;
}

// Records at one (gamma, p) projected onto (gamma, a, b).
std::set<std::tuple<double, std::size_t, std::size_t>> project(
    const std::vector<SweepRecord>& bayes, double p, bool first_type) {
  std::set<std::tuple<double, std::size_t, std::size_t>> out;
  for (const SweepRecord& r : bayes) {
    if (r.p != p) continue;
    const auto& idx = r.equilibrium.strategy_indices;
    out.emplace(r.gamma, idx[0], first_type ? idx[1] : idx[2]);
  }
  return out;
}

std::set<std::tuple<double, std::size_t, std::size_t>> pairs(
    const std::vector<SweepRecord>& two_player) {
  std::set<std::tuple<double, std::size_t, std::size_t>> out;
  for (const SweepRecord& r : two_player) {
    out.emplace(r.gamma, r.equilibrium.strategy_indices[0],
                r.equilibrium.strategy_indices[1]);
  }
  return out;
}

Outcome bayesian_boundaries() {
  Outcome o;
  const auto grid = shared_grid(oracle::kCoarseSteps);
  const std::vector<double> gammas = default_gammas();
  const std::vector<double> ps = uniform_points(0.0, 1.0, kDefaultPriorPoints);
  const GameDefinition pd = oracle::prisoners_dilemma();
  const GameDefinition dl = oracle::deadlock();
  const auto pd_pairs = pairs(gamma_sweep(pd, grid, gammas));
  const auto dl_pairs = pairs(gamma_sweep(dl, grid, gammas));

  for (const GameDefinition* second : {&pd, &dl}) {
    const auto bayes = bayes_sweep(pd, *second, grid, gammas, ps);
    const auto& second_pairs = second == &pd ? pd_pairs : dl_pairs;
    const std::string label = "pd vs " + second->name;
    o.require(project(bayes, 1.0, true) == pd_pairs, label + ": p = 1 projection differs");
    o.require(project(bayes, 0.0, false) == second_pairs,
              label + ": p = 0 projection differs");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20260418);
  for (int i = 0; i < 200; ++i) {
    const GameDefinition game = oracle::random_game(rng);
    const double gamma = oracle::random_gamma(rng);
    const ComplexMatrix2 ua = oracle::random_unitary(rng);
    const ComplexMatrix2 ub = oracle::random_unitary(rng);
    const auto want = oracle::naive_payoffs(game, gamma, ua, ub);
    const PayoffPair got =
        expected_payoffs(CircuitKernel(EntanglementParam(gamma)).probs(ua, ub), game);
    o.require(std::abs(got.a - want[0]) <= 1e-12 && std::abs(got.b - want[1]) <= 1e-12,
              "sample " + std::to_string(i) + " differs from the naive circuit");
  }

  const auto grid = shared_grid(oracle::kCoarseSteps);
  const GameDefinition pd = oracle::prisoners_dilemma();
  for (double gamma : uniform_points(0.0, kPi / 2, 5)) {
    const auto table = oracle::naive_table(pd, *grid, gamma);
    std::set<std::pair<std::size_t, std::size_t>> returned;
    for (const NashEquilibrium& eq :
         nash_two_player(payoff_tensor(pd, grid, EntanglementParam(gamma)))) {
      returned.emplace(eq.strategy_indices[0], eq.strategy_indices[1]);
    }
    for (std::size_t a = 0; a < grid->size(); ++a) {
      for (std::size_t b = 0; b < grid->size(); ++b) {
        const bool stable = oracle::no_profitable_deviation(table, a, b, kDefaultEpsilon);
        o.require(stable == (returned.count({a, b}) == 1),
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") disagrees with the deviation oracle at gamma " +
                      std::to_string(gamma));
      }
    }
  }
  return o;
}

Outcome fine_grid_bounds() {
  Outcome o;
  const GameDefinition game = oracle::stag_hunt();
  const std::vector<double> gammas = default_gammas();
  const auto coarse = gamma_sweep(game, shared_grid(oracle::kCoarseSteps), gammas);
  const auto fine_grid = shared_grid({kPi / 4, kPi / 4, kPi / 4});
  const auto fine = gamma_sweep(game, fine_grid, gammas, SweepOptions{kDefaultEpsilon, 0});

  std::map<double, std::pair<double, double>> envelope;
  std::map<double, std::set<double>> coarse_branches;
  for (const SweepRecord& r : coarse) {
    const double a = r.equilibrium.payoffs[0];
    auto [it, fresh] = envelope.emplace(r.gamma, std::make_pair(a, a));
    it->second.first = std::min(it->second.first, a);
    it->second.second = std::max(it->second.second, a);
    coarse_branches[r.gamma].insert(std::round(a * 1e9) / 1e9);
  }
  // The game must really have two branches somewhere on the coarse grid.
  bool two_branches = false;
  for (const auto& [gamma, set] : coarse_branches) two_branches |= set.size() >= 2;
  o.require(two_branches, "stag hunt never shows two equilibrium branches");

  o.require(!fine.empty(), "no equilibria on the refined grid");
  for (const SweepRecord& r : fine) {
    const auto it = envelope.find(r.gamma);
    if (it == envelope.end()) {
      o.require(false, "refined equilibrium at gamma " + std::to_string(r.gamma) +
                           " with no coarse branch");
      continue;
    }
    const double a = r.equilibrium.payoffs[0];
    o.require(a >= it->second.first - 1e-6 && a <= it->second.second + 1e-6,
              "payoff " + std::to_string(a) + " outside the envelope at gamma " +
                  std::to_string(r.gamma));
  }
  o.detail = o.ok ? std::to_string(fine_grid->size()) + " strategies, " +
                        std::to_string(fine.size()) + " equilibria"
                  : o.detail;
  return o;
}

Outcome fine_grid_performance() {
  Outcome o;
  const auto grid = shared_grid({kPi / 8, kPi / 8, kPi / 8});
  o.require(grid->size() == 1824, "grid has " + std::to_string(grid->size()));
  const auto records = gamma_sweep(oracle::das_brother(), grid, default_gammas(),
                                   SweepOptions{kDefaultEpsilon, 0});
  o.require(!records.empty(), "no equilibria found");
  if (o.ok) o.detail = std::to_string(records.size()) + " equilibria";
  return o;
}

Outcome classical_plane() {
  Outcome o;
  std::mt19937_64 rng(7);
  const CircuitKernel kernel{EntanglementParam(0.0)};
  for (int i = 0; i < 500; ++i) {
    const StrategyParams sa = oracle::random_params(rng);
    const StrategyParams sb = oracle::random_params(rng);
    const OutcomeProbs p = kernel.probs(strategy_matrix(sa), strategy_matrix(sb));
    // Marginals: A plays |1> with p10 + p11, B with p01 + p11.
    const double a1 = p[2] + p[3];
    const double b1 = p[1] + p[3];
    const std::array<double, 4> product{(1 - a1) * (1 - b1), (1 - a1) * b1, a1 * (1 - b1),
                                        a1 * b1};
    for (std::size_t j = 0; j < 4; ++j) {
      o.require(std::abs(p[j] - product[j]) <= 1e-10,
                "sample " + std::to_string(i) + " does not factorize");
    }
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace qgame

int main() {
  using namespace qgame;
  const std::vector<Criterion> criteria{
      {1, "grid counts 8 / 1824 / 7968", 5.0, grid_counts},
      {2, "classical embedding over 65 gamma", 1.0, classical_embedding},
      {3, "Bell state from the maximal entangler", 1.0, bell_state},
      {4, "prisoner's dilemma phase structure", 2.0, pd_phase_structure},
      {5, "matching pennies has no equilibria", 2.0, matching_pennies_empty},
      {6, "Bayesian p = 0 / p = 1 boundaries", 30.0, bayesian_boundaries},
      {7, "optimized path vs naive and deviation oracles", 10.0, oracle_equivalence},
      {8, "refined grid inside the coarse envelope", 600.0, fine_grid_bounds},
      {9, "1824-strategy sweep over 65 gamma", 120.0, fine_grid_performance},
      {10, "gamma = 0 outcomes factorize", 1.0, classical_plane},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_s) {
      outcome.ok = false;
      outcome.detail = "over the " + std::to_string(c.budget_s) + " s budget";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                c.number, c.name, seconds, outcome.detail.empty() ? "" : " - ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

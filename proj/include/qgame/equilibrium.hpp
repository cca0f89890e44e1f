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


#ifndef QGAME_EQUILIBRIUM_HPP_
#define QGAME_EQUILIBRIUM_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/strategy_grid.hpp"

namespace qgame {

// Default tie tolerance for best responses, in payoff units.
inline constexpr double kDefaultEpsilon = 1e-9;

// Expected payoffs of one game at one gamma for every pair of grid
// strategies. Row index is player A's strategy, column index is player B's.
class PayoffTensor {
 public:
  PayoffTensor(GameDefinition game, std::shared_ptr<const StrategyGrid> grid,
               EntanglementParam gamma, std::vector<PayoffPair> values);

  std::size_t size() const { return n_; }
  const PayoffPair& at(std::size_t a, std::size_t b) const {
    return values_[a * n_ + b];
  }
  const GameDefinition& game() const { return game_; }
  const StrategyGrid& grid() const { return *grid_; }
  const std::shared_ptr<const StrategyGrid>& grid_ptr() const { return grid_; }
  EntanglementParam gamma() const { return gamma_; }

 private:
  GameDefinition game_;
  std::shared_ptr<const StrategyGrid> grid_;
  EntanglementParam gamma_;
  std::size_t n_;
  std::vector<PayoffPair> values_;
};

// Fills rows in parallel when threads > 1 (0 picks the hardware count).
// Throws std::invalid_argument for an empty grid.
PayoffTensor payoff_tensor(const GameDefinition& game,
                           std::shared_ptr<const StrategyGrid> grid,
                           EntanglementParam gamma, unsigned threads = 1);

struct BestResponseSet {
  Player responder = Player::kA;
  std::size_t opponent_index = 0;
  std::vector<std::size_t> best_indices;  // ascending, never empty
  double best_value = 0.0;
};

// One set per opponent strategy: every responder strategy whose payoff is
// within epsilon of the best one.
std::vector<BestResponseSet> best_responses(const PayoffTensor& tensor,
                                            Player responder,
                                            double epsilon = kDefaultEpsilon);

// strategy_indices is (A, B) for two-player games and (A, B1, B2) for
// Bayesian ones; payoffs follow the same order, with A's entry being the
// prior-weighted payoff in the Bayesian case.
struct NashEquilibrium {
  std::vector<std::size_t> strategy_indices;
  std::vector<double> payoffs;

  friend bool operator==(const NashEquilibrium&,
                         const NashEquilibrium&) = default;
};

// Pairs (i, j) with i a best response to j and j a best response to i, in
// lexicographic index order.
std::vector<NashEquilibrium> nash_two_player(const PayoffTensor& tensor,
                                             double epsilon = kDefaultEpsilon);

class PriorProbability {
 public:
  // p in [0, 1]; throws std::out_of_range.
  explicit PriorProbability(double p);

  double p() const { return p_; }

 private:
  double p_;
};

// p * t1(a, b1).a + (1 - p) * t2(a, b2).a. Throws std::invalid_argument when
// the tensors were built on different grids or gammas.
double bayesian_payoff_a(const PayoffTensor& t1, const PayoffTensor& t2,
                         std::size_t a, std::size_t b1, std::size_t b2,
                         PriorProbability p);

// Triples (a, b1, b2) where b1 and b2 best-respond to a in their own games
// and a best-responds to (b1, b2) under the prior-weighted payoff.
std::vector<NashEquilibrium> nash_bayesian(const PayoffTensor& t1,
                                           const PayoffTensor& t2,
                                           PriorProbability p,
                                           double epsilon = kDefaultEpsilon);

// Equilibria sharing a payoff vector (within tol), in first-seen order.
struct PayoffClass {
  std::vector<double> payoffs;
  std::vector<std::size_t> members;  // indices into the input list
};

std::vector<PayoffClass> group_by_payoff(
    const std::vector<NashEquilibrium>& equilibria, double tol = 1e-9);

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_HPP_

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


#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace qgame {
namespace {

void require_compatible(const PayoffTensor& t1, const PayoffTensor& t2) {
  if (t1.grid_ptr() != t2.grid_ptr() && t1.size() != t2.size()) {
    throw std::invalid_argument("payoff tensors built on different grids");
  }
  if (t1.grid_ptr() != t2.grid_ptr()) {
    const SteppingParams& s1 = t1.grid().source_steps();
    const SteppingParams& s2 = t2.grid().source_steps();
    if (s1.d_theta != s2.d_theta || s1.d_phi != s2.d_phi ||
        s1.d_alpha != s2.d_alpha) {
      throw std::invalid_argument("payoff tensors built on different grids");
    }
  }
  if (t1.gamma().gamma() != t2.gamma().gamma()) {
    throw std::invalid_argument("payoff tensors built at different gammas (" +
                                std::to_string(t1.gamma().gamma()) + " vs " +
                                std::to_string(t2.gamma().gamma()) + ")");
  }
}

}  // namespace

PayoffTensor::PayoffTensor(GameDefinition game,
                           std::shared_ptr<const StrategyGrid> grid,
                           EntanglementParam gamma,
                           std::vector<PayoffPair> values)
    : game_(std::move(game)),
      grid_(std::move(grid)),
      gamma_(gamma),
      n_(grid_ ? grid_->size() : 0),
      values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw std::invalid_argument("payoff tensor needs |V|^2 entries");
  }
}

PayoffTensor payoff_tensor(const GameDefinition& game,
                           std::shared_ptr<const StrategyGrid> grid,
                           EntanglementParam gamma, unsigned threads) {
  if (!grid || grid->size() == 0) {
    throw std::invalid_argument("payoff tensor needs a non-empty grid");
  }
  const std::size_t n = grid->size();
  std::vector<PayoffPair> values(n * n);
  const CircuitKernel kernel(gamma);

  auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t a = row_begin; a < row_end; ++a) {
      const ComplexMatrix2& ua = (*grid)[a].matrix;
      PayoffPair* row = values.data() + a * n;
      for (std::size_t b = 0; b < n; ++b) {
        row[b] = expected_payoffs(kernel.probs(ua, (*grid)[b].matrix), game);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    fill_rows(0, n);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back(fill_rows, n * t / threads, n * (t + 1) / threads);
    }
  }
  return PayoffTensor(game, std::move(grid), gamma, std::move(values));
}

std::vector<BestResponseSet> best_responses(const PayoffTensor& tensor,
                                            Player responder, double epsilon) {
  const std::size_t n = tensor.size();
  auto payoff = [&](std::size_t own, std::size_t other) {
    return responder == Player::kA ? tensor.at(own, other).a
                                   : tensor.at(other, own).b;
  };
  std::vector<BestResponseSet> out(n);
  for (std::size_t other = 0; other < n; ++other) {
    BestResponseSet& set = out[other];
    set.responder = responder;
    set.opponent_index = other;
    set.best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t own = 0; own < n; ++own) {
      set.best_value = std::max(set.best_value, payoff(own, other));
    }
    for (std::size_t own = 0; own < n; ++own) {
      if (payoff(own, other) >= set.best_value - epsilon) {
        set.best_indices.push_back(own);
      }
    }
  }
  return out;
}

std::vector<NashEquilibrium> nash_two_player(const PayoffTensor& tensor,
                                             double epsilon) {
  const std::size_t n = tensor.size();
  // A's best value against each column, B's best value against each row.
  std::vector<double> best_a(n, -std::numeric_limits<double>::infinity());
  std::vector<double> best_b(n, -std::numeric_limits<double>::infinity());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const PayoffPair& v = tensor.at(a, b);
      best_a[b] = std::max(best_a[b], v.a);
      best_b[a] = std::max(best_b[a], v.b);
    }
  }
  std::vector<NashEquilibrium> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const PayoffPair& v = tensor.at(a, b);
      if (v.a >= best_a[b] - epsilon && v.b >= best_b[a] - epsilon) {
        out.push_back({{a, b}, {v.a, v.b}});
      }
    }
  }
  return out;
}

PriorProbability::PriorProbability(double p) : p_(p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::out_of_range("prior p = " + std::to_string(p) +
                            " outside [0, 1]");
  }
}

double bayesian_payoff_a(const PayoffTensor& t1, const PayoffTensor& t2,
                         std::size_t a, std::size_t b1, std::size_t b2,
                         PriorProbability p) {
  require_compatible(t1, t2);
  return p.p() * t1.at(a, b1).a + (1.0 - p.p()) * t2.at(a, b2).a;
}

std::vector<NashEquilibrium> nash_bayesian(const PayoffTensor& t1,
                                           const PayoffTensor& t2,
                                           PriorProbability prior,
                                           double epsilon) {
  require_compatible(t1, t2);
  const std::size_t n = t1.size();
  const double p = prior.p();
  auto weighted_a = [&](std::size_t a, std::size_t b1, std::size_t b2) {
    return p * t1.at(a, b1).a + (1.0 - p) * t2.at(a, b2).a;
  };
  auto b_best_set = [&](const PayoffTensor& t, std::size_t a) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < n; ++b) best = std::max(best, t.at(a, b).b);
    std::vector<std::size_t> set;
    for (std::size_t b = 0; b < n; ++b) {
      if (t.at(a, b).b >= best - epsilon) set.push_back(b);
    }
    return set;
  };

  std::vector<NashEquilibrium> out;
  for (std::size_t a = 0; a < n; ++a) {
    const std::vector<std::size_t> set1 = b_best_set(t1, a);
    const std::vector<std::size_t> set2 = b_best_set(t2, a);
    for (std::size_t b1 : set1) {
      for (std::size_t b2 : set2) {
        const double own = weighted_a(a, b1, b2);
        bool a_is_best = true;
        for (std::size_t alt = 0; alt < n && a_is_best; ++alt) {
          a_is_best = weighted_a(alt, b1, b2) <= own + epsilon;
        }
        if (a_is_best) {
          out.push_back({{a, b1, b2}, {own, t1.at(a, b1).b, t2.at(a, b2).b}});
        }
      }
    }
  }
  return out;
}

std::vector<PayoffClass> group_by_payoff(
    const std::vector<NashEquilibrium>& equilibria, double tol) {
  std::vector<PayoffClass> classes;
  for (std::size_t i = 0; i < equilibria.size(); ++i) {
    const std::vector<double>& v = equilibria[i].payoffs;
    auto same = [&](const PayoffClass& c) {
      if (c.payoffs.size() != v.size()) return false;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (std::abs(c.payoffs[k] - v[k]) > tol) return false;
      }
      return true;
    };
    auto it = std::find_if(classes.begin(), classes.end(), same);
    if (it == classes.end()) {
      classes.push_back({v, {i}});
    } else {
      it->members.push_back(i);
    }
  }
  return classes;
}

}  // namespace qgame

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


#ifndef QGAME_EWL_HPP_
#define QGAME_EWL_HPP_

#include <array>
#include <numbers>
#include <string>

#include "qgame/qmatrix.hpp"

// The Eisert-Wilkens-Lewenstein circuit: both qubits start in |0>, the
// referee entangles with J(gamma), each player applies U(theta, phi, alpha),
// J^dagger undoes the entanglement and the outcome is measured.
//
// Outcome index j in {0,1,2,3} reads as (A's bit, B's bit) with |0> = C and
// |1> = D, so payoff vectors are listed in the order CC, CD, DC, DD.

namespace qgame {

inline constexpr double kPi = std::numbers::pi;

enum class Player { kA, kB };

class StrategyParams {
 public:
  // theta in [0, pi], phi and alpha in [0, 2 pi]; throws std::out_of_range.
  StrategyParams(double theta, double phi, double alpha);
  StrategyParams() = default;

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double alpha() const { return alpha_; }

  friend auto operator<=>(const StrategyParams&,
                          const StrategyParams&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
  double alpha_ = 0.0;
};

class EntanglementParam {
 public:
  // gamma in [0, pi/2]; throws std::out_of_range.
  explicit EntanglementParam(double gamma);
  EntanglementParam() = default;

  double gamma() const { return gamma_; }

  friend auto operator<=>(const EntanglementParam&,
                          const EntanglementParam&) = default;

 private:
  double gamma_ = 0.0;
};

struct GameDefinition {
  std::string name;
  std::array<double, 4> payoff_a{};
  std::array<double, 4> payoff_b{};

  // Throws std::invalid_argument naming the game on a non-finite payoff.
  void validate() const;
};

using OutcomeProbs = std::array<double, 4>;

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;
};

ComplexMatrix4 entangler(EntanglementParam gamma);

ComplexMatrix2 strategy_matrix(const StrategyParams& p);

// J^dagger (U_A x U_B) J |00>, evaluated with explicit 4x4 products.
StateVector4 final_state(EntanglementParam gamma, const ComplexMatrix2& ua,
                         const ComplexMatrix2& ub);
StateVector4 final_state(EntanglementParam gamma, const StrategyParams& a,
                         const StrategyParams& b);

// Same circuit with gamma-dependent factors hoisted out. J|00> only has
// support on |00> and |11>, so only columns 0 and 3 of U_A x U_B matter.
class CircuitKernel {
 public:
  explicit CircuitKernel(EntanglementParam gamma);

  StateVector4 final_state(const ComplexMatrix2& ua,
                           const ComplexMatrix2& ub) const;
  OutcomeProbs probs(const ComplexMatrix2& ua, const ComplexMatrix2& ub) const;

  EntanglementParam gamma() const { return gamma_; }

 private:
  EntanglementParam gamma_;
  double cos_half_ = 1.0;
  double sin_half_ = 0.0;
};

OutcomeProbs outcome_probs(const StateVector4& v);

PayoffPair expected_payoffs(const OutcomeProbs& probs,
                            const GameDefinition& game);

}  // namespace qgame

#endif  // QGAME_EWL_HPP_

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


#include "qgame/ewl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgame {
namespace {

void require_in_range(const char* what, double value, double lo, double hi) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    throw std::out_of_range(std::string(what) + " = " + std::to_string(value) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
}

}  // namespace

StrategyParams::StrategyParams(double theta, double phi, double alpha)
    : theta_(theta), phi_(phi), alpha_(alpha) {
  require_in_range("theta", theta, 0.0, kPi);
  require_in_range("phi", phi, 0.0, 2.0 * kPi);
  require_in_range("alpha", alpha, 0.0, 2.0 * kPi);
}

EntanglementParam::EntanglementParam(double gamma) : gamma_(gamma) {
  require_in_range("gamma", gamma, 0.0, kPi / 2.0);
}

void GameDefinition::validate() const {
  for (std::size_t j = 0; j < 4; ++j) {
    if (!std::isfinite(payoff_a[j]) || !std::isfinite(payoff_b[j])) {
      throw std::invalid_argument("game '" + name +
                                  "': non-finite payoff at outcome " +
                                  std::to_string(j));
    }
  }
}

ComplexMatrix4 entangler(EntanglementParam gamma) {
  const double c = std::cos(gamma.gamma() / 2.0);
  const Complex is(0.0, std::sin(gamma.gamma() / 2.0));
  // exp(i gamma/2 sigma_x x sigma_x). The inner anti-diagonal carries +i s as
  // well, so one-sided i sigma_x commutes with J and classical moves embed.
  // clang-format off
  return ComplexMatrix4{
      c,   0.0, 0.0, is,
      0.0, c,   is,  0.0,
      0.0, is,  c,   0.0,
      is,  0.0, 0.0, c};
  // clang-format on
}

ComplexMatrix2 strategy_matrix(const StrategyParams& p) {
  const double c = std::cos(p.theta() / 2.0);
  const double s = std::sin(p.theta() / 2.0);
  const Complex phase_phi = std::polar(1.0, p.phi());
  const Complex phase_alpha = std::polar(1.0, p.alpha());
  return ComplexMatrix2{std::conj(phase_phi) * c, phase_alpha * s,
                        -std::conj(phase_alpha) * s, phase_phi * c};
}

StateVector4 final_state(EntanglementParam gamma, const ComplexMatrix2& ua,
                         const ComplexMatrix2& ub) {
  const ComplexMatrix4 j = entangler(gamma);
  return qgame::apply(dagger(j) * kron(ua, ub) * j, kBasis00);
}

StateVector4 final_state(EntanglementParam gamma, const StrategyParams& a,
                         const StrategyParams& b) {
  return final_state(gamma, strategy_matrix(a), strategy_matrix(b));
}

CircuitKernel::CircuitKernel(EntanglementParam gamma)
    : gamma_(gamma),
      cos_half_(std::cos(gamma.gamma() / 2.0)),
      sin_half_(std::sin(gamma.gamma() / 2.0)) {}

StateVector4 CircuitKernel::final_state(const ComplexMatrix2& ua,
                                        const ComplexMatrix2& ub) const {
  const double c = cos_half_;
  const Complex is(0.0, sin_half_);
  // (U_A x U_B) J|00> = c * col0 + i s * col3.
  const Complex m0 = c * (ua(0, 0) * ub(0, 0)) + is * (ua(0, 1) * ub(0, 1));
  const Complex m1 = c * (ua(0, 0) * ub(1, 0)) + is * (ua(0, 1) * ub(1, 1));
  const Complex m2 = c * (ua(1, 0) * ub(0, 0)) + is * (ua(1, 1) * ub(0, 1));
  const Complex m3 = c * (ua(1, 0) * ub(1, 0)) + is * (ua(1, 1) * ub(1, 1));
  // J^dagger has -i s along the whole anti-diagonal.
  return StateVector4{c * m0 - is * m3, c * m1 - is * m2, -is * m1 + c * m2,
                      -is * m0 + c * m3};
}

OutcomeProbs CircuitKernel::probs(const ComplexMatrix2& ua,
                                  const ComplexMatrix2& ub) const {
  return outcome_probs(final_state(ua, ub));
}

OutcomeProbs outcome_probs(const StateVector4& v) {
  return OutcomeProbs{std::norm(v[0]), std::norm(v[1]), std::norm(v[2]),
                      std::norm(v[3])};
}

PayoffPair expected_payoffs(const OutcomeProbs& probs,
                            const GameDefinition& game) {
  PayoffPair out;
  for (std::size_t j = 0; j < 4; ++j) {
    out.a += probs[j] * game.payoff_a[j];
    out.b += probs[j] * game.payoff_b[j];
  }
  return out;
}

}  // namespace qgame

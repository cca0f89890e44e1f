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

#include "qgame/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace qgame {

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

StateVector4 apply(const ComplexMatrix4& m, const StateVector4& v) {
  StateVector4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double norm(const StateVector4& v) {
  double sq = 0.0;
  for (const Complex& z : v) sq += std::norm(z);
  return std::sqrt(sq);
}

double max_abs_diff(const StateVector4& a, const StateVector4& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace qgame

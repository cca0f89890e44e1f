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

#ifndef QGAME_QMATRIX_HPP_
#define QGAME_QMATRIX_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

// Fixed-shape complex linear algebra for the two-qubit circuit. The basis is
// ordered (|00>, |01>, |10>, |11>) everywhere; the first qubit is player A.

namespace qgame {

using Complex = std::complex<double>;

// Tolerance for exact algebraic identities (unitarity, Kronecker rules).
inline constexpr double kAlgebraTol = 1e-12;
// Tolerance for results accumulated through a few chained 4x4 products.
inline constexpr double kCircuitTol = 1e-10;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  // Row-major initializer: {m00, m01, ..., m(N-1)(N-1)}.
  SquareMatrix(std::initializer_list<Complex> row_major) {
    std::size_t k = 0;
    for (const Complex& z : row_major) {
      if (k == N * N) break;
      entries_[k++] = z;
    }
  }

  static SquareMatrix Identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * N + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * N + col];
  }

  const std::array<Complex, N * N>& entries() const { return entries_; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend SquareMatrix operator*(Complex s, const SquareMatrix& m) {
    SquareMatrix out = m;
    for (Complex& z : out.entries_) z *= s;
    return out;
  }

  friend SquareMatrix operator-(const SquareMatrix& m) {
    return Complex(-1.0, 0.0) * m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> entries_{};
};

using ComplexMatrix2 = SquareMatrix<2>;
using ComplexMatrix4 = SquareMatrix<4>;

// Amplitudes over (|00>, |01>, |10>, |11>).
using StateVector4 = std::array<Complex, 4>;

inline constexpr StateVector4 kBasis00{Complex(1.0, 0.0), Complex(), Complex(),
                                       Complex()};

// entry[(2i+k),(2j+l)] = a[i,j] * b[k,l]
ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);

StateVector4 apply(const ComplexMatrix4& m, const StateVector4& v);

template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N>& m) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) {
    const double d = std::abs(a.entries()[k] - b.entries()[k]);
    if (d > worst) worst = d;
  }
  return worst;
}

template <std::size_t N>
bool approx_equal(const SquareMatrix<N>& a, const SquareMatrix<N>& b,
                  double tol) {
  return max_abs_diff(a, b) <= tol;
}

// M^dagger M = I within tol.
template <std::size_t N>
bool is_unitary(const SquareMatrix<N>& m, double tol = kAlgebraTol) {
  return approx_equal(dagger(m) * m, SquareMatrix<N>::Identity(), tol);
}

double norm(const StateVector4& v);

double max_abs_diff(const StateVector4& a, const StateVector4& b);

}  // namespace qgame

#endif  // QGAME_QMATRIX_HPP_

// Copyright 2026 The qutrit-se Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random generators and independent reference routines shared by the test
// binaries. Nothing here calls into the code path it is used to check.

#ifndef QUTRIT_TESTS_SUPPORT_HPP
#define QUTRIT_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qutrit/density_matrix.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit::testing {

using EigenMatrix = Eigen::MatrixXcd;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline Complex gaussian_complex(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(g), n(g)};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   std::mt19937_64& g = rng()) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian_complex(g);
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& g = rng()) {
  const ComplexMatrix a = random_matrix(n, n, g);
  ComplexMatrix h = a + a.adjoint();
  h *= 0.5;
  return h;
}

/// Ginibre-distributed mixed state G G^dagger / tr.
inline DensityMatrix random_density(std::size_t n, std::mt19937_64& g = rng()) {
  const ComplexMatrix a = random_matrix(n, n, g);
  ComplexMatrix rho = a * a.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(hermitian_part(rho));
}

inline std::vector<Complex> random_ket(std::size_t n, std::mt19937_64& g = rng()) {
  std::vector<Complex> v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = gaussian_complex(g);
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

inline DensityMatrix random_pure(std::size_t n, std::mt19937_64& g = rng()) {
  return DensityMatrix(ComplexMatrix::outer(random_ket(n, g)));
}

inline EigenMatrix to_eigen(const ComplexMatrix& m) {
  EigenMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

inline ComplexMatrix from_eigen(const EigenMatrix& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  }
  return m;
}

/// Reference spectrum from Eigen's Householder/QL solver.
inline std::vector<double> reference_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

/// Kronecker product through Eigen block assignment.
inline EigenMatrix reference_kron(const EigenMatrix& a, const EigenMatrix& b) {
  EigenMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// tr_B M = sum_k (I x <k|) M (I x |k>), built from explicit basis kets.
inline EigenMatrix reference_trace_out_b(const EigenMatrix& m, Eigen::Index da, Eigen::Index db) {
  EigenMatrix out = EigenMatrix::Zero(da, da);
  for (Eigen::Index k = 0; k < db; ++k) {
    EigenMatrix ket = EigenMatrix::Zero(db, 1);
    ket(k, 0) = 1.0;
    const EigenMatrix lift = reference_kron(EigenMatrix::Identity(da, da), ket);
    out += lift.adjoint() * m * lift;
  }
  return out;
}

inline EigenMatrix reference_trace_out_a(const EigenMatrix& m, Eigen::Index da, Eigen::Index db) {
  EigenMatrix out = EigenMatrix::Zero(db, db);
  for (Eigen::Index k = 0; k < da; ++k) {
    EigenMatrix ket = EigenMatrix::Zero(da, 1);
    ket(k, 0) = 1.0;
    const EigenMatrix lift = reference_kron(ket, EigenMatrix::Identity(db, db));
    out += lift.adjoint() * m * lift;
  }
  return out;
}

/// SWAP on C^d x C^d.
inline ComplexMatrix swap_operator(std::size_t d) {
  ComplexMatrix s(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  }
  return s;
}

}  // namespace qutrit::testing

#endif  // QUTRIT_TESTS_SUPPORT_HPP

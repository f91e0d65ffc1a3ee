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

#ifndef QUTRIT_MATRIX_HPP
#define QUTRIT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qutrit {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Dimensions in this library never exceed
/// 9x9 (two qutrits), so everything is stored by value.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries. Throws DimensionMismatch if the
  /// count is not rows*cols and std::invalid_argument on NaN/Inf entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Nested row literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Dense real matrix, row-major. Used for affine Bloch maps and
/// coefficient tables.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> entries() const { return data_; }

  bool operator==(const RealMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Largest |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// max |M_ij - conj(M_ji)|; zero for Hermitian matrices.
double hermiticity_defect(const ComplexMatrix& m);

/// (M + M^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Kronecker product. The first factor indexes the slow (outer) block, so
/// entry ((i,k),(j,l)) = a(i,j) * b(k,l) lands at row i*rb+k, column j*cb+l.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Split of a bipartite space into subsystem A (slow index) and B.
struct SubsystemDims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const { return a * b; }
};

enum class Subsystem { A, B };

/// Trace out `side`. Result is db x db when tracing A and da x da when
/// tracing B.
ComplexMatrix partial_trace(const ComplexMatrix& m, SubsystemDims dims, Subsystem side);

/// Transpose the indices of one subsystem. Involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& m, SubsystemDims dims,
                                Subsystem side = Subsystem::B);

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic complex
/// Jacobi rotations. Throws std::invalid_argument when the input deviates
/// from Hermitian by more than tol::kEigenInputHermitian.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j belongs to values[j]
};

/// Same solver, also accumulating the eigenvectors.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace qutrit

#endif  // QUTRIT_MATRIX_HPP

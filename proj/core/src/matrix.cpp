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

#include "qutrit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/tolerances.hpp"

namespace qutrit {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": " + shape(a.rows(), a.cols()) + " vs " +
                            shape(b.rows(), b.cols()));
  }
}

void require_bipartite(const ComplexMatrix& m, SubsystemDims dims, const char* what) {
  const std::size_t n = dims.total();
  if (dims.a == 0 || dims.b == 0 || m.rows() != n || m.cols() != n) {
    throw DimensionMismatch(std::string(what) + ": matrix " + shape(m.rows(), m.cols()) +
                            " does not split as " + std::to_string(dims.a) + "x" +
                            std::to_string(dims.b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionMismatch("ComplexMatrix: " + std::to_string(data_.size()) +
                            " entries for shape " + shape(rows_, cols_));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ComplexMatrix: ragged row literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square " + shape(rows_, cols_));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product: " + shape(a.rows(), a.cols()) + " * " +
                            shape(b.rows(), b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: " + shape(a.rows(), a.cols()) + " vs " +
                            shape(b.rows(), b.cols()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("hermiticity of non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m + m.adjoint();
  out *= 0.5;
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows();
  const std::size_t cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < rb; ++k) {
        for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, SubsystemDims dims, Subsystem side) {
  require_bipartite(m, dims, "partial_trace");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  if (side == Subsystem::A) {
    ComplexMatrix out(db, db);
    for (std::size_t k = 0; k < db; ++k) {
      for (std::size_t l = 0; l < db; ++l) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < da; ++i) s += m(i * db + k, i * db + l);
        out(k, l) = s;
      }
    }
    return out;
  }
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, SubsystemDims dims, Subsystem side) {
  require_bipartite(m, dims, "partial_transpose");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          // <ik|M|jl> moves to <jk|.|il> (side A) or <il|.|jk> (side B).
          const Complex v = m(i * db + k, j * db + l);
          if (side == Subsystem::A) {
            out(j * db + k, i * db + l) = v;
          } else {
            out(i * db + l, j * db + k) = v;
          }
        }
      }
    }
  }
  return out;
}

namespace {

// Cyclic complex Jacobi. Diagonalizes a copy of `m` in place; when `vectors`
// is non-null it receives the accumulated unitary (eigenvectors as columns).
std::vector<double> jacobi_diagonalize(const ComplexMatrix& m, ComplexMatrix* vectors) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigenvalues: non-square matrix");
  if (hermiticity_defect(m) > tol::kEigenInputHermitian) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  if (vectors != nullptr) *vectors = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const Complex& z : a.entries()) scale = std::max(scale, std::abs(z));

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off == 0.0 || std::sqrt(off) <= 1e-16 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Phase-rotate column q so the pivot is real, then apply the real
        // symmetric Jacobi rotation that annihilates it.
        const Complex phase = a(p, q) / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex w_qp = -s * std::conj(phase);
        const Complex w_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = a(k, p);
          const Complex y = a(k, q);
          a(k, p) = x * c + y * w_qp;
          a(k, q) = x * s + y * w_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = a(p, k);
          const Complex y = a(q, k);
          a(p, k) = c * x + std::conj(w_qp) * y;
          a(q, k) = s * x + std::conj(w_qq) * y;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (vectors != nullptr) {
          ComplexMatrix& v = *vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex x = v(k, p);
            const Complex y = v(k, q);
            v(k, p) = x * c + y * w_qp;
            v(k, q) = x * s + y * w_qq;
          }
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  return values;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  std::vector<double> values = jacobi_diagonalize(m, nullptr);
  std::sort(values.begin(), values.end());
  return values;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  ComplexMatrix v;
  const std::vector<double> raw = jacobi_diagonalize(m, &v);
  const std::size_t n = raw.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return raw[x] < raw[y]; });
  HermitianEigensystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = raw[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const std::vector<double> values = hermitian_eigenvalues(m);
  return values.empty() ? 0.0 : values.front();
}

}  // namespace qutrit

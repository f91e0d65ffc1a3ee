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

#include "qutrit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void validate_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("time must be nonnegative");
}

// 1 - e^{-x} without cancellation for small x.
double one_minus_exp(double x) { return -std::expm1(-x); }

double bloch_factor(std::size_t dim) {
  // v_k = factor * tr(rho e_k); see bloch_from_density.
  return dim == 3 ? 3.0 / (2.0 * kSqrt3) : 1.0;
}

// Exact rewrite of an overcomplete Kraus list. With the Gram matrix
// G_ij = tr(K_i^dagger K_j) = U diag(g) U^dagger, the operators
// L_k = sum_i U_ik K_i implement the same map and ||L_k||^2 = g_k, so only
// rank(G) <= dim^2 of them are nonzero.
std::vector<ComplexMatrix> reduce_kraus_set(const std::vector<ComplexMatrix>& ops) {
  const std::size_t m = ops.size();
  ComplexMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = 0.0;
      const auto ei = ops[i].entries();
      const auto ej = ops[j].entries();
      for (std::size_t k = 0; k < ei.size(); ++k) s += std::conj(ei[k]) * ej[k];
      gram(i, j) = s;
    }
  }
  const HermitianEigensystem eig = hermitian_eigensystem(gram);
  const double largest = eig.values.empty() ? 0.0 : eig.values.back();
  const std::size_t limit = ops.front().rows() * ops.front().rows();

  std::vector<ComplexMatrix> out;
  for (std::size_t k = m; k-- > 0 && out.size() < limit;) {
    if (eig.values[k] <= 1e-14 * largest) break;
    ComplexMatrix l(ops.front().rows(), ops.front().cols());
    for (std::size_t i = 0; i < m; ++i) l += ops[i] * eig.vectors(i, k);
    out.push_back(std::move(l));
  }
  if (out.empty()) out.push_back(ComplexMatrix(ops.front().rows(), ops.front().cols()));
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> operators)
    : dim_(dim), operators_(std::move(operators)) {
  if (dim_ == 0) throw DimensionMismatch("Kraus channel dimension must be positive");
  if (operators_.empty() || operators_.size() > dim_ * dim_) {
    throw DimensionMismatch("Kraus channel on dim " + std::to_string(dim_) + " needs 1.." +
                            std::to_string(dim_ * dim_) + " operators, got " +
                            std::to_string(operators_.size()));
  }
  for (const ComplexMatrix& k : operators_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw DimensionMismatch("Kraus operator is " + std::to_string(k.rows()) + "x" +
                              std::to_string(k.cols()) + ", channel dim is " +
                              std::to_string(dim_));
    }
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel(dim, {ComplexMatrix::identity(dim)});
}

void validate_rates(const DecayRates& rates) {
  for (double r : {rates.a1, rates.a2, rates.a}) {
    if (!std::isfinite(r) || r < 0.0) throw std::invalid_argument("rates must be nonnegative");
  }
}

KrausChannel se_qutrit_kraus(const DecayRates& rates, double t) {
  validate_rates(rates);
  validate_time(t);
  ComplexMatrix k0(3, 3);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::exp(-rates.a1 * t / 2.0);
  k0(2, 2) = std::exp(-rates.a2 * t / 2.0);
  ComplexMatrix k1(3, 3);
  k1(0, 1) = std::sqrt(one_minus_exp(rates.a1 * t));
  ComplexMatrix k2(3, 3);
  k2(0, 2) = std::sqrt(one_minus_exp(rates.a2 * t));
  return KrausChannel(3, {std::move(k0), std::move(k1), std::move(k2)});
}

KrausChannel se_qubit_kraus(const DecayRates& rates, double t) {
  validate_rates(rates);
  validate_time(t);
  ComplexMatrix k0(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::exp(-rates.a * t / 2.0);
  ComplexMatrix k1(2, 2);
  k1(0, 1) = std::sqrt(one_minus_exp(rates.a * t));
  return KrausChannel(2, {std::move(k0), std::move(k1)});
}

AffineBlochMap se_qutrit_affine(const DecayRates& rates, double t) {
  validate_rates(rates);
  validate_time(t);
  const double e1 = std::exp(-rates.a1 * t);
  const double e2 = std::exp(-rates.a2 * t);
  const double h1 = std::exp(-rates.a1 * t / 2.0);
  const double h2 = std::exp(-rates.a2 * t / 2.0);
  const double h12 = std::exp(-(rates.a1 + rates.a2) * t / 2.0);

  AffineBlochMap map;
  map.dim = 3;
  map.transfer = RealMatrix(8, 8);
  RealMatrix& tr = map.transfer;
  tr(0, 0) = h1;
  tr(1, 1) = h1;
  tr(2, 2) = e1;
  tr(2, 7) = (e2 - e1) / kSqrt3;
  tr(3, 3) = h2;
  tr(4, 4) = h2;
  tr(5, 5) = h12;
  tr(6, 6) = h12;
  tr(7, 7) = e2;

  map.translation.assign(8, 0.0);
  // (3 - e2 - 2 e1) / (2 sqrt3), regrouped to avoid cancellation at small t.
  map.translation[2] =
      (2.0 * one_minus_exp(rates.a1 * t) + one_minus_exp(rates.a2 * t)) / (2.0 * kSqrt3);
  map.translation[7] = one_minus_exp(rates.a2 * t) / 2.0;
  return map;
}

AffineBlochMap se_qubit_affine(const DecayRates& rates, double t) {
  validate_rates(rates);
  validate_time(t);
  const double h = std::exp(-rates.a * t / 2.0);
  AffineBlochMap map;
  map.dim = 2;
  map.transfer = RealMatrix(3, 3);
  map.transfer(0, 0) = h;
  map.transfer(1, 1) = h;
  map.transfer(2, 2) = std::exp(-rates.a * t);
  map.translation = {0.0, 0.0, one_minus_exp(rates.a * t)};
  return map;
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.dim() || x.cols() != ch.dim()) {
    throw DimensionMismatch("channel on dim " + std::to_string(ch.dim()) + " applied to " +
                            std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  ComplexMatrix out(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.operators()) out += k * x * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(hermitian_part(apply_channel(ch, rho.matrix())));
}

double completeness_defect(const KrausChannel& ch) {
  ComplexMatrix sum(ch.dim(), ch.dim());
  for (const ComplexMatrix& k : ch.operators()) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(ch.dim()));
}

ComplexMatrix choi_matrix(const KrausChannel& ch) {
  const std::size_t d = ch.dim();
  ComplexMatrix choi(d * d, d * d);
  // Block (j,k) of the reference system holds Phi(|j><k|), whose (a,b) entry
  // is sum_i K_i(a,j) conj(K_i(b,k)).
  for (const ComplexMatrix& k : ch.operators()) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t j = 0; j < d; ++j) {
        const Complex kaj = k(a, j);
        if (kaj == Complex{}) continue;
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t kk = 0; kk < d; ++kk) {
            choi(a * d + j, b * d + kk) += kaj * std::conj(k(b, kk));
          }
        }
      }
    }
  }
  return choi;
}

CptpReport is_cptp(const KrausChannel& ch, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_cptp: tolerance must be positive");
  CptpReport report;
  report.completeness_defect = completeness_defect(ch);
  report.choi_min_eigenvalue = min_eigenvalue(choi_matrix(ch));
  report.cptp = report.completeness_defect <= tol && report.choi_min_eigenvalue >= -tol;
  return report;
}

AffineBlochMap affine_from_kraus(const KrausChannel& ch) {
  const std::size_t d = ch.dim();
  const OperatorBasis& b = basis(d);
  const std::size_t n = b.generator_count();

  auto trace_product = [](const ComplexMatrix& x, const ComplexMatrix& y) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t k = 0; k < x.cols(); ++k) s += x(i, k) * y(k, i);
    }
    return s.real();
  };

  AffineBlochMap map;
  map.dim = d;
  map.transfer = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexMatrix image = apply_channel(ch, b.generator(j));
    for (std::size_t i = 0; i < n; ++i) {
      map.transfer(i, j) = 0.5 * trace_product(b.generator(i), image);
    }
  }

  ComplexMatrix mixed = ComplexMatrix::identity(d);
  mixed *= 1.0 / static_cast<double>(d);
  const ComplexMatrix image = apply_channel(ch, mixed);
  map.translation.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    map.translation[i] = bloch_factor(d) * trace_product(b.generator(i), image);
  }
  return map;
}

CoherenceVector apply_affine(const AffineBlochMap& map, const CoherenceVector& v) {
  const std::size_t n = map.translation.size();
  if (map.dim != v.dim() || v.size() != n || map.transfer.rows() != n ||
      map.transfer.cols() != n) {
    throw DimensionMismatch("affine map and Bloch vector describe different systems");
  }
  std::vector<double> out(map.translation);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += map.transfer(i, j) * v[j];
  }
  return CoherenceVector(v.dim(), std::move(out));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.dim() != first.dim()) {
    throw DimensionMismatch("cannot compose channels on dims " + std::to_string(second.dim()) +
                            " and " + std::to_string(first.dim()));
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(second.size() * first.size());
  for (const ComplexMatrix& b : second.operators()) {
    for (const ComplexMatrix& a : first.operators()) ops.push_back(b * a);
  }
  if (ops.size() > first.dim() * first.dim()) ops = reduce_kraus_set(ops);
  return KrausChannel(first.dim(), std::move(ops));
}

}  // namespace qutrit

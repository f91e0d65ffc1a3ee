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

#include "qutrit/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qutrit/bloch.hpp"
#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

void validate_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
}

// Prefactor turning tr(rho e_a x e_b) into a coefficient.
double coefficient_scale(std::size_t dim) { return dim == 3 ? 9.0 / 4.0 : 1.0; }

// Normalization of the witness sum: s = sum_j |c_jj| / norm.
double witness_norm(std::size_t dim) { return dim == 3 ? 12.0 : 3.0; }

double trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  }
  return s.real();
}

// e^{-rate t} in the t -> infinity limit.
double asymptotic_decay(double rate) { return rate > 0.0 ? 0.0 : 1.0; }

double s_limit(SystemKind kind, double epsilon, const DecayRates& r) {
  if (kind == SystemKind::qubit) {
    return epsilon * asymptotic_decay(r.a);
  }
  const double f1 = asymptotic_decay(r.a1);
  const double f2 = asymptotic_decay(r.a2);
  return epsilon / 8.0 * (3.0 * f1 + 3.0 * f2 + 2.0 * f1 * f2);
}

}  // namespace

std::size_t local_dim(SystemKind kind) { return kind == SystemKind::qutrit ? 3 : 2; }

double witness_threshold(SystemKind kind) {
  return kind == SystemKind::qutrit ? 0.25 : 1.0 / 3.0;
}

DensityMatrix max_entangled(std::size_t dim) {
  std::vector<Complex> ket(dim * dim, 0.0);
  if (dim == 3) {
    const double amp = 1.0 / std::sqrt(3.0);
    for (std::size_t k = 0; k < 3; ++k) ket[k * 3 + k] = amp;
  } else if (dim == 2) {
    const double amp = 1.0 / std::sqrt(2.0);
    ket[0 * 2 + 1] = amp;
    ket[1 * 2 + 0] = amp;
  } else {
    throw std::invalid_argument("max_entangled: local dim must be 2 or 3");
  }
  return DensityMatrix(ComplexMatrix::outer(ket));
}

DensityMatrix werner(const WernerParameters& p) {
  validate_epsilon(p.epsilon);
  const std::size_t n = p.dim * p.dim;
  ComplexMatrix m = max_entangled(p.dim).matrix();
  m *= p.epsilon;
  ComplexMatrix mixed = ComplexMatrix::identity(n);
  mixed *= (1.0 - p.epsilon) / static_cast<double>(n);
  m += mixed;
  return DensityMatrix(std::move(m));
}

CoefficientMatrix coefficient_matrix(const DensityMatrix& rho, std::size_t dim) {
  const OperatorBasis& b = basis(dim);
  const std::size_t n = dim * dim;
  if (rho.dim() != n) {
    throw DimensionMismatch("coefficient_matrix: state is " + std::to_string(rho.dim()) +
                            "-dimensional, expected " + std::to_string(n));
  }
  CoefficientMatrix c;
  c.dim = dim;
  c.entries = RealMatrix(n, n);
  const double scale = coefficient_scale(dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t bb = 0; bb < n; ++bb) {
      const ComplexMatrix op = tensor_product(b.elements[a], b.elements[bb]);
      c.entries(a, bb) = scale * trace_of_product(rho.matrix(), op);
    }
  }
  return c;
}

ComplexMatrix state_from_coefficients(const CoefficientMatrix& c) {
  const OperatorBasis& b = basis(c.dim);
  const std::size_t n = c.dim * c.dim;
  if (c.entries.rows() != n || c.entries.cols() != n) {
    throw DimensionMismatch("state_from_coefficients: table does not match local dim");
  }
  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t bb = 0; bb < n; ++bb) {
      const double v = c.entries(a, bb);
      if (v == 0.0) continue;
      out += tensor_product(b.elements[a], b.elements[bb]) * Complex(v);
    }
  }
  out *= 1.0 / static_cast<double>(n);
  return out;
}

DensityMatrix one_sided_apply(const KrausChannel& ch, const DensityMatrix& rho, Subsystem side) {
  const std::size_t d = ch.dim();
  if (rho.dim() != d * d) {
    throw DimensionMismatch("one_sided_apply: channel on dim " + std::to_string(d) +
                            " cannot act on a " + std::to_string(rho.dim()) +
                            "-dimensional pair state");
  }
  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix out(d * d, d * d);
  for (const ComplexMatrix& k : ch.operators()) {
    const ComplexMatrix lifted = side == Subsystem::A ? tensor_product(k, id) : tensor_product(id, k);
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return DensityMatrix(hermitian_part(out));
}

WitnessValue witness(const CoefficientMatrix& c) {
  const std::size_t n = c.dim * c.dim;
  double sum = 0.0;
  for (std::size_t j = 1; j < n; ++j) sum += std::abs(c.entries(j, j));
  WitnessValue w;
  w.s = sum / witness_norm(c.dim);
  w.threshold = c.dim == 3 ? witness_threshold(SystemKind::qutrit)
                           : witness_threshold(SystemKind::qubit);
  w.separable = w.s <= w.threshold;
  return w;
}

double s_qt_closed(double epsilon, double a1, double a2, double t) {
  // Terms grouped in A1 <-> A2 pairs so swapping the rates is bit-exact.
  const double halves = std::exp(-0.5 * a1 * t) + std::exp(-0.5 * a2 * t);
  const double fulls = std::exp(-a1 * t) + std::exp(-a2 * t);
  return epsilon / 8.0 * (2.0 * halves + 2.0 * std::exp(-0.5 * (a1 + a2) * t) + fulls);
}

double s_qb_closed(double epsilon, double a, double t) {
  return epsilon / 3.0 * (2.0 * std::exp(-0.5 * a * t) + std::exp(-a * t));
}

double s_closed(SystemKind kind, double epsilon, const DecayRates& rates, double t) {
  return kind == SystemKind::qutrit ? s_qt_closed(epsilon, rates.a1, rates.a2, t)
                                    : s_qb_closed(epsilon, rates.a, t);
}

KrausChannel se_kraus(SystemKind kind, const DecayRates& rates, double t) {
  return kind == SystemKind::qutrit ? se_qutrit_kraus(rates, t) : se_qubit_kraus(rates, t);
}

double witness_pipeline(SystemKind kind, double epsilon, const DecayRates& rates, double t) {
  const std::size_t d = local_dim(kind);
  const DensityMatrix evolved =
      one_sided_apply(se_kraus(kind, rates, t), werner({epsilon, d}), Subsystem::A);
  return witness(coefficient_matrix(evolved, d)).s;
}

double witness_matches_closed_form(SystemKind kind, double epsilon, const DecayRates& rates,
                                   double t) {
  return std::abs(witness_pipeline(kind, epsilon, rates, t) - s_closed(kind, epsilon, rates, t));
}

double ppt_min_eigenvalue(const DensityMatrix& rho, SubsystemDims dims) {
  return min_eigenvalue(partial_transpose(rho.matrix(), dims, Subsystem::B));
}

SeparabilityTime separability_time(SystemKind kind, double epsilon, const DecayRates& rates,
                                   double threshold) {
  validate_epsilon(epsilon);
  validate_rates(rates);
  if (s_closed(kind, epsilon, rates, 0.0) <= threshold) return {0.0, true};
  if (s_limit(kind, epsilon, rates) >= threshold) {
    throw NeverSeparable("never separable: the witness stays above its threshold for these rates");
  }
  auto above = [&](double t) { return s_closed(kind, epsilon, rates, t) > threshold; };

  double lo = 0.0;
  double hi = 1.0;
  while (above(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (above(mid) ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), false};
}

SeparabilityTime separability_time(SystemKind kind, double epsilon, const DecayRates& rates) {
  return separability_time(kind, epsilon, rates, witness_threshold(kind));
}

PptCrossing ppt_separability_time(SystemKind kind, double epsilon, const DecayRates& rates) {
  validate_epsilon(epsilon);
  validate_rates(rates);
  const std::size_t d = local_dim(kind);
  const SubsystemDims dims{d, d};
  const DensityMatrix initial = werner({epsilon, d});
  auto ppt_at = [&](double t) {
    return ppt_min_eigenvalue(one_sided_apply(se_kraus(kind, rates, t), initial), dims);
  };

  // Values within this band of zero cannot be told apart from rounding.
  constexpr double kSignalFloor = 1e-12;
  PptCrossing out;
  if (ppt_at(0.0) >= -1e-14) {
    out.t_star = 0.0;
    return out;
  }

  double slowest = 0.0;
  for (double r : kind == SystemKind::qutrit ? std::vector<double>{rates.a1, rates.a2}
                                             : std::vector<double>{rates.a}) {
    if (r > 0.0) slowest = slowest == 0.0 ? r : std::min(slowest, r);
  }
  if (slowest == 0.0) return out;

  const double horizon = 12.0 / slowest;
  constexpr int kSteps = 2000;
  double last_entangled = 0.0;
  for (int k = 1; k <= kSteps; ++k) {
    const double t = horizon * k / kSteps;
    const double v = ppt_at(t);
    if (v < -kSignalFloor) {
      last_entangled = t;
      continue;
    }
    if (v <= kSignalFloor) continue;

    double lo = last_entangled;
    double hi = t;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (ppt_at(mid) >= 0.0 ? hi : lo) = mid;
    }
    out.t_star = 0.5 * (lo + hi);
    out.horizon = horizon;
    return out;
  }
  out.horizon = last_entangled;
  return out;
}

QubitQutritComparison compare_qubit_qutrit(double epsilon, const DecayRates& rates) {
  QubitQutritComparison cmp;
  cmp.qutrit = separability_time(SystemKind::qutrit, epsilon, rates);
  cmp.qubit = separability_time(SystemKind::qubit, epsilon, rates);
  const double diff = cmp.qutrit.t_star - cmp.qubit.t_star;
  if (std::abs(diff) <= 1e-9) {
    cmp.longer = Longevity::tie;
  } else {
    cmp.longer = diff > 0.0 ? Longevity::qutrit_longer : Longevity::qubit_longer;
  }
  return cmp;
}

}  // namespace qutrit

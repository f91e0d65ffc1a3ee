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

// Werner states of two qubits or two qutrits under one-sided spontaneous
// emission, and the diagonal-coefficient separability witness.
//
// The witness is normalized so that s = epsilon for an undisturbed Werner
// state: s = (1/12) sum_j |c_jj| against threshold 1/4 for qutrits, and
// s = (1/3) sum_j |d_jj| against threshold 1/3 for qubits.

#ifndef QUTRIT_BIPARTITE_HPP
#define QUTRIT_BIPARTITE_HPP

#include <cstddef>
#include <optional>

#include "qutrit/channel.hpp"
#include "qutrit/density_matrix.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit {

enum class SystemKind { qubit, qutrit };

std::size_t local_dim(SystemKind kind);

/// 1/4 for qutrits, 1/3 for qubits.
double witness_threshold(SystemKind kind);

/// Projector on (|11> + |22> + |33>)/sqrt3 for dim 3 and on the symmetric
/// (|12> + |21>)/sqrt2 for dim 2.
DensityMatrix max_entangled(std::size_t dim);

struct WernerParameters {
  double epsilon = 0.0;  // [0, 1]
  std::size_t dim = 3;   // local dimension, 2 or 3
};

/// (1 - eps)/d^2 I + eps |psi><psi| with |psi> from max_entangled(). Throws
/// std::invalid_argument for eps outside [0, 1].
DensityMatrix werner(const WernerParameters& p);

/// Expansion coefficients over products of basis elements, indexed
/// (alpha, beta) in 0..d^2-1 with index 0 the identity-like element.
///   qutrit: c = (9/4) tr(rho lambda_a x lambda_b), rho = (1/9) sum c lambda x lambda
///   qubit:  d = tr(rho sigma_a x sigma_b),         rho = (1/4) sum d sigma x sigma
struct CoefficientMatrix {
  std::size_t dim = 0;  // local dimension
  RealMatrix entries;
};

/// Throws DimensionMismatch when rho is not (dim^2)x(dim^2).
CoefficientMatrix coefficient_matrix(const DensityMatrix& rho, std::size_t dim);

/// Inverse expansion; exact for any Hermitian operator.
ComplexMatrix state_from_coefficients(const CoefficientMatrix& c);

/// sum_i (K_i x I) rho (K_i x I)^dagger, or with the channel on B.
DensityMatrix one_sided_apply(const KrausChannel& ch, const DensityMatrix& rho,
                              Subsystem side = Subsystem::A);

struct WitnessValue {
  double s = 0.0;
  double threshold = 0.0;
  bool separable = false;  // s <= threshold
};

/// Uses the diagonal coefficients with index >= 1 only.
WitnessValue witness(const CoefficientMatrix& c);

/// (eps/8)(2e^{-A1 t/2} + 2e^{-A2 t/2} + 2e^{-(A1+A2)t/2} + e^{-A1 t} + e^{-A2 t}).
double s_qt_closed(double epsilon, double a1, double a2, double t);

/// (eps/3)(2e^{-A t/2} + e^{-A t}).
double s_qb_closed(double epsilon, double a, double t);

/// Closed-form witness of the one-sided SE evolution of a Werner state.
double s_closed(SystemKind kind, double epsilon, const DecayRates& rates, double t);

/// The SE channel acting on one subsystem of `kind`.
KrausChannel se_kraus(SystemKind kind, const DecayRates& rates, double t);

/// Witness of the numerically evolved state: Werner -> one-sided SE ->
/// coefficients -> witness.
double witness_pipeline(SystemKind kind, double epsilon, const DecayRates& rates, double t);

/// |witness_pipeline - s_closed|.
double witness_matches_closed_form(SystemKind kind, double epsilon, const DecayRates& rates,
                                   double t);

/// Smallest eigenvalue of the partial transpose on B. Negative values
/// certify entanglement.
double ppt_min_eigenvalue(const DensityMatrix& rho, SubsystemDims dims);

struct SeparabilityTime {
  double t_star = 0.0;
  bool already_separable = false;
};

/// First time the closed-form witness reaches `threshold`, by bisection to
/// |dt| <= 1e-12 on a bracket grown by doubling. Returns t = 0 with
/// already_separable when s(0) <= threshold. Throws NeverSeparable when the
/// t -> infinity limit of s stays at or above the threshold (e.g. zero rates).
SeparabilityTime separability_time(SystemKind kind, double epsilon, const DecayRates& rates,
                                   double threshold);
SeparabilityTime separability_time(SystemKind kind, double epsilon, const DecayRates& rates);

/// First time the evolved Werner state becomes PPT.
///
/// One-sided decay often leaves an entangled state approaching the product
/// state only asymptotically, so the search is limited to times where the
/// slowest decay factor is still above ~e^{-12}. `t_star` is empty when no
/// crossing occurs inside that horizon.
struct PptCrossing {
  std::optional<double> t_star;
  double horizon = 0.0;
};

PptCrossing ppt_separability_time(SystemKind kind, double epsilon, const DecayRates& rates);

enum class Longevity { qutrit_longer, qubit_longer, tie };

struct QubitQutritComparison {
  SeparabilityTime qutrit;
  SeparabilityTime qubit;
  Longevity longer = Longevity::tie;
};

/// Separability times of the qutrit (A1, A2) and qubit (A) Werner states
/// with the same epsilon. Times within 1e-9 count as a tie.
QubitQutritComparison compare_qubit_qutrit(double epsilon, const DecayRates& rates);

}  // namespace qutrit

#endif  // QUTRIT_BIPARTITE_HPP

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

#ifndef QUTRIT_CHANNEL_HPP
#define QUTRIT_CHANNEL_HPP

#include <cstddef>
#include <vector>

#include "qutrit/bloch.hpp"
#include "qutrit/density_matrix.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit {

/// Operator-sum channel rho -> sum_i K_i rho K_i^dagger.
///
/// The constructor only checks shapes (1..dim^2 square operators of one
/// size). Completeness sum_i K_i^dagger K_i = I is diagnosed by
/// completeness_defect() / is_cptp() so that invalid candidates can still be
/// inspected.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> operators);

  static KrausChannel identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> operators_;
};

/// Einstein coefficients. `a1` drives |2> -> |1>, `a2` drives |3> -> |1> in
/// the V-configuration qutrit; `a` is the qubit decay rate. Units are
/// arbitrary but must be the inverse of the time unit.
struct DecayRates {
  double a1 = 0.0;
  double a2 = 0.0;
  double a = 0.0;
};

/// Throws std::invalid_argument("rates must be nonnegative") on negative or
/// non-finite rates.
void validate_rates(const DecayRates& rates);

/// Spontaneous-emission channel of a V-configuration atom:
///   K0 = diag(1, e^{-A1 t/2}, e^{-A2 t/2}),
///   K1 = sqrt(1 - e^{-A1 t}) |1><2|,  K2 = sqrt(1 - e^{-A2 t}) |1><3|.
KrausChannel se_qutrit_kraus(const DecayRates& rates, double t);

/// Amplitude damping of a two-level atom:
///   K0 = diag(1, e^{-A t/2}),  K1 = sqrt(1 - e^{-A t}) |1><2|.
KrausChannel se_qubit_kraus(const DecayRates& rates, double t);

/// n -> T n + translation on Bloch vectors.
struct AffineBlochMap {
  std::size_t dim = 0;
  RealMatrix transfer;
  std::vector<double> translation;
};

/// Closed-form Bloch map of the qutrit SE channel. Diagonal decay factors
/// e^{-A1 t/2} (n1,n2), e^{-A1 t} (n3), e^{-A2 t/2} (n4,n5),
/// e^{-(A1+A2)t/2} (n6,n7), e^{-A2 t} (n8) plus the n8 -> n3 coupling
/// (e^{-A2 t} - e^{-A1 t})/sqrt(3). The translation pumps n3 and n8 toward
/// the ground state.
AffineBlochMap se_qutrit_affine(const DecayRates& rates, double t);

/// Closed-form Bloch map of the qubit SE channel:
/// T = diag(e^{-At/2}, e^{-At/2}, e^{-At}), translation (0, 0, 1 - e^{-At}).
AffineBlochMap se_qubit_affine(const DecayRates& rates, double t);

/// sum_i K_i X K_i^dagger for an arbitrary operator X.
ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x);

/// Channel action on a state. The result is re-validated as a density matrix.
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Max-norm of sum_i K_i^dagger K_i - I.
double completeness_defect(const KrausChannel& ch);

/// (Phi x id)(|Omega><Omega|) with the unnormalized |Omega> = sum_k |k>|k>.
/// Channel output is the slow tensor factor.
ComplexMatrix choi_matrix(const KrausChannel& ch);

struct CptpReport {
  bool cptp = false;
  double completeness_defect = 0.0;
  double choi_min_eigenvalue = 0.0;
};

/// CPTP iff the completeness defect is <= tol and the Choi spectrum is
/// >= -tol. Throws std::invalid_argument for tol <= 0.
CptpReport is_cptp(const KrausChannel& ch, double tol);

/// Bloch-space image of any channel, obtained by probing it on the operator
/// basis: T_ij = tr(e_i Phi(e_j)) / 2, translation = bloch(Phi(I/d)).
AffineBlochMap affine_from_kraus(const KrausChannel& ch);

/// T v + translation. Throws DimensionMismatch when the map and vector
/// describe different systems.
CoherenceVector apply_affine(const AffineBlochMap& map, const CoherenceVector& v);

/// Channel that applies `second` after `first`: operators {B_j A_i}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

}  // namespace qutrit

#endif  // QUTRIT_CHANNEL_HPP

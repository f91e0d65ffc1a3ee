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

// Generalized Bloch representation of qubit and qutrit states.
//
// A qubit is written rho = (I + b.sigma) / 2 with a 3-component vector b; a
// qutrit is written rho = (I + sqrt(3) n.lambda) / 3 with an 8-component
// vector n over the Gell-Mann matrices. Components are stored 0-based, so
// component k multiplies sigma_{k+1} or lambda_{k+1}.

#ifndef QUTRIT_BLOCH_HPP
#define QUTRIT_BLOCH_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qutrit/density_matrix.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit {

/// Hermitian operator basis with tr(e_a e_b) = 2 delta_ab.
///
/// dim 2: {I, sigma_x, sigma_y, sigma_z}.
/// dim 3: {sqrt(2/3) I, lambda_1, ..., lambda_8} in the standard Gell-Mann
/// order: lambda_{1,2} couple levels 1-2, lambda_{4,5} levels 1-3,
/// lambda_{6,7} levels 2-3, lambda_3 = diag(1,-1,0), lambda_8 =
/// diag(1,1,-2)/sqrt(3).
struct OperatorBasis {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;  // element 0 is proportional to I

  /// The traceless generators, i.e. elements[k + 1].
  const ComplexMatrix& generator(std::size_t k) const { return elements.at(k + 1); }
  std::size_t generator_count() const { return elements.size() - 1; }
};

/// Shared, immutable basis for dim 2 or 3. Throws std::invalid_argument
/// for any other dimension.
const OperatorBasis& basis(std::size_t dim);

/// Number of Bloch components for a system of dimension `dim` (3 or 8).
std::size_t bloch_length(std::size_t dim);

/// Real Bloch (coherence) vector of a qubit or qutrit.
class CoherenceVector {
 public:
  /// Throws std::invalid_argument if `dim` is not 2 or 3, if the component
  /// count is wrong, or if the squared norm exceeds 1 + 1e-12.
  CoherenceVector(std::size_t dim, std::vector<double> components);

  static CoherenceVector zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t k) const { return components_[k]; }
  const std::vector<double>& components() const { return components_; }

  double dot(const CoherenceVector& other) const;
  double norm_squared() const { return dot(*this); }

 private:
  std::size_t dim_;
  std::vector<double> components_;
};

/// Totally symmetric SU(3) tensor d_klm = tr({lambda_k, lambda_l} lambda_m) / 4,
/// indices 0..7 standing for lambda_1..lambda_8.
class StructureTensor {
 public:
  double operator()(std::size_t k, std::size_t l, std::size_t m) const {
    return d_[(k * 8 + l) * 8 + m];
  }

 private:
  friend const StructureTensor& structure_tensor();
  std::array<double, 512> d_{};
};

const StructureTensor& structure_tensor();

/// (a * b)_k = sqrt(3) d_klm a_l b_m. With this normalization every pure
/// qutrit satisfies n * n = n. Qubit vectors throw std::invalid_argument.
std::vector<double> star_product(const CoherenceVector& a, const CoherenceVector& b);

/// Build the density matrix of a Bloch vector. Throws NotPhysical when the
/// result has an eigenvalue below -1e-10.
DensityMatrix density_from_bloch(const CoherenceVector& v);

/// n_k = (sqrt(3)/2) tr(rho lambda_{k+1}) for qutrits, b_k = tr(rho sigma_{k+1})
/// for qubits.
CoherenceVector bloch_from_density(const DensityMatrix& rho);

/// Angles of a pure qutrit
///   |psi> = sin(xi/2)cos(theta/2)|1> + e^{i phi12} sin(xi/2)sin(theta/2)|2>
///           + e^{i phi13} cos(xi/2)|3>.
struct PureStateAngles {
  double xi = 0.0;     // [0, pi]
  double theta = 0.0;  // [0, pi]
  double phi12 = 0.0;  // [0, 2 pi)
  double phi13 = 0.0;  // [0, 2 pi)
};

/// The ket above as a vector of amplitudes. Throws std::invalid_argument for
/// angles outside their ranges.
std::array<Complex, 3> pure_state_ket(const PureStateAngles& angles);

DensityMatrix pure_state_from_angles(const PureStateAngles& angles);

/// Populations and dipole coherences of a V-configuration atom.
///
/// The dipoles follow the sign convention of the n_1..n_7 readout
/// (n_1 = sqrt(3) Re d_1, n_2 = sqrt(3) Im d_1, ...), which makes
/// d_1 = <2|rho|1>, d_2 = <3|rho|1>, d_3 = <3|rho|2>.
struct AtomicObservables {
  double p1 = 1.0;
  double p2 = 0.0;
  double p3 = 0.0;
  Complex d1{};  // |1> -> |2>
  Complex d2{};  // |1> -> |3>
  Complex d3{};  // |2> -> |3>
};

/// n_1 = (sqrt3/2)(d1* + d1), n_2 = (i sqrt3/2)(d1* - d1), likewise n_4,5 from
/// d2 and n_6,7 from d3; n_3 = (sqrt3/2)(1 - 2p2 - p3), n_8 = (1 - 3p3)/2.
/// Throws std::invalid_argument when populations are not a probability
/// distribution or a dipole violates |d|^2 <= p_a p_b.
CoherenceVector observables_to_bloch(const AtomicObservables& o);

/// Inverse readout. Rejects (NotPhysical) vectors whose density matrix is
/// not positive rather than clipping them.
AtomicObservables bloch_to_observables(const CoherenceVector& v);

}  // namespace qutrit

#endif  // QUTRIT_BLOCH_HPP

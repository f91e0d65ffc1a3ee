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

#include "qutrit/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/tolerances.hpp"

namespace qutrit {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr Complex kI{0.0, 1.0};

OperatorBasis make_pauli_basis() {
  OperatorBasis b;
  b.dim = 2;
  b.elements = {
      ComplexMatrix::identity(2),
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return b;
}

OperatorBasis make_gell_mann_basis() {
  const double r8 = 1.0 / kSqrt3;
  OperatorBasis b;
  b.dim = 3;
  ComplexMatrix lambda0 = ComplexMatrix::identity(3);
  lambda0 *= std::sqrt(2.0 / 3.0);
  b.elements = {
      lambda0,
      ComplexMatrix{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, -kI, 0.0}, {kI, 0.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, -kI}, {0.0, 0.0, 0.0}, {kI, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, -kI}, {0.0, kI, 0.0}},
      ComplexMatrix{{r8, 0.0, 0.0}, {0.0, r8, 0.0}, {0.0, 0.0, -2.0 * r8}},
  };
  return b;
}

// Prefactor c in rho = (I + c v.e) / d.
double bloch_scale(std::size_t dim) { return dim == 3 ? kSqrt3 : 1.0; }

// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  }
  return s;
}

void check_population(double p, const char* name) {
  if (!(p >= -tol::kTrace && p <= 1.0 + tol::kTrace)) {
    throw std::invalid_argument(std::string("population ") + name + " outside [0, 1]");
  }
}

void check_dipole(Complex d, double pa, double pb, const char* name) {
  if (std::norm(d) > pa * pb + tol::kTrace) {
    throw std::invalid_argument(std::string("dipole ") + name +
                                " exceeds the Cauchy-Schwarz bound of its populations");
  }
}

}  // namespace

const OperatorBasis& basis(std::size_t dim) {
  static const OperatorBasis pauli = make_pauli_basis();
  static const OperatorBasis gell_mann = make_gell_mann_basis();
  if (dim == 2) return pauli;
  if (dim == 3) return gell_mann;
  throw std::invalid_argument("operator basis exists only for dim 2 or 3, got " +
                              std::to_string(dim));
}

std::size_t bloch_length(std::size_t dim) {
  if (dim == 2) return 3;
  if (dim == 3) return 8;
  throw std::invalid_argument("Bloch vectors exist only for dim 2 or 3, got " +
                              std::to_string(dim));
}

CoherenceVector::CoherenceVector(std::size_t dim, std::vector<double> components)
    : dim_(dim), components_(std::move(components)) {
  if (components_.size() != bloch_length(dim_)) {
    throw std::invalid_argument("Bloch vector for dim " + std::to_string(dim_) + " needs " +
                                std::to_string(bloch_length(dim_)) + " components, got " +
                                std::to_string(components_.size()));
  }
  for (double c : components_) {
    if (!std::isfinite(c)) throw std::invalid_argument("Bloch vector has a non-finite component");
  }
  if (norm_squared() > 1.0 + tol::kBlochNorm) {
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  }
}

CoherenceVector CoherenceVector::zero(std::size_t dim) {
  return CoherenceVector(dim, std::vector<double>(bloch_length(dim), 0.0));
}

double CoherenceVector::dot(const CoherenceVector& other) const {
  if (other.size() != size()) throw DimensionMismatch("dot of Bloch vectors of different size");
  double s = 0.0;
  for (std::size_t k = 0; k < size(); ++k) s += components_[k] * other.components_[k];
  return s;
}

const StructureTensor& structure_tensor() {
  static const StructureTensor tensor = [] {
    StructureTensor t;
    const OperatorBasis& b = basis(3);
    for (std::size_t k = 0; k < 8; ++k) {
      for (std::size_t l = k; l < 8; ++l) {
        const ComplexMatrix& lk = b.generator(k);
        const ComplexMatrix& ll = b.generator(l);
        const ComplexMatrix anti = lk * ll + ll * lk;
        for (std::size_t m = l; m < 8; ++m) {
          double v = 0.25 * trace_of_product(anti, b.generator(m)).real();
          if (std::abs(v) < 1e-15) v = 0.0;
          // Fill every permutation so the stored table is exactly symmetric.
          const std::size_t idx[3] = {k, l, m};
          constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
          for (const auto& p : perms) {
            t.d_[(idx[p[0]] * 8 + idx[p[1]]) * 8 + idx[p[2]]] = v;
          }
        }
      }
    }
    return t;
  }();
  return tensor;
}

std::vector<double> star_product(const CoherenceVector& a, const CoherenceVector& b) {
  if (a.dim() != 3 || b.dim() != 3) {
    throw std::invalid_argument("star product is defined for qutrit Bloch vectors only");
  }
  const StructureTensor& d = structure_tensor();
  std::vector<double> out(8, 0.0);
  for (std::size_t k = 0; k < 8; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l < 8; ++l) {
      if (a[l] == 0.0) continue;
      for (std::size_t m = 0; m < 8; ++m) s += d(k, l, m) * a[l] * b[m];
    }
    out[k] = kSqrt3 * s;
  }
  return out;
}

DensityMatrix density_from_bloch(const CoherenceVector& v) {
  const std::size_t dim = v.dim();
  const OperatorBasis& b = basis(dim);
  const double c = bloch_scale(dim);
  ComplexMatrix m = ComplexMatrix::identity(dim);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0.0) m += b.generator(k) * Complex(c * v[k]);
  }
  m *= 1.0 / static_cast<double>(dim);
  if (min_eigenvalue(m) < -tol::kPsdSlack) {
    throw NotPhysical("not a physical state: Bloch vector gives a negative eigenvalue");
  }
  return DensityMatrix(std::move(m));
}

CoherenceVector bloch_from_density(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  const OperatorBasis& b = basis(dim);
  // tr(rho e_k) = 2 c v_k / d.
  const double factor = static_cast<double>(dim) / (2.0 * bloch_scale(dim));
  std::vector<double> comps(b.generator_count());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    comps[k] = factor * trace_of_product(rho.matrix(), b.generator(k)).real();
  }
  return CoherenceVector(dim, std::move(comps));
}

std::array<Complex, 3> pure_state_ket(const PureStateAngles& a) {
  constexpr double pi = std::numbers::pi;
  if (a.xi < 0.0 || a.xi > pi || a.theta < 0.0 || a.theta > pi) {
    throw std::invalid_argument("pure state angles: xi and theta must lie in [0, pi]");
  }
  if (a.phi12 < 0.0 || a.phi12 >= 2.0 * pi || a.phi13 < 0.0 || a.phi13 >= 2.0 * pi) {
    throw std::invalid_argument("pure state angles: phases must lie in [0, 2 pi)");
  }
  const double sx = std::sin(a.xi / 2.0);
  const double cx = std::cos(a.xi / 2.0);
  return {Complex(sx * std::cos(a.theta / 2.0)),
          std::polar(sx * std::sin(a.theta / 2.0), a.phi12),
          std::polar(cx, a.phi13)};
}

DensityMatrix pure_state_from_angles(const PureStateAngles& angles) {
  const std::array<Complex, 3> ket = pure_state_ket(angles);
  return DensityMatrix(ComplexMatrix::outer(ket));
}

CoherenceVector observables_to_bloch(const AtomicObservables& o) {
  check_population(o.p1, "p1");
  check_population(o.p2, "p2");
  check_population(o.p3, "p3");
  if (std::abs(o.p1 + o.p2 + o.p3 - 1.0) > tol::kTrace) {
    throw std::invalid_argument("populations must sum to 1");
  }
  check_dipole(o.d1, o.p1, o.p2, "d1");
  check_dipole(o.d2, o.p1, o.p3, "d2");
  check_dipole(o.d3, o.p2, o.p3, "d3");

  const double h = kSqrt3 / 2.0;
  auto re = [&](Complex d) { return (h * (std::conj(d) + d)).real(); };
  auto im = [&](Complex d) { return (h * kI * (std::conj(d) - d)).real(); };
  return CoherenceVector(3, {re(o.d1), im(o.d1), h * (1.0 - 2.0 * o.p2 - o.p3), re(o.d2),
                             im(o.d2), re(o.d3), im(o.d3), 0.5 * (1.0 - 3.0 * o.p3)});
}

AtomicObservables bloch_to_observables(const CoherenceVector& v) {
  if (v.dim() != 3) throw std::invalid_argument("atomic observables need a qutrit Bloch vector");
  // density_from_bloch rejects non-positive vectors.
  density_from_bloch(v);

  AtomicObservables o;
  o.p3 = (1.0 - 2.0 * v[7]) / 3.0;
  o.p2 = (1.0 - o.p3 - 2.0 * v[2] / kSqrt3) / 2.0;
  o.p1 = 1.0 - o.p2 - o.p3;
  o.d1 = Complex(v[0], v[1]) / kSqrt3;
  o.d2 = Complex(v[3], v[4]) / kSqrt3;
  o.d3 = Complex(v[5], v[6]) / kSqrt3;
  return o;
}

}  // namespace qutrit

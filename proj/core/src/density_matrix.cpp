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

#include "qutrit/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/tolerances.hpp"

namespace qutrit {

bool is_supported_state_dim(std::size_t dim) {
  return dim == 2 || dim == 3 || dim == 4 || dim == 9;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || !is_supported_state_dim(m_.rows())) {
    throw NotPhysical("not a density matrix: unsupported shape " + std::to_string(m_.rows()) +
                      "x" + std::to_string(m_.cols()));
  }
  if (hermiticity_defect(m_) > tol::kHermitian) {
    throw NotPhysical("not a density matrix: not Hermitian");
  }
  if (std::abs(m_.trace() - 1.0) > tol::kTrace) {
    throw NotPhysical("not a density matrix: trace differs from 1");
  }
  if (min_eigenvalue(m_) < -tol::kPsdSlack) {
    throw NotPhysical("not a density matrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

}  // namespace qutrit

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

#ifndef QUTRIT_DENSITY_MATRIX_HPP
#define QUTRIT_DENSITY_MATRIX_HPP

#include <cstddef>

#include "qutrit/matrix.hpp"

namespace qutrit {

/// Validated quantum state of a qubit (2), qutrit (3), or a pair of either
/// (4, 9). Construction checks Hermiticity and unit trace to 1e-12 and
/// positivity to -1e-10, throwing NotPhysical otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// Maximally mixed state I/dim.
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// tr(rho^2).
  double purity() const;

 private:
  ComplexMatrix m_;
};

/// True when `dim` is one of the state sizes this library handles.
bool is_supported_state_dim(std::size_t dim);

}  // namespace qutrit

#endif  // QUTRIT_DENSITY_MATRIX_HPP

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

#ifndef QUTRIT_TOLERANCES_HPP
#define QUTRIT_TOLERANCES_HPP

namespace qutrit::tol {

// Spectra of matrices up to 9x9 carry ~1e-14 rounding noise; these sit
// about two orders of magnitude above that.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsdSlack = 1e-10;

// Looser Hermiticity gate for the eigen solver input.
inline constexpr double kEigenInputHermitian = 1e-10;

// Bloch vector norm may exceed one by at most this much.
inline constexpr double kBlochNorm = 1e-12;

}  // namespace qutrit::tol

#endif  // QUTRIT_TOLERANCES_HPP

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

#ifndef QUTRIT_ERRORS_HPP
#define QUTRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qutrit {

/// Operand shapes do not fit together (wrong size, wrong subsystem split).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix or vector that was supposed to describe a quantum state does not.
class NotPhysical : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The entanglement witness never drops below its threshold for these rates.
class NeverSeparable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qutrit

#endif  // QUTRIT_ERRORS_HPP

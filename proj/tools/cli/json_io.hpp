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


// JSON descriptors for channels and states, and the number formatting shared
// by every CLI output.
//
// Channel: {"dim": 3, "kraus": [K0, K1, ...]} where each operator is a list of
// rows and each entry is [re, im]. A flat row-major list of dim*dim entries
// is also accepted. A bare number counts as a real entry.
//
// State: {"dim": d, "rho": [...]} with the same matrix layout, or
// {"dim": 2|3, "bloch": [...]}.

#ifndef QUTRIT_TOOLS_JSON_IO_HPP
#define QUTRIT_TOOLS_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qutrit/channel.hpp"
#include "qutrit/density_matrix.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit::cli {

/// Malformed or incomplete descriptor.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.17g"; NaN and infinities become "null".
std::string format_number(double x);

KrausChannel parse_channel(std::string_view text);
std::string channel_to_json(const KrausChannel& ch);

/// Throws InputError for malformed input and NotPhysical when the matrix is
/// not a density matrix.
DensityMatrix parse_state(std::string_view text);

}  // namespace qutrit::cli

#endif  // QUTRIT_TOOLS_JSON_IO_HPP

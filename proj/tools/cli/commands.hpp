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


// Subcommands of the qutrit-se tool. Everything runs in-process against the
// given streams so tests can drive the tool without spawning it.
//
// Exit codes: 0 success, 1 usage or input error, 2 domain verdict
// (channel not CPTP, state never separable), 3 verification failure.

#ifndef QUTRIT_TOOLS_COMMANDS_HPP
#define QUTRIT_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qutrit/bipartite.hpp"
#include "qutrit/channel.hpp"

namespace qutrit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

enum class ScanKind { qutrit, qubit, both };

/// One witness curve over a time grid.
struct ScanCurve {
  std::string label;  // empty for a plain scan
  ScanKind kind = ScanKind::qutrit;
  double epsilon = 1.0;
  DecayRates rates;
};

struct ScanConfig {
  std::vector<ScanCurve> curves;
  double t_start = 0.0;
  double t_end = 3.0;
  int samples = 301;
  bool verify = false;
};

struct ScanTable {
  std::string csv;
  double max_defect = 0.0;  // pipeline vs closed form, when verifying
};

/// Curves for fig2, fig3 or fig4. Throws std::invalid_argument otherwise.
std::vector<ScanCurve> preset_curves(const std::string& name);

/// Throws std::invalid_argument on an invalid grid or curve.
ScanTable render_scan(const ScanConfig& cfg);

/// Largest allowed |pipeline - closed form| per row under --verify.
inline constexpr double kVerifyTolerance = 1e-10;

/// Entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qutrit::cli

#endif  // QUTRIT_TOOLS_COMMANDS_HPP

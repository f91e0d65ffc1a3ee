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


#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"
#include "json_writer.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/errors.hpp"

namespace qutrit::cli {

namespace {

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  return read_all(f);
}

// Appends "--key value" for every config entry whose flag is not already on
// the command line, so explicit flags win.
std::vector<std::string> merge_config(std::vector<std::string> args, std::istream& in) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw InputError("--config needs a file");
      path = *std::next(it);
      it = args.erase(it, std::next(it, 2));
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;

  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(read_file(path, in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("config " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw InputError("config " + path + " must be a JSON object");

  auto present = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (present(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      args.push_back(flag);
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(format_number(value.get<double>()));
    } else {
      throw InputError("config key \"" + key + "\" must be a string, number or boolean");
    }
  }
  return args;
}

void write_rates(JsonWriter& w, const DecayRates& r, std::size_t dim) {
  w.key("rates").begin_object();
  if (dim == 3) {
    w.key("a1").value(r.a1);
    w.key("a2").value(r.a2);
  } else {
    w.key("a").value(r.a);
  }
  w.end_object();
}

const char* kind_name(SystemKind k) { return k == SystemKind::qutrit ? "qutrit" : "qubit"; }

// ---- channel-info ----------------------------------------------------------

struct ChannelInfoArgs {
  int dim = 0;
  DecayRates rates;
  double t = -1.0;
  std::string kraus_file;
  double tol = 1e-12;
};

int channel_info(const ChannelInfoArgs& a, std::istream& in, std::ostream& out) {
  if (!(a.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  std::optional<KrausChannel> ch;
  if (!a.kraus_file.empty()) {
    ch = parse_channel(read_file(a.kraus_file, in));
    if (a.dim != 0 && static_cast<std::size_t>(a.dim) != ch->dim()) {
      throw InputError("--dim does not match the channel file");
    }
  } else {
    if (a.dim != 2 && a.dim != 3) throw std::invalid_argument("--dim must be 2 or 3");
    if (a.t < 0.0) throw std::invalid_argument("--t is required and must be nonnegative");
    validate_rates(a.rates);
    ch = a.dim == 3 ? se_qutrit_kraus(a.rates, a.t) : se_qubit_kraus(a.rates, a.t);
  }
  const CptpReport rep = is_cptp(*ch, a.tol);

  JsonWriter w;
  w.begin_object();
  w.key("dim").value(static_cast<long long>(ch->dim()));
  if (a.kraus_file.empty()) {
    w.key("channel").value("spontaneous_emission");
    write_rates(w, a.rates, ch->dim());
    w.key("t").value(a.t);
  } else {
    w.key("channel").value("file");
  }
  w.key("kraus").begin_array();
  for (const ComplexMatrix& k : ch->operators()) w.matrix(k);
  w.end_array();
  w.key("defect").value(rep.completeness_defect);
  w.key("choi_min_eigenvalue").value(rep.choi_min_eigenvalue);
  w.key("tolerance").value(a.tol);
  w.key("cptp").value(rep.cptp);
  w.end_object();
  out << w.str();
  return rep.cptp ? kOk : kDomain;
}

// ---- scan --------------------------------------------------------------------

struct ScanArgs {
  std::string kind = "qutrit";
  double epsilon = 1.0;
  DecayRates rates;
  double t_start = 0.0;
  double t_end = 3.0;
  int samples = 301;
  std::string output;
  std::string preset;
  bool verify = false;
};

ScanKind parse_scan_kind(const std::string& s) {
  if (s == "qutrit") return ScanKind::qutrit;
  if (s == "qubit") return ScanKind::qubit;
  if (s == "both") return ScanKind::both;
  throw std::invalid_argument("--kind must be qutrit, qubit or both");
}

int scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  ScanConfig cfg;
  cfg.t_start = a.t_start;
  cfg.t_end = a.t_end;
  cfg.samples = a.samples;
  cfg.verify = a.verify;
  if (!a.preset.empty()) {
    cfg.curves = preset_curves(a.preset);
  } else {
    cfg.curves.push_back({"", parse_scan_kind(a.kind), a.epsilon, a.rates});
  }
  const ScanTable table = render_scan(cfg);
  if (a.verify && !(table.max_defect <= kVerifyTolerance)) {
    err << "verification failed: pipeline and closed form differ by "
        << format_number(table.max_defect) << "\n";
    return kVerifyFailed;
  }
  if (a.output.empty() || a.output == "-") {
    out << table.csv;
  } else {
    std::ofstream f(a.output, std::ios::binary | std::ios::trunc);
    if (!f || !(f << table.csv) || !f.flush()) throw InputError("cannot write " + a.output);
  }
  if (a.verify) err << "verified: max defect " << format_number(table.max_defect) << "\n";
  return kOk;
}

// ---- threshold ---------------------------------------------------------------

struct ThresholdArgs {
  std::string kind;
  double epsilon = 1.0;
  DecayRates rates;
};

int threshold(const ThresholdArgs& a, std::ostream& out) {
  SystemKind kind;
  if (a.kind == "qutrit") {
    kind = SystemKind::qutrit;
  } else if (a.kind == "qubit") {
    kind = SystemKind::qubit;
  } else {
    throw std::invalid_argument("--kind must be qutrit or qubit");
  }
  const SeparabilityTime st = separability_time(kind, a.epsilon, a.rates);
  const PptCrossing ppt = ppt_separability_time(kind, a.epsilon, a.rates);

  JsonWriter w;
  w.begin_object();
  w.key("kind").value(kind_name(kind));
  w.key("epsilon").value(a.epsilon);
  write_rates(w, a.rates, local_dim(kind));
  w.key("threshold").value(witness_threshold(kind));
  w.key("t_star").value(st.t_star);
  w.key("already_separable").value(st.already_separable);
  if (st.already_separable) w.key("status").value("already separable");
  w.key("ppt_t_star").value(ppt.t_star);
  w.key("ppt_horizon").value(ppt.horizon);
  w.end_object();
  out << w.str();
  return kOk;
}

// ---- evolve --------------------------------------------------------------------

struct EvolveArgs {
  std::string input;
  DecayRates rates;
  double t = -1.0;
};

int evolve(const EvolveArgs& a, std::istream& in, std::ostream& out) {
  if (a.t < 0.0) throw std::invalid_argument("--t is required and must be nonnegative");
  validate_rates(a.rates);
  const DensityMatrix rho0 = parse_state(read_file(a.input, in));
  const std::size_t d = rho0.dim();
  if (d != 2 && d != 3) throw InputError("evolve takes a single qubit or qutrit state");

  const KrausChannel ch = d == 3 ? se_qutrit_kraus(a.rates, a.t) : se_qubit_kraus(a.rates, a.t);
  const DensityMatrix rho = apply_channel(ch, rho0);
  const CoherenceVector v = bloch_from_density(rho);

  JsonWriter w;
  w.begin_object();
  w.key("dim").value(static_cast<long long>(d));
  write_rates(w, a.rates, d);
  w.key("t").value(a.t);
  w.key("rho").matrix(rho.matrix());
  w.key("bloch").values(v.components());
  if (d == 3) {
    const AtomicObservables o = bloch_to_observables(v);
    w.key("observables").begin_object();
    w.key("p1").value(o.p1);
    w.key("p2").value(o.p2);
    w.key("p3").value(o.p3);
    w.key("d1").value(o.d1);
    w.key("d2").value(o.d2);
    w.key("d3").value(o.d3);
    w.end_object();
  } else {
    w.key("populations").values({rho(0, 0).real(), rho(1, 1).real()});
    w.key("coherence").value(rho(1, 0));
  }
  w.key("purity").value(rho.purity());
  w.end_object();
  out << w.str();
  return kOk;
}

void add_rate_options(CLI::App* sub, DecayRates& r, bool qutrit, bool qubit) {
  if (qutrit) {
    sub->add_option("--a1", r.a1, "Decay rate |2> -> |1>");
    sub->add_option("--a2", r.a2, "Decay rate |3> -> |1>");
  }
  if (qubit) sub->add_option("--a", r.a, "Qubit decay rate");
}

}  // namespace

std::vector<ScanCurve> preset_curves(const std::string& name) {
  if (name == "fig2") {
    return {{"s_qt(A1=2 A2=4)", ScanKind::qutrit, 1.0, {2.0, 4.0, 0.0}},
            {"s_qt(A1=A2=4)", ScanKind::qutrit, 1.0, {4.0, 4.0, 0.0}}};
  }
  if (name == "fig3") {
    return {{"s_qb(A=2)", ScanKind::qubit, 1.0, {0.0, 0.0, 2.0}},
            {"s_qb(A=3)", ScanKind::qubit, 1.0, {0.0, 0.0, 3.0}},
            {"s_qb(A=4)", ScanKind::qubit, 1.0, {0.0, 0.0, 4.0}}};
  }
  if (name == "fig4") {
    std::vector<ScanCurve> c = preset_curves("fig3");
    c.push_back({"s_qt(A1=2 A2=4)", ScanKind::qutrit, 1.0, {2.0, 4.0, 0.0}});
    return c;
  }
  throw std::invalid_argument("unknown preset \"" + name + "\" (expected fig2, fig3 or fig4)");
}

ScanTable render_scan(const ScanConfig& cfg) {
  if (!(cfg.t_start >= 0.0 && cfg.t_start < cfg.t_end) || !std::isfinite(cfg.t_end)) {
    throw std::invalid_argument("scan needs 0 <= t-start < t-end");
  }
  if (cfg.samples < 2) throw std::invalid_argument("scan needs at least 2 samples");
  if (cfg.curves.empty()) throw std::invalid_argument("scan needs at least one curve");
  bool labelled = false;
  for (const ScanCurve& c : cfg.curves) {
    if (!(c.epsilon >= 0.0 && c.epsilon <= 1.0)) {
      throw std::invalid_argument("epsilon must lie in [0, 1]");
    }
    validate_rates(c.rates);
    labelled = labelled || !c.label.empty();
  }

  ScanTable table;
  std::string& csv = table.csv;
  if (labelled) csv += "curve,";
  csv += "t,s_qt,s_qb,threshold_qt,threshold_qb\n";
  const std::string thr_qt = format_number(witness_threshold(SystemKind::qutrit));
  const std::string thr_qb = format_number(witness_threshold(SystemKind::qubit));

  for (const ScanCurve& c : cfg.curves) {
    const bool qt = c.kind != ScanKind::qubit;
    const bool qb = c.kind != ScanKind::qutrit;
    for (int k = 0; k < cfg.samples; ++k) {
      const double t =
          k + 1 == cfg.samples
              ? cfg.t_end
              : cfg.t_start + (cfg.t_end - cfg.t_start) * k / (cfg.samples - 1);
      if (labelled) csv += c.label + ",";
      csv += format_number(t) + ",";
      if (qt) csv += format_number(s_qt_closed(c.epsilon, c.rates.a1, c.rates.a2, t));
      csv += ",";
      if (qb) csv += format_number(s_qb_closed(c.epsilon, c.rates.a, t));
      csv += ",";
      if (qt) csv += thr_qt;
      csv += ",";
      if (qb) csv += thr_qb;
      csv += "\n";

      if (!cfg.verify) continue;
      for (SystemKind kind : {SystemKind::qutrit, SystemKind::qubit}) {
        if ((kind == SystemKind::qutrit && !qt) || (kind == SystemKind::qubit && !qb)) continue;
        const double defect = witness_matches_closed_form(kind, c.epsilon, c.rates, t);
        table.max_defect = std::isnan(defect) ? defect : std::max(table.max_defect, defect);
      }
    }
  }
  return table;
}

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spontaneous emission channels on qubits and qutrits", "qutrit-se"};
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  app.require_subcommand(1);
  app.add_option("--config", "JSON file with flag values; explicit flags win")
      ->check(CLI::ExistingFile);

  ChannelInfoArgs ci;
  CLI::App* ci_cmd = app.add_subcommand("channel-info", "Kraus operators and CPTP diagnostics");
  ci_cmd->add_option("--dim", ci.dim, "System dimension (2 or 3)");
  add_rate_options(ci_cmd, ci.rates, true, true);
  ci_cmd->add_option("--t", ci.t, "Time");
  ci_cmd->add_option("--kraus-file", ci.kraus_file, "Channel descriptor (JSON) or - for stdin");
  ci_cmd->add_option("--tol", ci.tol, "Tolerance for the CPTP verdict")->capture_default_str();

  ScanArgs sc;
  CLI::App* sc_cmd = app.add_subcommand("scan", "Witness curves as CSV");
  CLI::Option* kind_opt =
      sc_cmd->add_option("--kind", sc.kind, "qutrit, qubit or both")->capture_default_str();
  CLI::Option* eps_opt = sc_cmd->add_option("--eps", sc.epsilon, "Werner weight")->capture_default_str();
  CLI::Option* a1_opt = sc_cmd->add_option("--a1", sc.rates.a1, "Decay rate |2> -> |1>");
  CLI::Option* a2_opt = sc_cmd->add_option("--a2", sc.rates.a2, "Decay rate |3> -> |1>");
  CLI::Option* a_opt = sc_cmd->add_option("--a", sc.rates.a, "Qubit decay rate");
  sc_cmd->add_option("--t-start", sc.t_start, "First time")->capture_default_str();
  sc_cmd->add_option("--t-end", sc.t_end, "Last time")->capture_default_str();
  sc_cmd->add_option("--samples", sc.samples, "Number of time points")->capture_default_str();
  sc_cmd->add_option("--output", sc.output, "Output file (default stdout)");
  sc_cmd->add_option("--preset", sc.preset, "fig2, fig3 or fig4")
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}))
      ->excludes(kind_opt)
      ->excludes(eps_opt)
      ->excludes(a1_opt)
      ->excludes(a2_opt)
      ->excludes(a_opt);
  sc_cmd->add_flag("--verify", sc.verify, "Check every row against the numerical pipeline");

  ThresholdArgs th;
  CLI::App* th_cmd = app.add_subcommand("threshold", "Separability crossing times as JSON");
  th_cmd->add_option("--kind", th.kind, "qutrit or qubit")->required();
  th_cmd->add_option("--eps", th.epsilon, "Werner weight")->capture_default_str();
  add_rate_options(th_cmd, th.rates, true, true);

  EvolveArgs ev;
  CLI::App* ev_cmd = app.add_subcommand("evolve", "Evolve a single-system state under SE");
  ev_cmd->add_option("--input", ev.input, "State descriptor (JSON) or - for stdin")->required();
  add_rate_options(ev_cmd, ev.rates, true, true);
  ev_cmd->add_option("--t", ev.t, "Time")->required();

  try {
    std::vector<std::string> args = merge_config(raw_args, in);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*ci_cmd) return channel_info(ci, in, out);
    if (*sc_cmd) return scan(sc, out, err);
    if (*th_cmd) return threshold(th, out);
    if (*ev_cmd) return evolve(ev, in, out);
  } catch (const NeverSeparable& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qutrit::cli

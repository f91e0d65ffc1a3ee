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


#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json_writer.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/errors.hpp"

namespace qutrit::cli {

namespace {

Complex parse_entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw InputError("matrix entries must be numbers or [re, im] pairs");
}

ComplexMatrix parse_matrix(const nlohmann::json& m, std::size_t dim, const char* what) {
  if (!m.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  const bool nested = m.size() == dim && m[0].is_array() && m[0].size() == dim;
  if (nested) {
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != dim) {
        throw InputError(std::string(what) + ": every row needs " + std::to_string(dim) +
                         " entries");
      }
      for (const auto& e : row) entries.push_back(parse_entry(e));
    }
  } else {
    if (m.size() != dim * dim) {
      throw InputError(std::string(what) + ": expected " + std::to_string(dim) + " rows or " +
                       std::to_string(dim * dim) + " row-major entries");
    }
    for (const auto& e : m) entries.push_back(parse_entry(e));
  }
  try {
    return ComplexMatrix(dim, dim, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

nlohmann::json parse_object(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("descriptor must be a JSON object");
  return doc;
}

std::size_t parse_dim(const nlohmann::json& doc) {
  const auto it = doc.find("dim");
  if (it == doc.end() || !it->is_number_integer() || it->get<long long>() <= 0) {
    throw InputError("descriptor needs a positive integer \"dim\"");
  }
  return it->get<std::size_t>();
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

KrausChannel parse_channel(std::string_view text) {
  const nlohmann::json doc = parse_object(text);
  const std::size_t dim = parse_dim(doc);
  const auto it = doc.find("kraus");
  if (it == doc.end() || !it->is_array() || it->empty()) {
    throw InputError("channel descriptor needs a non-empty \"kraus\" array");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& k : *it) ops.push_back(parse_matrix(k, dim, "Kraus operator"));
  return KrausChannel(dim, std::move(ops));
}

std::string channel_to_json(const KrausChannel& ch) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(static_cast<long long>(ch.dim()));
  w.key("kraus").begin_array();
  for (const ComplexMatrix& k : ch.operators()) w.matrix(k);
  w.end_array();
  w.end_object();
  return w.str();
}

DensityMatrix parse_state(std::string_view text) {
  const nlohmann::json doc = parse_object(text);
  const std::size_t dim = parse_dim(doc);
  const bool has_rho = doc.contains("rho");
  const bool has_bloch = doc.contains("bloch");
  if (has_rho == has_bloch) throw InputError("state descriptor needs exactly one of \"rho\", \"bloch\"");
  if (has_rho) return DensityMatrix(parse_matrix(doc["rho"], dim, "rho"));

  const nlohmann::json& b = doc["bloch"];
  if (!b.is_array()) throw InputError("bloch must be an array of numbers");
  std::vector<double> v;
  for (const auto& x : b) {
    if (!x.is_number()) throw InputError("bloch must be an array of numbers");
    v.push_back(x.get<double>());
  }
  try {
    return density_from_bloch(CoherenceVector(dim, std::move(v)));
  } catch (const NotPhysical&) {
    throw NotPhysical("not a density matrix: Bloch vector gives a negative eigenvalue");
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bloch: ") + e.what());
  }
}

}  // namespace qutrit::cli

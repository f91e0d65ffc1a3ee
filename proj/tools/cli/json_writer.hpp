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


// Streaming JSON writer. Numbers use format_number so that every output of
// the tool has the same fixed 17-digit rendering.

#ifndef QUTRIT_TOOLS_JSON_WRITER_HPP
#define QUTRIT_TOOLS_JSON_WRITER_HPP

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "qutrit/matrix.hpp"

namespace qutrit::cli {

class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& k) {
    separate();
    out_ << nlohmann::json(k).dump() << ':';
    after_key_ = true;
    return *this;
  }

  JsonWriter& value(double x) { return raw(format_number(x)); }
  JsonWriter& value(long long x) { return raw(std::to_string(x)); }
  JsonWriter& value(bool b) { return raw(b ? "true" : "false"); }
  JsonWriter& value(const std::string& s) { return raw(nlohmann::json(s).dump()); }
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& value(std::optional<double> x) { return x ? value(*x) : null(); }
  JsonWriter& null() { return raw("null"); }

  JsonWriter& value(Complex z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
  }

  JsonWriter& values(const std::vector<double>& xs) {
    begin_array();
    for (double x : xs) value(x);
    return end_array();
  }

  /// Rows of [re, im] pairs.
  JsonWriter& matrix(const ComplexMatrix& m) {
    begin_array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      begin_array();
      for (std::size_t c = 0; c < m.cols(); ++c) value(m(r, c));
      end_array();
    }
    return end_array();
  }

  std::string str() const { return out_.str() + "\n"; }

 private:
  JsonWriter& open(char c) {
    separate();
    out_ << c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close(char c) {
    out_ << c;
    first_.pop_back();
    return *this;
  }
  JsonWriter& raw(const std::string& s) {
    separate();
    out_ << s;
    return *this;
  }
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ << ',';
      first_.back() = false;
    }
  }

  std::ostringstream out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

}  // namespace qutrit::cli

#endif  // QUTRIT_TOOLS_JSON_WRITER_HPP

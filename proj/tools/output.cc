// Copyright 2026 The Secretary Authors.
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

#include "output.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace secretary::cli {

namespace {

// JSON gets the double that the 12-digit text parses back to, so both
// formats carry the same number.
double rounded(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_number(v);
  double back = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), back);
  return back;
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
  } visit;
  return std::visit(visit, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return rounded(v);
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } visit;
  return std::visit(visit, c);
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 12);
  std::string s(buf, ptr);
  if (s == "-0") s = "0";
  return s;
}

void write_csv(std::ostream& os, const Envelope& env) {
  os << "# tool: " << kToolName << ' ' << kToolVersion << '\n';
  os << "# command: " << env.command << '\n';
  for (const auto& [k, v] : env.params) {
    os << "# param " << k << ": " << cell_text(v) << '\n';
  }
  for (const auto& [k, v] : env.summary) {
    os << "# " << k << ": " << cell_text(v) << '\n';
  }
  for (std::size_t i = 0; i < env.columns.size(); ++i) {
    os << (i ? "," : "") << env.columns[i];
  }
  os << '\n';
  for (const auto& row : env.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << cell_text(row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Envelope& env) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = env.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : env.params) params[k] = cell_json(v);
  j["params"] = params;
  if (!env.summary.empty()) {
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [k, v] : env.summary) summary[k] = cell_json(v);
    j["summary"] = summary;
  }
  j["columns"] = env.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : env.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[env.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << '\n';
}

void write_envelope(std::ostream& os, const Envelope& env, Format format) {
  if (format == Format::kCsv) {
    write_csv(os, env);
  } else {
    write_json(os, env);
  }
}

}  // namespace secretary::cli

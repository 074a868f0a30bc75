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

#ifndef SECRETARY_TOOLS_OUTPUT_H_
#define SECRETARY_TOOLS_OUTPUT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace secretary::cli {

inline constexpr const char* kToolName = "secretary";
inline constexpr const char* kToolVersion = "1.0.0";

// An empty cell is written as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                          std::string>;

// 12 significant digits, '.' separator, independent of the locale.
std::string format_number(double v);

struct Envelope {
  std::string command;  // canonical re-run command
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

void write_csv(std::ostream& os, const Envelope& env);
void write_json(std::ostream& os, const Envelope& env);
void write_envelope(std::ostream& os, const Envelope& env, Format format);

}  // namespace secretary::cli

#endif  // SECRETARY_TOOLS_OUTPUT_H_

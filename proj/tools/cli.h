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

#ifndef SECRETARY_TOOLS_CLI_H_
#define SECRETARY_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace secretary::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoConvergence = 3;

// Worker count for simulate; never changes any output value.
inline constexpr const char* kWorkersEnv = "SECRETARY_WORKERS";

// Runs one subcommand. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace secretary::cli

#endif  // SECRETARY_TOOLS_CLI_H_

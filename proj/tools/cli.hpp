// Copyright 2026 The Authors.
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

#ifndef JUMPOPT_TOOLS_CLI_HPP_
#define JUMPOPT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace jumpopt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name). Everything is written to
// out/err, so tests can drive the tool in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpopt::cli

#endif  // JUMPOPT_TOOLS_CLI_HPP_

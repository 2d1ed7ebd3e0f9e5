// Copyright 2026 The mwl Authors.
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

#ifndef MWL_CLI_HPP_
#define MWL_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace mwl::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitError = 3;

// Runs one command. args[0] is the program name. Results go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mwl::cli

#endif  // MWL_CLI_HPP_

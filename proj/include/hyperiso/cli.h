// Copyright 2026 The hyperiso Authors.
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

#ifndef HYPERISO_CLI_H_
#define HYPERISO_CLI_H_

#include <ostream>

namespace hyperiso {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;           // Success / Isomorphic
inline constexpr int kExitNegative = 1;     // NonIsomorphic
inline constexpr int kExitInconclusive = 2; // Ambiguous / Inconclusive
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitGuard = 70;

// Entry point of the `hyperiso` tool: gen, canon, iso, regprofile, oracle
// and exp subcommands.
int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hyperiso

#endif  // HYPERISO_CLI_H_

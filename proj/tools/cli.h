// Copyright 2026 The vbent Authors.
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

#ifndef VBENT_TOOLS_CLI_H_
#define VBENT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace vbent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // bad arguments or unparsable input
inline constexpr int kExitPrecondition = 2;  // parameters violate a stated condition
inline constexpr int kExitMismatch = 3;      // a predicted value was not reproduced

// Runs the tool on args (args[0] is the program name).
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbent::cli

#endif  // VBENT_TOOLS_CLI_H_

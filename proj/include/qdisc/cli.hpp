// Copyright 2026 The qdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDISC_CLI_HPP
#define QDISC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qdisc {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitVerify = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdisc

#endif  // QDISC_CLI_HPP

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

#ifndef QDISC_VERIFY_HPP
#define QDISC_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qdisc {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 13;

/// Runs the listed criteria (all when empty) in ascending order.
std::vector<CriterionOutcome> run_acceptance(const std::vector<int>& only = {});

/// One "PASS"/"FAIL" line per criterion followed by a summary line.
void print_acceptance(std::ostream& os, const std::vector<CriterionOutcome>& outcomes);

bool all_passed(const std::vector<CriterionOutcome>& outcomes);

}  // namespace qdisc

#endif  // QDISC_VERIFY_HPP

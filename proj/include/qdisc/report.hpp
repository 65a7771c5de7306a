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

#ifndef QDISC_REPORT_HPP
#define QDISC_REPORT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qdisc {

/// 12 significant digits; "inf", "-inf" and "nan" spelled out.
std::string format_number(double x);

/// Shortest decimal that round-trips to the same double.
std::string format_exact(double x);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  /// Comment lines start with '#'; the header row is always written.
  void write_csv(std::ostream& os, const std::vector<std::string>& comments = {}) const;
  void write_text(std::ostream& os, const std::vector<std::string>& comments = {}) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// "# key = value" lines.
std::vector<std::string> echo_lines(const ConfigEcho& echo);

}  // namespace qdisc

#endif  // QDISC_REPORT_HPP

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

#include "qdisc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

std::string format_with(const char* fmt, double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

void write_comments(std::ostream& os, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << (c.starts_with('#') ? "" : "# ") << c << '\n';
}

}  // namespace

std::string format_number(double x) { return format_with("%.12g", x); }

std::string format_exact(double x) {
  if (!std::isfinite(x)) return format_number(x);
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw DomainError("table row width does not match header");
  rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os, const std::vector<std::string>& comments) const {
  write_comments(os, comments);
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void Table::write_text(std::ostream& os, const std::vector<std::string>& comments) const {
  write_comments(os, comments);
  std::vector<std::size_t> width(header_.size());
  for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

std::vector<std::string> echo_lines(const ConfigEcho& echo) {
  std::vector<std::string> out;
  out.reserve(echo.size());
  for (const auto& [k, v] : echo) out.push_back("# " + k + " = " + v);
  return out;
}

}  // namespace qdisc

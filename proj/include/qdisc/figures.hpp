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

#ifndef QDISC_FIGURES_HPP
#define QDISC_FIGURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qdisc/circuits.hpp"
#include "qdisc/report.hpp"

namespace qdisc {

struct FigureOptions {
  std::int64_t n_total = 10000;  // figure 3
  int max_copies = 4;            // figure 8
  int cnot_layers = 6;           // figure 8
  OptimizerConfig optimizer{};   // figure 8
  int phi_points = 181;          // figure 7
};

struct FigureData {
  std::vector<std::string> notes;  // column descriptions
  Table table;
};

inline constexpr int kFirstFigure = 2;
inline constexpr int kLastFigure = 9;

/// Throws DomainError for an unsupported figure number.
FigureData figure_data(int figure, const FigureOptions& options = {});

}  // namespace qdisc

#endif  // QDISC_FIGURES_HPP

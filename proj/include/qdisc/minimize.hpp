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

#ifndef QDISC_MINIMIZE_HPP
#define QDISC_MINIMIZE_HPP

#include <functional>

namespace qdisc {

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
};

struct ScanOptions {
  int scan_points = 721;
  double x_tol = 1e-6;
  /// Number of distinct scan-grid local minima handed to Brent refinement.
  int refine_candidates = 2;
  /// Treat f as periodic with period hi - lo; the result is wrapped into [lo, hi).
  bool periodic = false;
};

/// Global 1-D minimization: evaluate f on a uniform grid over [lo, hi], then
/// refine the best grid minima with Brent's method inside their neighbouring
/// grid cells. Deterministic for a deterministic f.
Minimum1D scan_and_refine(const std::function<double(double)>& f, double lo, double hi,
                          const ScanOptions& opts = {});

}  // namespace qdisc

#endif  // QDISC_MINIMIZE_HPP

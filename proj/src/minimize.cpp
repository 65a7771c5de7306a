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

#include "qdisc/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "qdisc/errors.hpp"

namespace qdisc {

Minimum1D scan_and_refine(const std::function<double(double)>& f, double lo, double hi,
                          const ScanOptions& opts) {
  if (opts.scan_points < 3 || !(hi > lo)) {
    throw DomainError("scan_and_refine needs hi > lo and at least 3 scan points");
  }
  const int n = opts.scan_points;
  const double step = (hi - lo) / (n - 1);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = f(lo + k * step);

  // Local minima of the grid; on a periodic grid the last point duplicates the first.
  const int distinct = opts.periodic ? n - 1 : n;
  auto at = [&](int k) {
    if (opts.periodic) k = ((k % distinct) + distinct) % distinct;
    return values[static_cast<std::size_t>(k)];
  };
  std::vector<int> minima;
  for (int k = 0; k < distinct; ++k) {
    const bool left_ok = (!opts.periodic && k == 0) || at(k) <= at(k - 1);
    const bool right_ok = (!opts.periodic && k == n - 1) || at(k) <= at(k + 1);
    if (left_ok && right_ok) minima.push_back(k);
  }
  std::stable_sort(minima.begin(), minima.end(), [&](int a, int b) { return at(a) < at(b); });
  if (minima.empty()) minima.push_back(0);  // constant functions on a periodic grid

  Minimum1D best{lo + minima.front() * step, at(minima.front())};
  const int bits = std::max(
      8, static_cast<int>(std::ceil(-std::log2(opts.x_tol / std::max(1.0, std::abs(hi))))) + 2);
  const int candidates = std::min<int>(opts.refine_candidates, static_cast<int>(minima.size()));
  for (int c = 0; c < candidates; ++c) {
    const int k = minima[static_cast<std::size_t>(c)];
    double a = lo + (k - 1) * step;
    double b = lo + (k + 1) * step;
    if (!opts.periodic) {
      a = std::max(a, lo);
      b = std::min(b, hi);
    }
    std::uintmax_t max_iter = 200;
    const auto [x, fx] = boost::math::tools::brent_find_minima(
        [&](double t) { return f(t); }, a, b, std::min(bits, 26), max_iter);
    if (fx < best.value) best = {x, fx};
  }
  if (opts.periodic) {
    const double period = hi - lo;
    best.x = lo + std::fmod(std::fmod(best.x - lo, period) + period, period);
  }
  return best;
}

}  // namespace qdisc

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

#ifndef QDISC_CIRCUITS_HPP
#define QDISC_CIRCUITS_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qdisc/matops.hpp"
#include "qdisc/states.hpp"
#include "qdisc/strategies.hpp"

namespace qdisc {

/// Alternating single-qubit and CNOT layers; CNOT layer l acts on the pairs
/// (2k + l mod n, 2k + 1 + l mod n). Qubit 0 is the most significant bit.
struct CircuitAnsatz {
  int n_qubits = 1;
  int n_cnot_layers = 0;
  std::vector<std::vector<std::pair<int, int>>> cnot_pairs;  // (control, target) per layer

  std::size_t angle_count() const {
    return 3 * static_cast<std::size_t>(n_qubits) * static_cast<std::size_t>(n_cnot_layers + 1);
  }
};

struct OptimizerConfig {
  int hops = 50;
  int max_iters_per_hop = 500;
  std::uint64_t seed = 0;
  double perturbation_scale = 0.5;
  double convergence_tol = 1e-9;
};

/// A single qubit forces zero CNOT layers.
CircuitAnsatz build_brickwork(int n_qubits, int n_cnot_layers);

/// Single-qubit gate Rz(a) Ry(b) Rz(c), identity at zero angles. Angles are
/// ordered by layer, then qubit, then (a, b, c).
ComplexMatrix circuit_unitary(const CircuitAnsatz& ansatz, const std::vector<double>& angles);

/// Pi_k = U^dagger |k><k| U for every basis state k.
std::vector<ComplexMatrix> circuit_povm(const CircuitAnsatz& ansatz,
                                        const std::vector<double>& angles);

/// Circuit measurement on the first m - n_final copies, then the Helstrom
/// measurement on the remaining n_final copies at each posterior.
StrategyResult evaluate_split_strategy(const StatePair& pair, int m, int n_final,
                                       const CircuitAnsatz& ansatz,
                                       const std::vector<double>& angles,
                                       std::size_t dim_cap = kDefaultDimensionCap);

struct HopRecord {
  int hop = 0;
  int iterations = 0;
  double best_value = 0.0;
};

struct SplitOptimum {
  std::vector<double> angles;
  StrategyResult result;
  std::vector<HopRecord> trace;
};

SplitOptimum optimize_split_strategy(const StatePair& pair, int m, int n_final,
                                     const CircuitAnsatz& ansatz, const OptimizerConfig& config,
                                     std::size_t dim_cap = kDefaultDimensionCap);

/// Writes the trace as CSV with header hop,iterations,best_value.
void write_trace_csv(std::ostream& os, const std::vector<HopRecord>& trace);

}  // namespace qdisc

#endif  // QDISC_CIRCUITS_HPP

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

#include "qdisc/circuits.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "qdisc/bounds.hpp"
#include "qdisc/errors.hpp"

namespace qdisc {
namespace {

using Objective = std::function<double(const std::vector<double>&)>;

constexpr double kFdStep = 1e-6;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::Matrix2cd zyz_gate(double a, double b, double c) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd rz_a = Eigen::Matrix2cd::Zero();
  rz_a(0, 0) = std::exp(-i * (a / 2.0));
  rz_a(1, 1) = std::exp(i * (a / 2.0));
  Eigen::Matrix2cd rz_c = Eigen::Matrix2cd::Zero();
  rz_c(0, 0) = std::exp(-i * (c / 2.0));
  rz_c(1, 1) = std::exp(i * (c / 2.0));
  Eigen::Matrix2cd ry;
  ry << std::cos(b / 2.0), -std::sin(b / 2.0), std::sin(b / 2.0), std::cos(b / 2.0);
  return rz_a * ry * rz_c;
}

std::size_t bit_of(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

// u <- (gate on qubit) u
void apply_single(ComplexMatrix& u, int n_qubits, int qubit, const Eigen::Matrix2cd& g) {
  const std::size_t bit = bit_of(n_qubits, qubit);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    const std::size_t r1 = r0 | bit;
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const Complex x0 = u(r0, c);
      const Complex x1 = u(r1, c);
      u(r0, c) = g(0, 0) * x0 + g(0, 1) * x1;
      u(r1, c) = g(1, 0) * x0 + g(1, 1) * x1;
    }
  }
}

void apply_cnot(ComplexMatrix& u, int n_qubits, int control, int target) {
  const std::size_t cbit = bit_of(n_qubits, control);
  const std::size_t tbit = bit_of(n_qubits, target);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & cbit) && !(r & tbit)) u.row(static_cast<Eigen::Index>(r)).swap(u.row(static_cast<Eigen::Index>(r | tbit)));
  }
}

void check_angles(const CircuitAnsatz& ansatz, const std::vector<double>& angles) {
  if (angles.size() != ansatz.angle_count()) {
    std::ostringstream msg;
    msg << "ansatz needs " << ansatz.angle_count() << " angles, got " << angles.size();
    throw AngleCountMismatch(msg.str());
  }
}

void check_split(const StatePair& pair, int m, int n_final, const CircuitAnsatz& ansatz) {
  if (pair.rho_plus.dim() != 2) throw DomainError("split strategy needs single-qubit states");
  if (n_final < 1 || n_final > m) throw DomainError("split strategy needs 1 <= n_final <= m");
  if (n_final < m && ansatz.n_qubits != m - n_final) {
    throw DomainError("ansatz width must equal the number of first-stage copies");
  }
}

std::string bitstring(std::size_t k, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if (k & bit_of(width, b)) s[static_cast<std::size_t>(b)] = '1';
  }
  return s;
}

// Cached tensor powers for repeated evaluation inside the optimizer.
class SplitObjective {
 public:
  SplitObjective(const StatePair& pair, int m, int n_final, const CircuitAnsatz& ansatz,
                 std::size_t dim_cap)
      : ansatz_(ansatz),
        q_(pair.prior_q),
        first_plus_(tensor_power(pair.rho_plus, m - n_final, dim_cap).matrix()),
        first_minus_(tensor_power(pair.rho_minus, m - n_final, dim_cap).matrix()),
        final_plus_(tensor_power(pair.rho_plus, n_final, dim_cap).matrix()),
        final_minus_(tensor_power(pair.rho_minus, n_final, dim_cap).matrix()) {}

  std::pair<Eigen::VectorXd, Eigen::VectorXd> outcome_likelihoods(
      const std::vector<double>& angles) const {
    const ComplexMatrix u = circuit_unitary(ansatz_, angles);
    Eigen::VectorXd pp = (u * first_plus_ * u.adjoint()).diagonal().real().cwiseMax(0.0);
    Eigen::VectorXd pm = (u * first_minus_ * u.adjoint()).diagonal().real().cwiseMax(0.0);
    return {pp, pm};
  }

  double operator()(const std::vector<double>& angles) const {
    const auto [pp, pm] = outcome_likelihoods(angles);
    double total = 0.0;
    for (Eigen::Index k = 0; k < pp.size(); ++k) {
      const double prob = q_ * pp[k] + (1.0 - q_) * pm[k];
      if (prob < kZeroBranchTol) continue;
      total += prob * helstrom_error(final_plus_, final_minus_, q_ * pp[k] / prob);
    }
    return total;
  }

  StrategyResult report(const std::vector<double>& angles) const {
    const auto [pp, pm] = outcome_likelihoods(angles);
    StrategyResult out;
    for (Eigen::Index k = 0; k < pp.size(); ++k) {
      append_helstrom_branch(out, bitstring(static_cast<std::size_t>(k), ansatz_.n_qubits), q_,
                             pp[k], pm[k], final_plus_, final_minus_);
    }
    return out;
  }

 private:
  CircuitAnsatz ansatz_;
  double q_;
  ComplexMatrix first_plus_;
  ComplexMatrix first_minus_;
  ComplexMatrix final_plus_;
  ComplexMatrix final_minus_;
};

StrategyResult no_first_stage(const StatePair& pair, int m, std::size_t dim_cap) {
  const ComplexMatrix a = tensor_power(pair.rho_plus, m, dim_cap).matrix();
  const ComplexMatrix b = tensor_power(pair.rho_minus, m, dim_cap).matrix();
  const HelstromMeasurement hm = helstrom_measurement(a, b, pair.prior_q);
  StrategyResult out;
  out.error_probability = helstrom_general(pair, m, dim_cap);
  out.p_minus_given_plus = hm.p_minus_given_plus;
  out.p_plus_given_minus = hm.p_plus_given_minus;
  out.branches.push_back({"", 1.0, pair.prior_q, out.error_probability});
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct GslContext {
  const Objective* f;
  std::vector<double> x;
};

void load(GslContext& ctx, const gsl_vector* v) {
  for (std::size_t i = 0; i < ctx.x.size(); ++i) ctx.x[i] = gsl_vector_get(v, i);
}

double gsl_value(const gsl_vector* v, void* params) {
  auto& ctx = *static_cast<GslContext*>(params);
  load(ctx, v);
  return (*ctx.f)(ctx.x);
}

void gsl_gradient(const gsl_vector* v, void* params, gsl_vector* g) {
  auto& ctx = *static_cast<GslContext*>(params);
  load(ctx, v);
  for (std::size_t i = 0; i < ctx.x.size(); ++i) {
    const double x0 = ctx.x[i];
    ctx.x[i] = x0 + kFdStep;
    const double up = (*ctx.f)(ctx.x);
    ctx.x[i] = x0 - kFdStep;
    const double down = (*ctx.f)(ctx.x);
    ctx.x[i] = x0;
    gsl_vector_set(g, i, (up - down) / (2.0 * kFdStep));
  }
}

void gsl_value_gradient(const gsl_vector* v, void* params, double* f, gsl_vector* g) {
  *f = gsl_value(v, params);
  gsl_gradient(v, params, g);
}

struct LocalResult {
  std::vector<double> x;
  double value;
  int iterations;
};

LocalResult local_descent(const Objective& f, const std::vector<double>& start, int max_iters,
                          double tol) {
  const std::size_t n = start.size();
  GslContext ctx{&f, std::vector<double>(n)};
  gsl_multimin_function_fdf fn{&gsl_value, &gsl_gradient, &gsl_value_gradient, n, &ctx};

  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x0(gsl_vector_alloc(n),
                                                              &gsl_vector_free);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x0.get(), i, start[i]);
  std::unique_ptr<gsl_multimin_fdfminimizer, decltype(&gsl_multimin_fdfminimizer_free)> s(
      gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, n),
      &gsl_multimin_fdfminimizer_free);
  gsl_multimin_fdfminimizer_set(s.get(), &fn, x0.get(), 0.1, 0.1);

  int iter = 0;
  double prev = s->f;
  while (iter < max_iters) {
    ++iter;
    if (gsl_multimin_fdfminimizer_iterate(s.get()) != GSL_SUCCESS) break;
    if (std::abs(prev - s->f) < tol) break;
    prev = s->f;
  }
  LocalResult out{std::vector<double>(n), s->f, iter};
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  return out;
}

}  // namespace

CircuitAnsatz build_brickwork(int n_qubits, int n_cnot_layers) {
  if (n_qubits < 1) throw DomainError("ansatz needs at least one qubit");
  if (n_cnot_layers < 0) throw DomainError("CNOT layer count must be nonnegative");
  CircuitAnsatz ansatz;
  ansatz.n_qubits = n_qubits;
  ansatz.n_cnot_layers = n_qubits == 1 ? 0 : n_cnot_layers;
  for (int layer = 0; layer < ansatz.n_cnot_layers; ++layer) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n_qubits / 2; ++k) {
      pairs.emplace_back((2 * k + layer) % n_qubits, (2 * k + 1 + layer) % n_qubits);
    }
    ansatz.cnot_pairs.push_back(std::move(pairs));
  }
  return ansatz;
}

ComplexMatrix circuit_unitary(const CircuitAnsatz& ansatz, const std::vector<double>& angles) {
  check_angles(ansatz, angles);
  const int n = ansatz.n_qubits;
  ComplexMatrix u = identity(Eigen::Index{1} << n);
  std::size_t next = 0;
  for (int layer = 0; layer <= ansatz.n_cnot_layers; ++layer) {
    for (int qubit = 0; qubit < n; ++qubit, next += 3) {
      apply_single(u, n, qubit, zyz_gate(angles[next], angles[next + 1], angles[next + 2]));
    }
    if (layer < ansatz.n_cnot_layers) {
      for (const auto& [control, target] : ansatz.cnot_pairs[static_cast<std::size_t>(layer)]) {
        apply_cnot(u, n, control, target);
      }
    }
  }
  return u;
}

std::vector<ComplexMatrix> circuit_povm(const CircuitAnsatz& ansatz,
                                        const std::vector<double>& angles) {
  const ComplexMatrix u = circuit_unitary(ansatz, angles);
  std::vector<ComplexMatrix> povm;
  povm.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    povm.push_back(u.row(k).adjoint() * u.row(k));
  }
  return povm;
}

StrategyResult evaluate_split_strategy(const StatePair& pair, int m, int n_final,
                                       const CircuitAnsatz& ansatz,
                                       const std::vector<double>& angles, std::size_t dim_cap) {
  check_split(pair, m, n_final, ansatz);
  if (n_final == m) return no_first_stage(pair, m, dim_cap);
  check_angles(ansatz, angles);
  return SplitObjective(pair, m, n_final, ansatz, dim_cap).report(angles);
}

SplitOptimum optimize_split_strategy(const StatePair& pair, int m, int n_final,
                                     const CircuitAnsatz& ansatz, const OptimizerConfig& config,
                                     std::size_t dim_cap) {
  check_split(pair, m, n_final, ansatz);
  if (config.hops < 1 || config.max_iters_per_hop < 1 || !(config.perturbation_scale > 0.0) ||
      !(config.convergence_tol > 0.0)) {
    throw DomainError("optimizer settings must be positive");
  }
  SplitOptimum best;
  if (n_final == m) {
    best.result = no_first_stage(pair, m, dim_cap);
    return best;
  }
  const SplitObjective objective(pair, m, n_final, ansatz, dim_cap);
  const Objective f = [&objective](const std::vector<double>& x) { return objective(x); };
  const std::size_t n = ansatz.angle_count();
  gsl_set_error_handler_off();

  double best_value = std::numeric_limits<double>::infinity();
  for (int hop = 0; hop < config.hops; ++hop) {
    std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(hop))));
    std::vector<double> start(n);
    for (std::size_t i = 0; i < n; ++i) {
      start[i] = hop == 0 ? kTwoPi * unit_double(rng)
                          : best.angles[i] + config.perturbation_scale * (2.0 * unit_double(rng) - 1.0);
    }
    LocalResult local = local_descent(f, start, config.max_iters_per_hop, config.convergence_tol);
    if (local.value < best_value) {
      best_value = local.value;
      best.angles = std::move(local.x);
    }
    best.trace.push_back({hop, local.iterations, best_value});
  }
  best.result = objective.report(best.angles);
  return best;
}

void write_trace_csv(std::ostream& os, const std::vector<HopRecord>& trace) {
  os << "hop,iterations,best_value\n";
  char buf[64];
  for (const HopRecord& r : trace) {
    std::snprintf(buf, sizeof buf, "%.12g", r.best_value);
    os << r.hop << ',' << r.iterations << ',' << buf << '\n';
  }
}

}  // namespace qdisc

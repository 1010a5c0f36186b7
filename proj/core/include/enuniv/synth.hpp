// Copyright 2026 The enuniv Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "enuniv/linalg.hpp"
#include "enuniv/pauli.hpp"
#include "enuniv/rep.hpp"

namespace enuniv {

/// exp(i t H) for a dense Hermitian H (eigendecomposition).
UnitaryMatrix expm_hermitian(const CMatrix& h, double t);

/// exp(i t h). Throws std::length_error above the dense limit.
UnitaryMatrix expm_pulse(const HermitianOp& h, double t);

enum class Metric { kTrace, kOperator, kPhaseInvariant };

/// Parses "trace", "operator" or "phase". Throws std::invalid_argument.
Metric parse_metric(std::string_view name);
std::string to_string(Metric metric);

/**
 * kTrace: sqrt(1 - Re Tr(U^dagger V) / N).
 * kOperator: largest singular value of U - V.
 * kPhaseInvariant: sqrt(1 - |Tr(U^dagger V)| / N).
 * Throws std::invalid_argument on a size mismatch.
 */
double distance(const UnitaryMatrix& u, const UnitaryMatrix& v, Metric metric);

/// (exp(i alpha a / p) exp(i beta b / p))^p.
UnitaryMatrix trotter_sum(const HermitianOp& a, const HermitianOp& b,
                          double alpha, double beta, int p);

/// (e^{-ia/sqrt p} e^{ib/sqrt p} e^{ia/sqrt p} e^{-ib/sqrt p})^p, which tends
/// to exp([a, b]) = exp(-i bracket(a, b)).
UnitaryMatrix trotter_commutator(const HermitianOp& a, const HermitianOp& b,
                                 int p);

struct Pulse {
  int generator = 0;
  double duration = 0.0;
};

/// Pulses in application order: the first pulse acts first.
struct PulseSequence {
  std::vector<Pulse> pulses;
};

/// Ordered product exp(i t_m H_{k_m}) ... exp(i t_1 H_{k_1}).
UnitaryMatrix realize(const PulseSequence& sequence,
                      const std::vector<CMatrix>& generators);

struct SynthesisOptions {
  int max_pulses = 4;
  double tol = 1e-4;
  std::uint64_t seed = 1;
  int starts = 12;             ///< Random starts per generator ordering.
  int max_iterations = 4000;   ///< Simplex iterations per start.
  double time_budget_s = 300;  ///< Wall-clock cap for the whole search.
};

struct SynthesisResult {
  PulseSequence sequence;
  double distance = 1.0;  ///< Phase-invariant distance on the code.
  bool success = false;
  std::string target;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t orderings_tried = 0;
  std::size_t starts_run = 0;
};

/// Generators restricted to a code. Throws std::invalid_argument if any
/// generator leaks out of the code (leakage >= 1e-9).
std::vector<CMatrix> restricted_generators(
    const std::vector<HermitianOp>& generators, const LogicalCode& code);

/// Target grammar: identity | x | y | z | h | rx:<angle> | ry:<angle> |
/// rz:<angle> | pulse:<k>:<t>. Angles accept decimals and pi, pi/<d>,
/// <c>*pi/<d>. Pulse targets are exp(i t H_k) restricted to the code.
UnitaryMatrix parse_target(std::string_view spec,
                           const std::vector<CMatrix>& restricted, int dim);

/// Searches pulse sequences (no generator repeated back to back) of length
/// 0..max_pulses for `target` on the code, shortest first. Starts run
/// concurrently; the best distance wins, ties broken by ordering and start.
SynthesisResult synthesize_sequence(const UnitaryMatrix& target,
                                    const std::vector<CMatrix>& restricted,
                                    const SynthesisOptions& options = {});

/// Minimizes f from x0 with a Nelder-Mead simplex.
struct SimplexResult {
  RVector x;
  double value = 0.0;
  std::size_t iterations = 0;
};
SimplexResult nelder_mead(const std::function<double(const RVector&)>& f,
                          const RVector& x0, const RVector& step,
                          int max_iterations, double f_target);

}  // namespace enuniv

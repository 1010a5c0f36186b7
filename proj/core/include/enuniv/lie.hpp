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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "enuniv/pauli.hpp"

namespace enuniv {

struct ClosureOptions {
  /// Stop (and flag the basis as not closed) once this many elements exist.
  std::size_t max_dim = std::numeric_limits<std::size_t>::max();
  /// A bracket is accepted as new when its residual after orthogonalization
  /// (relative to its own norm) exceeds this.
  double rank_tol = 1e-9;
};

/// Orthonormal (under hs_inner) basis of a real Lie algebra of Hermitian ops.
struct LieBasis {
  int n = 0;
  std::vector<HermitianOp> elements;
  bool closed = false;
  /// Leading elements that span the generators themselves. They generate the
  /// whole algebra, so commutant computations only need these.
  std::size_t generator_rank = 0;
  /// Smallest residual that was accepted as a new direction.
  double min_accepted_residual = std::numeric_limits<double>::infinity();
  /// Largest residual that was rejected as already in the span.
  double max_rejected_residual = 0.0;
  std::size_t brackets_evaluated = 0;

  [[nodiscard]] std::size_t dim() const { return elements.size(); }
};

/**
 * Smallest real Lie algebra under bracket(a, b) = i[a, b] containing the
 * generators.
 *
 * Worklist closure: every accepted element is bracketed with every generator
 * and the result is orthogonalized against the current basis by two passes of
 * Gram-Schmidt. The resulting span is invariant under ad(g) for each
 * generator, hence equals the generated algebra. Deterministic for a fixed
 * generator order. Throws std::invalid_argument on an empty or
 * mixed-size generator list.
 */
LieBasis close_lie_algebra(std::span<const HermitianOp> generators,
                           const ClosureOptions& options = {});

/// Residual norm of `op` after projection onto span(basis.elements).
double span_residual(const LieBasis& basis, const HermitianOp& op);

/// Orthogonal projection of `op` onto span(basis.elements).
HermitianOp project(const LieBasis& basis, const HermitianOp& op);

/// Family constructor used by growth_function: n -> generator set.
using FamilyBuilder = std::function<std::vector<HermitianOp>(int)>;

struct GrowthSample {
  int n = 0;
  std::size_t dim = 0;
  bool closed = false;
  std::string error;  ///< Non-empty when the closure failed for this n.
};

/// Subsystems growth function g(n) sampled over a range of system sizes.
struct GrowthRecord {
  std::string family;
  std::vector<GrowthSample> samples;
};

GrowthRecord growth_function(const std::string& family_id,
                             const FamilyBuilder& family,
                             std::span<const int> n_range,
                             const ClosureOptions& options = {});

enum class VerdictKind { kNonUniversal, kSuperPolynomial, kInconclusive };

std::string to_string(VerdictKind kind);

/// Per-degree evidence: deviations of the degree-k interpolant (through the
/// first k+1 samples) from each remaining sample, sample - p_k(n).
struct InterpolationFit {
  int degree = 0;
  std::vector<double> deviations;
  bool exact = false;
};

/**
 * Finite-sample non-universality heuristic for a growth record.
 *
 * kNonUniversal(k) is returned for the smallest k <= samples/2 whose
 * interpolant reproduces every remaining sample exactly (exact rational
 * arithmetic). kSuperPolynomial when every candidate interpolant lies strictly
 * below every remaining sample. kInconclusive otherwise.
 */
struct Verdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  int degree = -1;  ///< Fitted degree when kind == kNonUniversal.
  std::vector<GrowthSample> samples;
  std::vector<InterpolationFit> fits;
  static constexpr const char* kNote =
      "finite-sample heuristic: polynomial growth certifies non-universality "
      "only if it persists for all n";
};

/// Throws std::invalid_argument for fewer than 4 samples or failed samples.
Verdict universality_verdict(const GrowthRecord& record);

}  // namespace enuniv

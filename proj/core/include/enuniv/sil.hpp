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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "enuniv/angular.hpp"
#include "enuniv/linalg.hpp"

namespace enuniv {

/// One required action SIL |in> = |out> on a 6-spin total-J state.
struct SilConstraint {
  std::string label;
  HalfInt J;
  HalfInt M;
  CVector input;
  CVector output;
};

struct SilSpec {
  std::vector<SilConstraint> constraints;
};

/**
 * The 16 constraints for a data block (spins 1-3) and an ancilla block
 * (spins 4-6) in the trio code: identity on the two coded J=1 multiplets,
 * sign flip on the two J=0 states, and the block swap on the J=2 and J=1
 * multiplets built from a leaked J=3/2 data block.
 */
SilSpec default_sil_spec();

/// Permutation exchanging the first `block` qubits with the next `block`.
CMatrix block_swap(int block);

struct SilSector {
  HalfInt J;
  int n_J = 0;
  int constrained = 0;  ///< Rank of the constraint inputs in this sector.
  CMatrix W;            ///< Action on the multiplicity space.
};

struct SilResult {
  UnitaryMatrix U;
  /// Hermitian G with U = exp(iG), traceless on every multiplicity block.
  CMatrix generator;
  std::vector<SilSector> sectors;
  double consistency_residual = 0.0;
};

/// Throws std::invalid_argument when the constraints are not isometric or do
/// not respect total J.
SilResult build_sil(const SilSpec& spec);

struct SilCase {
  std::string label;
  CVector input;
  CVector expected;
};

/// The eight data (x) ancilla inputs with their required outputs.
std::vector<SilCase> sil_cases();

struct SilReport {
  double unitarity = 0.0;
  std::array<double, 3> commutators{};  ///< ||[U, C_alpha]||_F.
  std::vector<std::string> case_labels;
  std::vector<double> case_residuals;
  std::vector<double> constraint_residuals;

  [[nodiscard]] double worst_case() const;
  [[nodiscard]] bool passes(double tol) const;
};

SilReport verify_sil(const UnitaryMatrix& U,
                     const SilSpec& spec = default_sil_spec());

/// U + eps * R for a seeded Haar-ish random unitary R (sanity path).
UnitaryMatrix perturb(const UnitaryMatrix& U, double eps, std::uint64_t seed);

}  // namespace enuniv

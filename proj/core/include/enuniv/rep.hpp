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
#include <span>
#include <string>
#include <vector>

#include "enuniv/lie.hpp"
#include "enuniv/linalg.hpp"
#include "enuniv/pauli.hpp"

namespace enuniv {

/// Largest qubit count accepted by the dense decomposition routines.
inline constexpr int kDecomposeLimit = 8;

/// One block C^{n_J} (x) C^{d_J} of a decomposition.
struct IsotypicSector {
  int n_J = 0;
  int d_J = 0;
  /// d_J isometries of shape 2^n x n_J. Copy k spans the k-th degeneracy
  /// slice; every generator restricts to the same n_J x n_J matrix on each.
  std::vector<CMatrix> copies;
  double invariance_residual = 0.0;
  double factorization_residual = 0.0;

  /// All n_J * d_J vectors; column k * n_J + m is multiplicity index m of
  /// copy k.
  [[nodiscard]] CMatrix subspace() const;
};

struct DecomposeOptions {
  std::uint64_t seed = 1;
  /// Fresh random draws allowed before giving up.
  int max_draws = 4;
  /// Invariance / factorization acceptance threshold.
  double tol = 1e-9;
};

struct Decomposition {
  int n = 0;
  std::vector<IsotypicSector> sectors;
  std::uint64_t seed = 0;
  int draws_used = 0;
  std::size_t commutant_dim = 0;
  /// Smallest eigenvalue gap separating distinct copies in the last draw.
  double min_gap = 0.0;
};

/**
 * Orthonormal (Frobenius) Hermitian basis of the matrices commuting with all
 * of `generators`. The search is restricted to the commutant of a seeded
 * random combination h of the generators, which is block diagonal in h's
 * eigenbasis.
 */
std::vector<CMatrix> commutant_matrices(const std::vector<CMatrix>& generators,
                                        std::uint64_t seed = 1);

/// Commutant as Pauli operators, orthonormal under hs_inner. Throws
/// std::length_error above the dense limit.
std::vector<HermitianOp> commutant(std::span<const HermitianOp> generators,
                                   std::uint64_t seed = 1);

/**
 * Splits C^{2^n} into isotypic sectors of the algebra spanned by `basis`.
 * Throws std::length_error for n > kDecomposeLimit and std::runtime_error
 * when no draw passes validation.
 */
Decomposition isotypic_decompose(const LieBasis& basis,
                                 const DecomposeOptions& options = {});

/// True iff the restriction to the multiplicity space has real dimension at
/// least n_J^2 - 1 and is irreducible. One-dimensional sectors are trivially
/// true.
bool su_verdict(const IsotypicSector& sector, const LieBasis& basis);

/// Dense intertwiners T with b[i] T = T a[i] for all i (complex nullspace).
std::vector<CMatrix> intertwiners(const std::vector<CMatrix>& a,
                                  const std::vector<CMatrix>& b,
                                  double tol = 1e-9);

enum class CodeFamily { kGeneric, kExchange, kXY };

std::string to_string(CodeFamily family);

/// Encoded qudit: orthonormal codewords over the computational basis.
struct LogicalCode {
  int n = 0;
  CMatrix codewords;  ///< 2^n x dim_L
  CodeFamily family = CodeFamily::kGeneric;
  std::string label;

  [[nodiscard]] int dim_L() const { return static_cast<int>(codewords.cols()); }
};

struct RestrictedOp {
  CMatrix matrix;
  /// ||(1 - P P^dagger) op P||_F.
  double leakage = 0.0;
};

RestrictedOp restrict(const HermitianOp& op, const LogicalCode& code);
RestrictedOp restrict(const CMatrix& op, const LogicalCode& code);

/// Codewords are the columns of copy `degeneracy_index`, each rephased so its
/// first nonzero amplitude is real positive. Throws std::out_of_range.
LogicalCode extract_encoding(const IsotypicSector& sector, int degeneracy_index,
                             CodeFamily family = CodeFamily::kGeneric);

/// Orthonormal (Frobenius) basis of the complex associative algebra generated
/// by `generators` and the identity.
std::vector<CMatrix> associative_algebra(const std::vector<CMatrix>& generators,
                                         double tol = 1e-9);

/// Frobenius distance from `m` to the complex span of orthonormal `basis`.
double matrix_span_residual(const std::vector<CMatrix>& basis,
                            const CMatrix& m);

}  // namespace enuniv

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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enuniv/lie.hpp"
#include "enuniv/pauli.hpp"
#include "enuniv/rep.hpp"

namespace enuniv {

enum class Topology { kAllPairs, kChain };

/// Parses "all" or "chain". Throws std::invalid_argument.
Topology parse_topology(std::string_view name);
std::string to_string(Topology topology);

/// Qubit pairs (0-based, i < j) in lexicographic order.
std::vector<std::pair<int, int>> topology_pairs(int n, Topology topology);

/// E_ij = (I + X_iX_j + Y_iY_j + Z_iZ_j) / 2, the SWAP of qubits i and j.
HermitianOp exchange(int n, int i, int j);
/// A_ij = (X_iX_j + Y_iY_j) / 2.
HermitianOp xy_coupling(int n, int i, int j);
/// C_alpha = sum_i sigma_alpha^i for alpha in {'X','Y','Z'}.
HermitianOp collective(int n, char alpha);
/// S_z = C_z / 2 and the global bit flip X = X_1 X_2 ... X_n.
HermitianOp total_sz(int n);
HermitianOp global_flip(int n);

std::vector<HermitianOp> heisenberg_family(int n, Topology topology);
std::vector<HermitianOp> heisenberg_family(
    int n, const std::vector<std::pair<int, int>>& pairs);
std::vector<HermitianOp> xy_family(int n, Topology topology);
std::vector<HermitianOp> xy_family(
    int n, const std::vector<std::pair<int, int>>& pairs);
/// Z_i on every site and X_iX_{i+1} along the chain.
std::vector<HermitianOp> oprime_family(int n);
std::vector<HermitianOp> collective_family(int n);

/**
 * Three-qubit exchange basis {H_0, H_1, H_2, H_3} built from the couplings
 * sigma_i . sigma_j = 2 E_ij - I. H_0 is the total coupling, H_1 and H_3 are
 * the two orthogonal combinations, and H_2 = bracket(H_1, H_3), so that
 * [H_a, H_b] = i eps_abc H_c.
 */
std::array<HermitianOp, 4> exchange_h_basis();

/// Two-dimensional J = 1/2, J_z = +1/2 code on three qubits.
LogicalCode trio_code();
/// Codewords |100>, |010>, |001> in that order.
LogicalCode xy_qutrit_code();

/**
 * Span of weight-J bitstrings on n qubits, ordered as binary numbers from
 * largest to smallest. For even n and J = n/2 two codes are returned,
 * spanned by |s> + X|s> and |s> - X|s>. Throws std::out_of_range unless
 * 0 <= J <= n/2.
 */
std::vector<LogicalCode> s_n_j_space(int n, int J);

/// Generators of the family a code belongs to, on the code's qubits.
std::vector<HermitianOp> code_generators(const LogicalCode& code);

struct ConjoinedSpace {
  LogicalCode left;
  LogicalCode right;
  /// 2^(n_l + n_r) x (dim_l * dim_r); column a * dim_r + b is left a (x)
  /// right b.
  CMatrix product_basis;
  /// Orthonormal basis of the smallest subspace containing the product space
  /// that is invariant under the joined family generators.
  CMatrix ambient;
  std::string ambient_label;
  double embedding_residual = 0.0;

  [[nodiscard]] int n() const { return left.n + right.n; }
};

/// Throws std::invalid_argument for incompatible code families.
ConjoinedSpace conjoin(const LogicalCode& left, const LogicalCode& right);

struct CouplingWitness {
  HermitianOp op;
  std::string expression;  ///< Nested bracket over generator labels.
  double leakage = 0.0;
  double entangling_residual = 0.0;  ///< Relative distance from local span.
  std::size_t candidates_tried = 0;
  /// True when found by projecting onto the preserving part of the closure
  /// rather than as a single nested bracket.
  bool projected = false;
};

struct WitnessTest {
  double leakage = 0.0;
  double entangling_residual = 0.0;
  bool preserves = false;
  bool entangling = false;
};

/// Preservation (leakage < 1e-9) and entangling (relative least-squares
/// residual against span{I, u (x) I, I (x) v} > 1e-6) checks.
WitnessTest test_witness(const ConjoinedSpace& space, const HermitianOp& op);

/**
 * Searches nested brackets of `generators` (depth <= max_depth) for an
 * element that preserves the product space and couples the blocks. The
 * XY candidate bracket(bracket(A_16, A_15), A_12) is tried first. If no
 * single bracket qualifies and `project_fallback` is set, generators and
 * depth-2 brackets are projected (under hs_inner) onto the subspace of the
 * closure that preserves the product space, and the first entangling
 * projection is returned. Returns std::nullopt when nothing qualifies;
 * `tried` reports the search size.
 */
std::optional<CouplingWitness> coupling_witness(
    const ConjoinedSpace& space, const std::vector<HermitianOp>& generators,
    const std::vector<std::string>& labels, int max_depth = 3,
    std::size_t* tried = nullptr, bool project_fallback = true);

/// Generator labels such as "E_12" or "A_16" (1-based) for a family id.
std::vector<std::string> family_labels(std::string_view family_id, int n);

/// Families by id: heisenberg:all, heisenberg:chain, xy:all, xy:chain,
/// oprime, collective. Throws std::invalid_argument.
FamilyBuilder family_from_id(std::string_view id);

/// Codes by id: code:trio, code:xy-qutrit, code:snj:n=<n>,J=<J>. The last
/// form returns two codes when doubling applies. Throws
/// std::invalid_argument.
std::vector<LogicalCode> code_from_id(std::string_view id);

}  // namespace enuniv

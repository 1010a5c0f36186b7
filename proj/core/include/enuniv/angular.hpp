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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "enuniv/linalg.hpp"

namespace enuniv {

/// Half-integer quantum number stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(int v) { return from_twice(2 * v); }
  static constexpr HalfInt half(int odd) { return from_twice(odd); }

  [[nodiscard]] constexpr int twice() const { return twice_; }
  [[nodiscard]] constexpr double value() const { return 0.5 * twice_; }
  [[nodiscard]] constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "1".
  [[nodiscard]] std::string str() const;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention (Racah formula).
/// Inadmissible arguments give 0.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

/// Total angular momentum eigenvector over the 2^N computational basis
/// (bit 0 = spin up, qubit 0 is the most significant bit).
struct CoupledSpinState {
  int N = 0;
  /// Intermediate total spins; path.back() == J. For a block-coupled state
  /// the path is the concatenation of the two block paths followed by J.
  std::vector<HalfInt> path;
  HalfInt J;
  HalfInt M;
  /// Index of the path among same-J paths in ascending lexicographic order;
  /// -1 for block-coupled states.
  int principal = -1;
  /// Number of spins in the left block of a block-coupled state, else 0.
  int block_split = 0;
  CVector amplitudes;

  /// |N, n, J, M> style label.
  [[nodiscard]] std::string label() const;
};

/// All sequentially coupled states for N spins, ordered by J, then path,
/// then M descending. Throws std::out_of_range unless 1 <= N <= 8.
std::vector<CoupledSpinState> coupled_basis(int N);

/// The state |N, principal, J, M>. Throws std::out_of_range if absent.
CoupledSpinState coupled_state(int N, int principal, HalfInt J, HalfInt M);

/// Number of sequential coupling paths ending at J for N spins.
int path_count(int N, HalfInt J);

/**
 * Expands left (x) right into block-coupled total-J states. Each entry is
 * (<j_l m_l; j_r m_r | J M>, state) where the state couples the full left and
 * right multiplets with Clebsch-Gordan coefficients. Both inputs must come
 * from coupled_basis (or be block-coupled themselves).
 */
std::vector<std::pair<double, CoupledSpinState>> decompose_product(
    const CoupledSpinState& left, const CoupledSpinState& right);

/// Couples the multiplets of `left` and `right` to total (J, M).
CoupledSpinState couple_blocks(const CoupledSpinState& left,
                               const CoupledSpinState& right, HalfInt J,
                               HalfInt M);

/// Same multiplet as `state` at a different projection M.
CoupledSpinState with_projection(const CoupledSpinState& state, HalfInt M);

/// Total spin operators on N spins: S_alpha = C_alpha / 2 (dense).
CMatrix spin_operator(int N, char alpha);
/// S^2 = S_x^2 + S_y^2 + S_z^2 (dense).
CMatrix total_spin_squared(int N);

}  // namespace enuniv

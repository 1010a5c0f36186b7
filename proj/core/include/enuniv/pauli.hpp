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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enuniv/linalg.hpp"

namespace enuniv {

/// Default magnitude below which HermitianOp coefficients are dropped.
inline constexpr double kDropTolerance = 1e-12;

/// Default qubit ceiling for dense matrix realization.
inline constexpr int kDenseLimit = 10;

/// A global phase i^k, k in {0,1,2,3}.
struct Phase {
  std::uint8_t power = 0;

  [[nodiscard]] std::complex<double> value() const;
  friend bool operator==(Phase, Phase) = default;
};

/**
 * An n-qubit tensor product of {I, X, Y, Z}.
 *
 * Stored as two bitmasks (x-part, z-part) so that P = i^{|x&z|} X^x Z^z, which
 * makes Y = iXZ and every string Hermitian. Bit (n-1-k) of each mask refers to
 * qubit k, matching the big-endian computational-basis index used by
 * to_matrix (|q0 q1 ... q_{n-1}>).
 */
class PauliString {
 public:
  static constexpr int kMaxQubits = 31;

  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(int n);
  PauliString(int n, std::uint64_t x, std::uint64_t z);

  /// Parses "IXYZ"-style letters; an optional leading '+' is accepted.
  static PauliString from_letters(std::string_view letters);
  /// Single-site or multi-site string from (site, letter) pairs.
  static PauliString from_sites(
      int n, std::initializer_list<std::pair<int, char>> sites);
  static PauliString from_sites(int n,
                                std::span<const std::pair<int, char>> sites);

  [[nodiscard]] int num_qubits() const { return n_; }
  [[nodiscard]] std::uint64_t x_mask() const { return x_; }
  [[nodiscard]] std::uint64_t z_mask() const { return z_; }
  [[nodiscard]] char letter(int site) const;
  [[nodiscard]] std::string letters() const;
  [[nodiscard]] bool is_identity() const { return (x_ | z_) == 0; }
  [[nodiscard]] int weight() const;

  /// Dense index in [0, 4^n): x | (z << n).
  [[nodiscard]] std::uint64_t index() const { return x_ | (z_ << n_); }
  static PauliString from_index(int n, std::uint64_t index);

  [[nodiscard]] bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (a.x_ != b.x_) return a.x_ <=> b.x_;
    return a.z_ <=> b.z_;
  }

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// p * q == phase * r, exactly.
struct PauliProduct {
  Phase phase;
  PauliString string;
};

/// Throws std::invalid_argument on length mismatch.
PauliProduct pauli_mul(const PauliString& p, const PauliString& q);

/**
 * Real linear combination of n-qubit Pauli strings; Hermitian by construction.
 *
 * Terms are kept sorted by string with duplicates merged and coefficients below
 * the drop tolerance removed.
 */
class HermitianOp {
 public:
  struct Term {
    PauliString string;
    double coeff = 0.0;
  };

  HermitianOp() = default;
  /// The zero operator on n qubits.
  explicit HermitianOp(int n);
  HermitianOp(int n, std::vector<Term> terms, double drop = kDropTolerance);

  static HermitianOp identity(int n, double coeff = 1.0);
  static HermitianOp single(const PauliString& p, double coeff = 1.0);

  [[nodiscard]] int num_qubits() const { return n_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a given string (0 if absent).
  [[nodiscard]] double coeff(const PauliString& p) const;

  /// Hilbert-Schmidt norm sqrt(tr(A^2)/2^n).
  [[nodiscard]] double norm() const;
  /// Sum of |coefficients|; an upper bound on the operator norm.
  [[nodiscard]] double one_norm() const;
  [[nodiscard]] std::string to_string(int precision = 6) const;

  HermitianOp& operator+=(const HermitianOp& other);
  HermitianOp& operator-=(const HermitianOp& other);
  HermitianOp& operator*=(double s);

  friend HermitianOp operator+(HermitianOp a, const HermitianOp& b) {
    return a += b;
  }
  friend HermitianOp operator-(HermitianOp a, const HermitianOp& b) {
    return a -= b;
  }
  friend HermitianOp operator*(double s, HermitianOp a) { return a *= s; }
  friend HermitianOp operator*(HermitianOp a, double s) { return a *= s; }
  friend HermitianOp operator-(HermitianOp a) { return a *= -1.0; }

 private:
  void normalize(double drop);

  int n_ = 0;
  std::vector<Term> terms_;
};

/// i[a, b]; Hermitian, bilinear and antisymmetric.
HermitianOp bracket(const HermitianOp& a, const HermitianOp& b);

/// tr(ab) / 2^n, computed in the Pauli basis.
double hs_inner(const HermitianOp& a, const HermitianOp& b);

/// Dense 2^n x 2^n matrix. Throws if n exceeds `dense_limit`.
CMatrix to_matrix(const HermitianOp& a, int dense_limit = kDenseLimit);
CMatrix to_matrix(const PauliString& p);

/// Pauli decomposition of the Hermitian part of a dense matrix.
HermitianOp from_matrix(const CMatrix& m, double drop = kDropTolerance);

/// Real coefficient vector of `m`'s Hermitian part in the (unnormalized)
/// Pauli basis, indexed by PauliString::index().
RVector pauli_coefficients(const CMatrix& m);

}  // namespace enuniv

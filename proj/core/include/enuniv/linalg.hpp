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
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace enuniv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Dense unitary; U^dagger U = I within numeric tolerance.
using UnitaryMatrix = CMatrix;

/// Half-open index range [begin, end) of a cluster of sorted values.
struct Cluster {
  std::size_t begin = 0;
  std::size_t end = 0;
  [[nodiscard]] std::size_t size() const { return end - begin; }
};

/// Groups ascending `values` into clusters separated by gaps larger than
/// `tol`. Also reports the smallest gap between clusters.
std::vector<Cluster> cluster_sorted(const RVector& values, double tol,
                                    double* smallest_gap = nullptr);

/// Orthonormal basis of the column span (Householder QR with rank cut).
CMatrix orthonormal_columns(const CMatrix& m, double tol = 1e-10);

/// Orthonormal basis of the complement of an orthonormal column set `q`
/// within C^dim, completed from unit vectors e_0, e_1, ... in order.
CMatrix orthonormal_complement(const CMatrix& q, Eigen::Index dim);

/// Nullspace of a Hermitian positive semidefinite Gram matrix: eigenvectors
/// whose eigenvalue is at most `tol`.
RMatrix psd_nullspace(const RMatrix& gram, double tol);

/// Rescales each column by a phase so that its first entry with magnitude
/// above `tol` is real and positive.
void fix_column_phases(CMatrix& m, double tol = 1e-10);

/// Frobenius norm of (I - QQ^dagger) v for orthonormal Q.
double out_of_span_norm(const CMatrix& q, const CMatrix& v);

/// Kronecker product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Independent sub-seed for stream `stream` of a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Standard normal samples.
RVector random_gaussian(Eigen::Index n, std::mt19937_64& rng);

/// Unitary residual ||U^dagger U - I||_F.
double unitarity_residual(const CMatrix& u);

}  // namespace enuniv

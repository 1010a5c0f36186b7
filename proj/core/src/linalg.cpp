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

#include "enuniv/linalg.hpp"

#include <cmath>
#include <limits>

namespace enuniv {

std::vector<Cluster> cluster_sorted(const RVector& values, double tol,
                                    double* smallest_gap) {
  std::vector<Cluster> out;
  double gap_min = std::numeric_limits<double>::infinity();
  const auto len = static_cast<std::size_t>(values.size());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    if (i == len) {
      out.push_back({start, i});
      break;
    }
    const double gap = values(static_cast<Eigen::Index>(i)) -
                       values(static_cast<Eigen::Index>(i - 1));
    if (gap > tol) {
      out.push_back({start, i});
      start = i;
      gap_min = std::min(gap_min, gap);
    }
  }
  if (smallest_gap != nullptr) *smallest_gap = gap_min;
  return out;
}

CMatrix orthonormal_columns(const CMatrix& m, double tol) {
  if (m.cols() == 0) return CMatrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<CMatrix> qr(m);
  qr.setThreshold(tol);
  const Eigen::Index rank = qr.rank();
  CMatrix q = qr.householderQ() * CMatrix::Identity(m.rows(), rank);
  return q;
}

CMatrix orthonormal_complement(const CMatrix& q, Eigen::Index dim) {
  CMatrix basis = q;
  std::vector<CVector> added;
  for (Eigen::Index i = 0; i < dim && basis.cols() < dim; ++i) {
    CVector v = CVector::Unit(dim, i);
    for (int pass = 0; pass < 2; ++pass) {
      v -= basis * (basis.adjoint() * v);
    }
    const double nv = v.norm();
    if (nv > 1e-8) {
      v /= nv;
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = v;
      added.push_back(v);
    }
  }
  CMatrix out(dim, static_cast<Eigen::Index>(added.size()));
  for (std::size_t k = 0; k < added.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = added[k];
  }
  return out;
}

RMatrix psd_nullspace(const RMatrix& gram, double tol) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(gram);
  const RVector& ev = es.eigenvalues();
  Eigen::Index count = 0;
  while (count < ev.size() && ev(count) <= tol) ++count;
  return es.eigenvectors().leftCols(count);
}

void fix_column_phases(CMatrix& m, double tol) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double a = std::abs(m(r, c));
      if (a > tol) {
        m.col(c) *= std::conj(m(r, c)) / a;
        m(r, c) = Complex(m(r, c).real(), 0.0);
        break;
      }
    }
  }
}

double out_of_span_norm(const CMatrix& q, const CMatrix& v) {
  return (v - q * (q.adjoint() * v)).norm();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RVector random_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  RVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

double unitarity_residual(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).norm();
}

}  // namespace enuniv

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

#include "enuniv/rep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace enuniv {
namespace {

constexpr double kSignificant = 1e-9;
constexpr double kEigenClusterTol = 1e-6;
constexpr double kCopyGapTol = 1e-8;

// Sparse Hermitian basis element inside one eigen-block: entries (row, col,
// value) in h's eigenbasis.
struct BlockElement {
  struct Entry {
    Eigen::Index r, c;
    Complex v;
  };
  std::vector<Entry> entries;
};

std::vector<BlockElement> hermitian_block_basis(
    const std::vector<Cluster>& clusters) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<BlockElement> out;
  for (const auto& cl : clusters) {
    const auto b = static_cast<Eigen::Index>(cl.begin);
    const auto e = static_cast<Eigen::Index>(cl.end);
    for (Eigen::Index a = b; a < e; ++a) {
      out.push_back({{{a, a, 1.0}}});
      for (Eigen::Index c = a + 1; c < e; ++c) {
        out.push_back({{{a, c, s}, {c, a, s}}});
        out.push_back({{{a, c, Complex(0, s)}, {c, a, Complex(0, -s)}}});
      }
    }
  }
  return out;
}

// [E, g] for a sparse E, written into `out` (dense, pre-sized).
void sparse_commutator(const BlockElement& e, const CMatrix& g, CMatrix& out) {
  out.setZero();
  for (const auto& t : e.entries) {
    out.row(t.r) += t.v * g.row(t.c);
    out.col(t.c) -= t.v * g.col(t.r);
  }
}

std::vector<CMatrix> to_matrices(const LieBasis& basis, std::size_t count) {
  std::vector<CMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(to_matrix(basis.elements[i]));
  }
  return out;
}

std::vector<CMatrix> generator_matrices(const LieBasis& basis) {
  const std::size_t r =
      basis.generator_rank > 0 ? basis.generator_rank : basis.dim();
  return to_matrices(basis, r);
}

// First row index whose row norm is significant.
Eigen::Index first_significant_row(const CMatrix& w) {
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    if (w.row(i).norm() > 1e-6) return i;
  }
  return w.rows();
}

std::vector<CMatrix> restrict_all(const std::vector<CMatrix>& gens,
                                  const CMatrix& w) {
  std::vector<CMatrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(w.adjoint() * g * w);
  return out;
}

double invariance_residual(const std::vector<CMatrix>& gens, const CMatrix& w) {
  double worst = 0.0;
  for (const auto& g : gens) {
    const CMatrix gw = g * w;
    worst = std::max(worst, (gw - w * (w.adjoint() * gw)).norm());
  }
  return worst;
}

// Orthonormal basis of span{P e_i} in index order, P = W W^dagger.
CMatrix canonical_copy_basis(const CMatrix& w) {
  const Eigen::Index dim = w.rows();
  const Eigen::Index k = w.cols();
  CMatrix out(dim, k);
  Eigen::Index filled = 0;
  for (Eigen::Index i = 0; i < dim && filled < k; ++i) {
    CVector v = w * w.row(i).adjoint();
    for (int pass = 0; pass < 2; ++pass) {
      v -= out.leftCols(filled) * (out.leftCols(filled).adjoint() * v);
    }
    const double nv = v.norm();
    if (nv > 1e-6) out.col(filled++) = v / nv;
  }
  if (filled != k) {
    throw std::runtime_error("isotypic_decompose: copy basis is rank deficient");
  }
  fix_column_phases(out, 1e-9);
  return out;
}

// One candidate draw; returns an empty vector when validation fails.
struct DrawResult {
  std::vector<CMatrix> copies;
  double min_gap = std::numeric_limits<double>::infinity();
  std::size_t commutant_dim = 0;
  std::string failure;
};

DrawResult draw_copies(const std::vector<CMatrix>& gens, Eigen::Index dim,
                       std::uint64_t seed, double tol) {
  DrawResult result;
  std::mt19937_64 rng(seed);
  const auto comm = commutant_matrices(gens, derive_seed(seed, 0));
  result.commutant_dim = comm.size();
  const auto m = static_cast<Eigen::Index>(comm.size());

  // Diagonal elements of the commutant split the basis into classes.
  RMatrix off_gram = RMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    CMatrix oi = comm[i];
    oi.diagonal().setZero();
    for (Eigen::Index j = i; j < m; ++j) {
      CMatrix oj = comm[j];
      oj.diagonal().setZero();
      off_gram(i, j) = off_gram(j, i) =
          (oi.adjoint() * oj).trace().real();
    }
  }
  const RMatrix diag_null = psd_nullspace(off_gram, 1e-12);
  RVector zdiag = RVector::Zero(dim);
  if (diag_null.cols() > 0) {
    const RVector coeffs = diag_null * random_gaussian(diag_null.cols(), rng);
    for (Eigen::Index i = 0; i < m; ++i) {
      zdiag += coeffs(i) * comm[i].diagonal().real();
    }
    const double scale = zdiag.cwiseAbs().maxCoeff();
    if (scale > 0) zdiag /= scale;
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return zdiag(a) < zdiag(b); });
  RVector sorted(dim);
  for (Eigen::Index i = 0; i < dim; ++i) sorted(i) = zdiag(order[i]);
  const auto classes = cluster_sorted(sorted, kCopyGapTol);

  for (const auto& cl : classes) {
    std::vector<Eigen::Index> idx(order.begin() + cl.begin,
                                  order.begin() + cl.end);
    std::sort(idx.begin(), idx.end());
    const auto s = static_cast<Eigen::Index>(idx.size());
    const RVector r = random_gaussian(m, rng);
    CMatrix y = CMatrix::Zero(s, s);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (Eigen::Index a = 0; a < s; ++a) {
        for (Eigen::Index b = 0; b < s; ++b) {
          y(a, b) += r(k) * comm[k](idx[a], idx[b]);
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(y);
    RVector ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    ev /= scale;
    double gap = std::numeric_limits<double>::infinity();
    const auto groups = cluster_sorted(ev, kCopyGapTol, &gap);
    result.min_gap = std::min(result.min_gap, gap);
    for (const auto& gr : groups) {
      const auto width = static_cast<Eigen::Index>(gr.size());
      CMatrix w = CMatrix::Zero(dim, width);
      for (Eigen::Index a = 0; a < s; ++a) {
        w.row(idx[a]) =
            es.eigenvectors().block(a, static_cast<Eigen::Index>(gr.begin), 1,
                                    width);
      }
      const double inv = invariance_residual(gens, w);
      if (inv > tol) {
        std::ostringstream msg;
        msg << "candidate copy not invariant (residual " << inv << ")";
        result.failure = msg.str();
        result.copies.clear();
        return result;
      }
      const auto restricted = restrict_all(gens, w);
      if (intertwiners(restricted, restricted).size() != 1) {
        result.failure = "candidate copy is reducible";
        result.copies.clear();
        return result;
      }
      result.copies.push_back(std::move(w));
    }
  }
  return result;
}

}  // namespace

CMatrix IsotypicSector::subspace() const {
  if (copies.empty()) return {};
  CMatrix out(copies.front().rows(),
              static_cast<Eigen::Index>(n_J) * static_cast<Eigen::Index>(d_J));
  for (int k = 0; k < d_J; ++k) {
    out.middleCols(static_cast<Eigen::Index>(k) * n_J, n_J) = copies[k];
  }
  return out;
}

std::vector<CMatrix> commutant_matrices(const std::vector<CMatrix>& generators,
                                        std::uint64_t seed) {
  if (generators.empty()) {
    throw std::invalid_argument("commutant: empty generator list");
  }
  const Eigen::Index dim = generators.front().rows();
  std::mt19937_64 rng(seed);
  const RVector r =
      random_gaussian(static_cast<Eigen::Index>(generators.size()), rng);
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    h += r(static_cast<Eigen::Index>(i)) * generators[i];
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CMatrix& v = es.eigenvectors();
  const auto clusters = cluster_sorted(es.eigenvalues(), kEigenClusterTol);
  const auto params = hermitian_block_basis(clusters);
  const auto p = static_cast<Eigen::Index>(params.size());

  RMatrix gram = RMatrix::Zero(p, p);
  CMatrix cols(dim * dim, p);
  CMatrix scratch(dim, dim);
  for (const auto& g : generators) {
    const CMatrix gt = v.adjoint() * g * v;
    for (Eigen::Index k = 0; k < p; ++k) {
      sparse_commutator(params[k], gt, scratch);
      cols.col(k) = scratch.reshaped();
    }
    gram.noalias() += (cols.adjoint() * cols).real();
  }
  const double scale = std::max(1.0, gram.diagonal().maxCoeff());
  const RMatrix null = psd_nullspace(gram, 1e-12 * scale);

  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(null.cols()));
  for (Eigen::Index q = 0; q < null.cols(); ++q) {
    CMatrix b = CMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < p; ++k) {
      const double c = null(k, q);
      if (c == 0.0) continue;
      for (const auto& t : params[k].entries) b(t.r, t.c) += c * t.v;
    }
    CMatrix m = v * b * v.adjoint();
    m = 0.5 * (m + m.adjoint()).eval();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<HermitianOp> commutant(std::span<const HermitianOp> generators,
                                   std::uint64_t seed) {
  if (generators.empty()) {
    throw std::invalid_argument("commutant: empty generator list");
  }
  std::vector<CMatrix> mats;
  for (const auto& g : generators) mats.push_back(to_matrix(g));
  const auto comm = commutant_matrices(mats, seed);
  const double scale = std::sqrt(static_cast<double>(mats.front().rows()));
  std::vector<HermitianOp> out;
  out.reserve(comm.size());
  for (const auto& c : comm) out.push_back(from_matrix(c * scale));
  return out;
}

std::vector<CMatrix> intertwiners(const std::vector<CMatrix>& a,
                                  const std::vector<CMatrix>& b, double tol) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("intertwiners: mismatched operator lists");
  }
  const Eigen::Index na = a.front().rows();
  const Eigen::Index nb = b.front().rows();
  const CMatrix ia = CMatrix::Identity(na, na);
  const CMatrix ib = CMatrix::Identity(nb, nb);
  CMatrix gram = CMatrix::Zero(na * nb, na * nb);
  for (std::size_t i = 0; i < a.size(); ++i) {
    // vec(B T - T A) = (I (x) B - A^T (x) I) vec(T), T of shape nb x na.
    const CMatrix m = kron(ia, b[i]) - kron(a[i].transpose(), ib);
    gram.noalias() += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > tol * scale) break;
    CMatrix t = es.eigenvectors().col(k).reshaped(nb, na);
    out.push_back(std::move(t));
  }
  return out;
}

Decomposition isotypic_decompose(const LieBasis& basis,
                                 const DecomposeOptions& options) {
  if (basis.n > kDecomposeLimit) {
    throw std::length_error("isotypic_decompose: n=" + std::to_string(basis.n) +
                            " exceeds the dense limit " +
                            std::to_string(kDecomposeLimit));
  }
  if (basis.elements.empty()) {
    throw std::invalid_argument("isotypic_decompose: empty basis");
  }
  const auto gens = generator_matrices(basis);
  const Eigen::Index dim = gens.front().rows();

  Decomposition out;
  out.n = basis.n;
  out.seed = options.seed;
  DrawResult draw;
  for (int attempt = 0; attempt < options.max_draws; ++attempt) {
    draw = draw_copies(gens, dim,
                       derive_seed(options.seed, static_cast<std::uint64_t>(attempt)),
                       options.tol);
    out.draws_used = attempt + 1;
    if (draw.failure.empty()) break;
  }
  if (!draw.failure.empty()) {
    std::ostringstream msg;
    msg << "isotypic_decompose: eigen-grouping failed after "
        << options.max_draws << " draws (" << draw.failure
        << ", smallest gap " << draw.min_gap << ")";
    throw std::runtime_error(msg.str());
  }
  out.commutant_dim = draw.commutant_dim;
  out.min_gap = draw.min_gap;

  // Group equivalent copies.
  struct Group {
    std::vector<std::size_t> members;
  };
  std::vector<Group> groups;
  std::vector<std::vector<CMatrix>> restricted;
  for (const auto& w : draw.copies) restricted.push_back(restrict_all(gens, w));
  for (std::size_t c = 0; c < draw.copies.size(); ++c) {
    bool placed = false;
    for (auto& g : groups) {
      const std::size_t rep = g.members.front();
      if (draw.copies[rep].cols() != draw.copies[c].cols()) continue;
      if (!intertwiners(restricted[rep], restricted[c]).empty()) {
        g.members.push_back(c);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({{c}});
  }

  for (auto& g : groups) {
    std::sort(g.members.begin(), g.members.end(), [&](auto a, auto b) {
      return first_significant_row(draw.copies[a]) <
             first_significant_row(draw.copies[b]);
    });
    IsotypicSector sector;
    sector.n_J = static_cast<int>(draw.copies[g.members.front()].cols());
    sector.d_J = static_cast<int>(g.members.size());
    const CMatrix u0 = canonical_copy_basis(draw.copies[g.members.front()]);
    const auto a0 = restrict_all(gens, u0);
    sector.copies.push_back(u0);
    for (std::size_t k = 1; k < g.members.size(); ++k) {
      const CMatrix& w = draw.copies[g.members[k]];
      const auto bk = restrict_all(gens, w);
      const auto ts = intertwiners(a0, bk);
      if (ts.size() != 1) {
        throw std::runtime_error(
            "isotypic_decompose: intertwiner is not unique within a sector");
      }
      CMatrix t = ts.front();
      t *= std::sqrt(static_cast<double>(sector.n_J)) / t.norm();
      CMatrix uk = w * t;
      const Eigen::Index row = first_significant_row(uk.col(0));
      if (row < uk.rows()) {
        const Complex z = uk(row, 0);
        uk *= std::conj(z) / std::abs(z);
      }
      sector.copies.push_back(std::move(uk));
    }

    const CMatrix sub = sector.subspace();
    sector.invariance_residual = invariance_residual(gens, sub);
    double fact = 0.0;
    for (const auto& gm : gens) {
      const CMatrix r0 = u0.adjoint() * gm * u0;
      for (int j = 0; j < sector.d_J; ++j) {
        for (int k = 0; k < sector.d_J; ++k) {
          const CMatrix rjk =
              sector.copies[j].adjoint() * gm * sector.copies[k];
          fact = std::max(fact, j == k ? (rjk - r0).norm() : rjk.norm());
        }
      }
    }
    sector.factorization_residual = fact;
    if (fact > 1e3 * options.tol || sector.invariance_residual > 1e3 * options.tol) {
      std::ostringstream msg;
      msg << "isotypic_decompose: sector (" << sector.n_J << "," << sector.d_J
          << ") fails validation (invariance " << sector.invariance_residual
          << ", factorization " << fact << ")";
      throw std::runtime_error(msg.str());
    }
    out.sectors.push_back(std::move(sector));
  }
  std::sort(out.sectors.begin(), out.sectors.end(),
            [](const IsotypicSector& a, const IsotypicSector& b) {
              return first_significant_row(a.copies.front()) <
                     first_significant_row(b.copies.front());
            });
  return out;
}

bool su_verdict(const IsotypicSector& sector, const LieBasis& basis) {
  if (sector.copies.empty()) {
    throw std::invalid_argument("su_verdict: empty sector");
  }
  const int nj = sector.n_J;
  if (nj <= 1) return true;
  const CMatrix& u = sector.copies.front();
  const auto all = to_matrices(basis, basis.dim());
  RMatrix stacked(2 * nj * nj, static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CMatrix r = u.adjoint() * all[i] * u;
    r.diagonal().array() -= r.trace() / static_cast<double>(nj);
    const auto col = static_cast<Eigen::Index>(i);
    stacked.col(col).head(nj * nj) = r.reshaped().real();
    stacked.col(col).tail(nj * nj) = r.reshaped().imag();
  }
  Eigen::ColPivHouseholderQR<RMatrix> qr(stacked);
  qr.setThreshold(1e-9);
  if (qr.rank() < nj * nj - 1) return false;
  const auto gens = generator_matrices(basis);
  const auto restricted = restrict_all(gens, u);
  return intertwiners(restricted, restricted).size() == 1;
}

std::string to_string(CodeFamily family) {
  switch (family) {
    case CodeFamily::kExchange:
      return "exchange";
    case CodeFamily::kXY:
      return "xy";
    case CodeFamily::kGeneric:
      return "generic";
  }
  return "generic";
}

RestrictedOp restrict(const CMatrix& op, const LogicalCode& code) {
  const CMatrix& p = code.codewords;
  if (op.rows() != p.rows()) {
    throw std::invalid_argument("restrict: operator and code sizes differ");
  }
  RestrictedOp out;
  const CMatrix op_p = op * p;
  out.matrix = p.adjoint() * op_p;
  out.leakage = (op_p - p * out.matrix).norm();
  return out;
}

RestrictedOp restrict(const HermitianOp& op, const LogicalCode& code) {
  if (op.num_qubits() != code.n) {
    throw std::invalid_argument("restrict: operator acts on " +
                                std::to_string(op.num_qubits()) +
                                " qubits, code on " + std::to_string(code.n));
  }
  return restrict(to_matrix(op), code);
}

LogicalCode extract_encoding(const IsotypicSector& sector, int degeneracy_index,
                             CodeFamily family) {
  if (degeneracy_index < 0 || degeneracy_index >= sector.d_J) {
    throw std::out_of_range("extract_encoding: degeneracy index " +
                            std::to_string(degeneracy_index) +
                            " outside [0, " + std::to_string(sector.d_J) + ")");
  }
  LogicalCode code;
  code.codewords = sector.copies[static_cast<std::size_t>(degeneracy_index)];
  fix_column_phases(code.codewords, kSignificant);
  code.n = static_cast<int>(std::lround(std::log2(code.codewords.rows())));
  code.family = family;
  code.label = "sector(" + std::to_string(sector.n_J) + "," +
               std::to_string(sector.d_J) + ")#" +
               std::to_string(degeneracy_index);
  return code;
}

std::vector<CMatrix> associative_algebra(const std::vector<CMatrix>& generators,
                                         double tol) {
  if (generators.empty()) {
    throw std::invalid_argument("associative_algebra: empty generator list");
  }
  const Eigen::Index dim = generators.front().rows();
  std::vector<CMatrix> basis;
  auto consider = [&](CMatrix m) {
    const double nm = m.norm();
    if (nm < 1e-12) return;
    m /= nm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) m -= (b.conjugate().cwiseProduct(m)).sum() * b;
    }
    const double r = m.norm();
    if (r > tol) basis.push_back(m / r);
  };
  consider(CMatrix::Identity(dim, dim));
  for (std::size_t next = 0; next < basis.size(); ++next) {
    for (const auto& g : generators) {
      const CMatrix prod = g * basis[next];
      consider(prod);
    }
  }
  return basis;
}

double matrix_span_residual(const std::vector<CMatrix>& basis,
                            const CMatrix& m) {
  CMatrix r = m;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) r -= (b.conjugate().cwiseProduct(r)).sum() * b;
  }
  return r.norm();
}

}  // namespace enuniv

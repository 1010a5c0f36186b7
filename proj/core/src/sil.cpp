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

#include "enuniv/sil.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace enuniv {
namespace {

constexpr int kBlock = 3;
constexpr int kSpins = 2 * kBlock;

CoupledSpinState code_state(int a, HalfInt m) {
  return coupled_state(kBlock, a, kHalf, m);
}

CoupledSpinState leak_state(HalfInt m) {
  return coupled_state(kBlock, 0, HalfInt::from_twice(3), m);
}

std::string m_label(HalfInt m) { return (m.twice() >= 0 ? "+" : "") + m.str(); }

// Multiplicity-space bases: for each (2J, 2M), the 64 x n_J matrix of
// coupled_basis(6) states ordered by principal number.
std::map<std::pair<int, int>, CMatrix> multiplicity_bases() {
  const auto basis = coupled_basis(kSpins);
  std::map<std::pair<int, int>, std::vector<const CoupledSpinState*>> groups;
  for (const auto& s : basis) groups[{s.J.twice(), s.M.twice()}].push_back(&s);
  std::map<std::pair<int, int>, CMatrix> out;
  for (const auto& [key, states] : groups) {
    CMatrix b(states.front()->amplitudes.size(),
              static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) {
      b.col(static_cast<Eigen::Index>(states[k]->principal)) =
          states[k]->amplitudes;
    }
    out.emplace(key, std::move(b));
  }
  return out;
}

// Principal logarithm of a unitary, with branches shifted so the result is
// traceless whenever det W = 1.
CMatrix traceless_log(const CMatrix& w) {
  Eigen::ComplexSchur<CMatrix> schur(w);
  const CMatrix& q = schur.matrixU();
  const CMatrix& t = schur.matrixT();
  const Eigen::Index n = w.rows();
  std::vector<double> theta(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    theta[static_cast<std::size_t>(k)] = std::arg(t(k, k));
    sum += theta[static_cast<std::size_t>(k)];
  }
  const auto wraps = static_cast<long>(std::lround(sum / (2 * std::numbers::pi)));
  std::vector<std::size_t> order(theta.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return theta[a] > theta[b]; });
  for (long k = 0; k < std::abs(wraps) && k < static_cast<long>(n); ++k) {
    if (wraps > 0) {
      theta[order[static_cast<std::size_t>(k)]] -= 2 * std::numbers::pi;
    } else {
      theta[order[order.size() - 1 - static_cast<std::size_t>(k)]] +=
          2 * std::numbers::pi;
    }
  }
  CVector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = theta[static_cast<std::size_t>(k)];
  CMatrix g = q * d.asDiagonal() * q.adjoint();
  return 0.5 * (g + g.adjoint());
}

}  // namespace

CMatrix block_swap(int block) {
  if (block < 1 || 2 * block > 10) {
    throw std::out_of_range("block_swap: block size out of range");
  }
  const Eigen::Index half = Eigen::Index{1} << block;
  const Eigen::Index dim = half * half;
  CMatrix p = CMatrix::Zero(dim, dim);
  for (Eigen::Index hi = 0; hi < half; ++hi) {
    for (Eigen::Index lo = 0; lo < half; ++lo) {
      p(lo * half + hi, hi * half + lo) = 1.0;
    }
  }
  return p;
}

SilSpec default_sil_spec() {
  SilSpec spec;
  const auto ancilla = code_state(0, kHalf);
  const CMatrix swap = block_swap(kBlock);
  for (int a = 0; a < 2; ++a) {
    const auto data = code_state(a, kHalf);
    for (int tm = 2; tm >= -2; tm -= 2) {
      const HalfInt J = HalfInt::integer(1);
      const HalfInt M = HalfInt::from_twice(tm);
      const CVector v = couple_blocks(data, ancilla, J, M).amplitudes;
      spec.constraints.push_back({"keep code " + std::to_string(a) +
                                      " (J=1, M=" + M.str() + ")",
                                  J, M, v, v});
    }
    const CVector v0 =
        couple_blocks(data, ancilla, HalfInt::integer(0), HalfInt{}).amplitudes;
    spec.constraints.push_back({"flip code " + std::to_string(a) + " (J=0)",
                                HalfInt::integer(0), HalfInt{}, v0, -v0});
  }
  const auto leaked = leak_state(HalfInt::from_twice(3));
  for (int j = 2; j >= 1; --j) {
    const HalfInt J = HalfInt::integer(j);
    for (int tm = 2 * j; tm >= -2 * j; tm -= 2) {
      const HalfInt M = HalfInt::from_twice(tm);
      const CVector v = couple_blocks(leaked, ancilla, J, M).amplitudes;
      spec.constraints.push_back({"swap leaked (J=" + J.str() + ", M=" +
                                      M.str() + ")",
                                  J, M, v, swap * v});
    }
  }
  return spec;
}

SilResult build_sil(const SilSpec& spec) {
  const auto bases = multiplicity_bases();
  std::map<int, std::vector<std::pair<CVector, CVector>>> per_j;
  for (const auto& c : spec.constraints) {
    const auto it = bases.find({c.J.twice(), c.M.twice()});
    if (it == bases.end()) {
      throw std::invalid_argument("build_sil: constraint '" + c.label +
                                  "' has no J=" + c.J.str() + " sector");
    }
    const CMatrix& b = it->second;
    const CVector alpha = b.adjoint() * c.input;
    const CVector beta = b.adjoint() * c.output;
    if ((c.input - b * alpha).norm() > 1e-9 ||
        (c.output - b * beta).norm() > 1e-9) {
      throw std::invalid_argument("build_sil: constraint '" + c.label +
                                  "' does not have total J=" + c.J.str());
    }
    per_j[c.J.twice()].emplace_back(alpha, beta);
  }

  SilResult out;
  const Eigen::Index dim = Eigen::Index{1} << kSpins;
  out.U = CMatrix::Zero(dim, dim);
  out.generator = CMatrix::Zero(dim, dim);
  for (int tj = 0; tj <= kSpins; tj += 2) {
    const CMatrix& top = bases.at({tj, tj});
    const Eigen::Index nj = top.cols();
    SilSector sector;
    sector.J = HalfInt::from_twice(tj);
    sector.n_J = static_cast<int>(nj);
    sector.W = CMatrix::Identity(nj, nj);
    const auto found = per_j.find(tj);
    if (found != per_j.end()) {
      const auto& pairs = found->second;
      CMatrix a(nj, static_cast<Eigen::Index>(pairs.size()));
      CMatrix b(nj, static_cast<Eigen::Index>(pairs.size()));
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        a.col(static_cast<Eigen::Index>(k)) = pairs[k].first;
        b.col(static_cast<Eigen::Index>(k)) = pairs[k].second;
      }
      const double mismatch = (a.adjoint() * a - b.adjoint() * b).norm();
      out.consistency_residual = std::max(out.consistency_residual, mismatch);
      if (mismatch > 1e-9) {
        throw std::invalid_argument(
            "build_sil: constraints for J=" + sector.J.str() +
            " are not isometric (Gram mismatch " + std::to_string(mismatch) +
            ")");
      }
      const CMatrix qa = orthonormal_columns(a);
      const CMatrix pinv = a.completeOrthogonalDecomposition().pseudoInverse();
      const CMatrix qb = b * (pinv * qa);
      CMatrix qa_perp = orthonormal_complement(qa, nj);
      CMatrix qb_perp = orthonormal_complement(qb, nj);
      sector.constrained = static_cast<int>(qa.cols());
      sector.W = qb * qa.adjoint() + qb_perp * qa_perp.adjoint();
      if (qb_perp.cols() > 0) {
        const Complex det = sector.W.determinant();
        qb_perp.col(qb_perp.cols() - 1) *= std::conj(det) / std::abs(det);
        sector.W = qb * qa.adjoint() + qb_perp * qa_perp.adjoint();
      }
    }
    const CMatrix log_w = traceless_log(sector.W);
    for (int tm = -tj; tm <= tj; tm += 2) {
      const CMatrix& bm = bases.at({tj, tm});
      out.U += bm * sector.W * bm.adjoint();
      out.generator += bm * log_w * bm.adjoint();
    }
    out.sectors.push_back(std::move(sector));
  }
  return out;
}

std::vector<SilCase> sil_cases() {
  std::vector<SilCase> out;
  const HalfInt up = kHalf;
  const HalfInt down = -kHalf;
  const CVector anc_up = code_state(0, up).amplitudes;
  const CVector anc_down = code_state(0, down).amplitudes;
  for (int a = 0; a < 2; ++a) {
    const CVector d = code_state(a, up).amplitudes;
    out.push_back({"case " + std::to_string(a + 1) + ": |" + std::to_string(a) +
                       "_L>|0_L> -> unchanged",
                   kron(d, anc_up), kron(d, anc_up)});
  }
  for (int a = 0; a < 2; ++a) {
    out.push_back({"case " + std::to_string(a + 3) + ": |3," +
                       std::to_string(a) + ",1/2,-1/2>|0_L> -> |" +
                       std::to_string(a) + "_L>|3,0,1/2,-1/2>",
                   kron(code_state(a, down).amplitudes, anc_up),
                   kron(code_state(a, up).amplitudes, anc_down)});
  }
  int k = 5;
  for (int tm = 3; tm >= -3; tm -= 2, ++k) {
    const HalfInt m = HalfInt::from_twice(tm);
    const CVector leak = leak_state(m).amplitudes;
    out.push_back({"case " + std::to_string(k) + ": |3,0,3/2," + m_label(m) +
                       ">|0_L> -> |0_L>|3,0,3/2," + m_label(m) + ">",
                   kron(leak, anc_up), kron(anc_up, leak)});
  }
  return out;
}

double SilReport::worst_case() const {
  double w = 0.0;
  for (double r : case_residuals) w = std::max(w, r);
  return w;
}

bool SilReport::passes(double tol) const {
  if (unitarity >= tol) return false;
  for (double c : commutators) {
    if (c >= tol) return false;
  }
  for (double r : case_residuals) {
    if (r >= tol) return false;
  }
  for (double r : constraint_residuals) {
    if (r >= tol) return false;
  }
  return true;
}

SilReport verify_sil(const UnitaryMatrix& U, const SilSpec& spec) {
  const Eigen::Index dim = Eigen::Index{1} << kSpins;
  if (U.rows() != dim || U.cols() != dim) {
    throw std::invalid_argument("verify_sil: expected a 64 x 64 matrix");
  }
  SilReport report;
  report.unitarity = unitarity_residual(U);
  const char axes[3] = {'X', 'Y', 'Z'};
  for (int a = 0; a < 3; ++a) {
    const CMatrix c = 2.0 * spin_operator(kSpins, axes[a]);
    report.commutators[static_cast<std::size_t>(a)] = (U * c - c * U).norm();
  }
  for (const auto& cs : sil_cases()) {
    report.case_labels.push_back(cs.label);
    report.case_residuals.push_back((U * cs.input - cs.expected).norm());
  }
  for (const auto& c : spec.constraints) {
    report.constraint_residuals.push_back((U * c.input - c.output).norm());
  }
  return report;
}

UnitaryMatrix perturb(const UnitaryMatrix& U, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index n = U.rows();
  const RVector re = random_gaussian(n * n, rng);
  const RVector im = random_gaussian(n * n, rng);
  CMatrix z(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    z(k % n, k / n) = Complex(re(k), im(k));
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  const CMatrix r = qr.householderQ() * CMatrix::Identity(n, n);
  return U + eps * r;
}

}  // namespace enuniv

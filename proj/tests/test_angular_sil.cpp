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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "enuniv/angular.hpp"
#include "enuniv/lie.hpp"
#include "enuniv/models.hpp"
#include "enuniv/sil.hpp"
#include "enuniv/synth.hpp"
#include "oracles.hpp"

namespace enuniv {
namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// Spin operators from the oracle's Kronecker products.
oracle::Mat oracle_spin(int N, char axis) {
  oracle::Mat s = oracle::Mat::Zero(1 << N, 1 << N);
  for (int k = 0; k < N; ++k) {
    s += 0.5 * oracle::string_matrix(oracle::sites(N, {{k, axis}}));
  }
  return s;
}

TEST(HalfInt, Arithmetic) {
  EXPECT_EQ((kHalf + kHalf), HalfInt::integer(1));
  EXPECT_EQ(h(3).str(), "3/2");
  EXPECT_EQ(h(-1).str(), "-1/2");
  EXPECT_EQ(HalfInt::integer(2).str(), "2");
  EXPECT_LT(h(1), h(3));
}

TEST(ClebschGordan, Examples) {
  EXPECT_NEAR(clebsch_gordan(kHalf, kHalf, kHalf, -kHalf, h(0), h(0)), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(clebsch_gordan(h(4), h(-2), h(0), h(0), h(4), h(-2)), 1.0, 1e-14);
  EXPECT_EQ(clebsch_gordan(kHalf, kHalf, kHalf, kHalf, h(0), h(0)), 0.0);
  EXPECT_EQ(clebsch_gordan(kHalf, h(3), kHalf, kHalf, h(2), h(4)), 0.0);
}

TEST(ClebschGordan, SpinHalfClosedForm) {
  // Coupling j1 with 1/2: textbook closed forms.
  for (int tj1 = 1; tj1 <= 7; ++tj1) {
    const double j1 = tj1 / 2.0;
    for (int tM = -(tj1 + 1); tM <= tj1 + 1; tM += 2) {
      const double M = tM / 2.0;
      for (int sgn : {1, -1}) {
        const HalfInt m1 = h(tM - sgn);
        if (std::abs(m1.twice()) > tj1) continue;
        const double up = std::sqrt((j1 + sgn * M + 0.5) / (2 * j1 + 1));
        EXPECT_NEAR(clebsch_gordan(h(tj1), m1, kHalf, h(sgn), h(tj1 + 1), h(tM)), up, 1e-12);
        if (std::abs(tM) <= tj1 - 1) {
          const double down = -sgn * std::sqrt((j1 - sgn * M + 0.5) / (2 * j1 + 1));
          EXPECT_NEAR(clebsch_gordan(h(tj1), m1, kHalf, h(sgn), h(tj1 - 1), h(tM)), down, 1e-12);
        }
      }
    }
  }
}

TEST(ClebschGordan, Unitarity) {
  for (int tj1 = 0; tj1 <= 6; ++tj1) {
    for (int tj2 = 0; tj2 <= 5; ++tj2) {
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
          double sum = 0.0;
          for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
            const double c = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tm1 + tm2));
            sum += c * c;
          }
          EXPECT_NEAR(sum, 1.0, 1e-12);
        }
      }
    }
  }
}

TEST(CoupledBasis, OrthonormalCompleteEigenstates) {
  for (int N = 1; N <= 6; ++N) {
    const auto basis = coupled_basis(N);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(1 << N));
    CMatrix q(1 << N, 1 << N);
    for (std::size_t k = 0; k < basis.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = basis[k].amplitudes;
    EXPECT_LT((q.adjoint() * q - CMatrix::Identity(1 << N, 1 << N)).norm(), 1e-9);
    const oracle::Mat sx = oracle_spin(N, 'X'), sy = oracle_spin(N, 'Y'), sz = oracle_spin(N, 'Z');
    const oracle::Mat s2 = sx * sx + sy * sy + sz * sz;
    for (const auto& s : basis) {
      const double j = s.J.value();
      EXPECT_LT((s2 * s.amplitudes - j * (j + 1) * s.amplitudes).norm(), 1e-9);
      EXPECT_LT((sz * s.amplitudes - s.M.value() * s.amplitudes).norm(), 1e-9);
      for (std::size_t k = 1; k < s.path.size(); ++k) {
        EXPECT_EQ(std::abs(s.path[k].twice() - s.path[k - 1].twice()), 1);
      }
    }
  }
  EXPECT_THROW(coupled_basis(0), std::out_of_range);
  EXPECT_THROW(coupled_basis(9), std::out_of_range);
}

TEST(CoupledBasis, Counts) {
  const auto b3 = coupled_basis(3);
  std::map<int, int> by_j;
  for (const auto& s : b3) ++by_j[s.J.twice()];
  EXPECT_EQ(by_j[3], 4);
  EXPECT_EQ(by_j[1], 4);
  for (int N = 1; N <= 8; ++N) {
    for (int tJ = N % 2; tJ <= N; tJ += 2) {
      const int k = (N - tJ) / 2;
      EXPECT_EQ(path_count(N, h(tJ)), oracle::binomial(N, k) - oracle::binomial(N, k - 1));
    }
  }
  EXPECT_EQ(path_count(6, HalfInt::integer(1)), 9);
}

TEST(CoupledBasis, TrioCodewordViaIntermediateSinglet) {
  const auto s = coupled_state(3, 0, kHalf, kHalf);
  ASSERT_EQ(s.path.size(), 3U);
  EXPECT_EQ(s.path[1], HalfInt::integer(0));
  const CMatrix trio = trio_code().codewords;
  EXPECT_NEAR(std::abs(trio.col(0).dot(s.amplitudes)), 1.0, 1e-12);
  EXPECT_THROW(coupled_state(3, 5, kHalf, kHalf), std::out_of_range);
}

TEST(DecomposeProduct, LeakedAndCodedExamples) {
  const auto down = coupled_state(3, 0, kHalf, -kHalf);
  const auto up = coupled_state(3, 0, kHalf, kHalf);
  const auto parts = decompose_product(down, up);
  std::map<int, double> by_j;
  for (const auto& [c, st] : parts) by_j[st.J.twice()] += c;
  EXPECT_NEAR(std::abs(by_j[0]), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(by_j[2]), 1 / std::sqrt(2.0), 1e-12);
  const auto leaked = coupled_state(3, 0, h(3), h(3));
  const auto stretched = decompose_product(leaked, up);
  double weight = 0.0;
  for (const auto& [c, st] : stretched) {
    if (std::abs(c) > 1e-12) {
      EXPECT_EQ(st.J, HalfInt::integer(2));
      EXPECT_EQ(st.M, HalfInt::integer(2));
      weight += c * c;
    }
  }
  EXPECT_NEAR(weight, 1.0, 1e-12);
}

TEST(DecomposeProduct, ReconstructsTensorProduct) {
  const auto a = coupled_state(3, 1, kHalf, -kHalf);
  const auto b = coupled_state(3, 0, h(3), kHalf);
  CVector sum = CVector::Zero(64);
  for (const auto& [c, st] : decompose_product(a, b)) {
    sum += c * st.amplitudes;
    EXPECT_EQ(st.block_split, 3);
  }
  EXPECT_LT((sum - kron(a.amplitudes, b.amplitudes)).norm(), 1e-12);
}

TEST(SpinOperators, MatchOracle) {
  for (char a : {'X', 'Y', 'Z'}) {
    EXPECT_LT((spin_operator(4, a) - oracle_spin(4, a)).norm(), 1e-12);
  }
}

TEST(Sil, BuiltUnitaryPassesEveryCheck) {
  const auto built = build_sil(default_sil_spec());
  ASSERT_EQ(built.U.rows(), 64);
  const auto rep = verify_sil(built.U);
  EXPECT_LT(rep.unitarity, 1e-9);
  for (double c : rep.commutators) EXPECT_LT(c, 1e-9);
  ASSERT_EQ(rep.case_residuals.size(), 8U);
  for (double r : rep.case_residuals) EXPECT_LT(r, 1e-9);
  for (double r : rep.constraint_residuals) EXPECT_LT(r, 1e-9);
  EXPECT_TRUE(rep.passes(1e-9));
  EXPECT_LT((expm_hermitian(built.generator, 1.0) - built.U).norm(), 1e-9);
}

TEST(Sil, CasesIndependentlyRecomputed) {
  const auto built = build_sil(default_sil_spec());
  const CVector zero_l = trio_code().codewords.col(0);
  const CVector one_l = trio_code().codewords.col(1);
  // Case 1: |0_L>|0_L> is unchanged.
  const CVector in1 = kron(zero_l, zero_l);
  EXPECT_LT((built.U * in1 - in1).norm(), 1e-9);
  const CVector in2 = kron(one_l, zero_l);
  EXPECT_LT((built.U * in2 - in2).norm(), 1e-9);
  // Case 5: |3/2,3/2>|0_L> -> |0_L>|3/2,3/2>.
  const CVector leak = coupled_state(3, 0, h(3), h(3)).amplitudes;
  EXPECT_LT((built.U * kron(leak, zero_l) - kron(zero_l, leak)).norm(), 1e-9);
}

TEST(Sil, GeneratorLiesInExchangeClosure) {
  const auto built = build_sil(default_sil_spec());
  const auto basis = close_lie_algebra(heisenberg_family(6, Topology::kAllPairs));
  const auto g = from_matrix(built.generator);
  EXPECT_LT(span_residual(basis, g) / std::max(1.0, g.norm()), 1e-6);
}

TEST(Sil, IdentityFailsLeakedCases) {
  const auto rep = verify_sil(UnitaryMatrix::Identity(64, 64));
  EXPECT_LT(rep.case_residuals[0], 1e-12);
  EXPECT_LT(rep.case_residuals[1], 1e-12);
  for (std::size_t k = 2; k < 8; ++k) EXPECT_GT(rep.case_residuals[k], 0.1) << k;
  EXPECT_FALSE(rep.passes(1e-9));
}

TEST(Sil, RandomSymmetricUnitaryFailsTruthTable) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  HermitianOp h6(6);
  for (const auto& e : heisenberg_family(6, Topology::kAllPairs)) h6 += g(rng) * e;
  const auto u = expm_pulse(h6, 1.0);
  const auto rep = verify_sil(u);
  for (double c : rep.commutators) EXPECT_LT(c, 1e-9);
  EXPECT_GT(rep.worst_case(), 1e-3);
}

TEST(Sil, PerturbationIsMeasured) {
  const auto built = build_sil(default_sil_spec());
  const auto rep = verify_sil(perturb(built.U, 1e-3, 7));
  EXPECT_GT(rep.worst_case(), 1e-4);
  EXPECT_LT(rep.worst_case(), 1e-2);
}

}  // namespace
}  // namespace enuniv

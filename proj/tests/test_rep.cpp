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

#include <algorithm>
#include <utility>

#include "enuniv/lie.hpp"
#include "enuniv/models.hpp"
#include "enuniv/rep.hpp"
#include "oracles.hpp"

namespace enuniv {
namespace {

using Table = std::vector<std::pair<int, int>>;

Table table_of(const Decomposition& d) {
  Table t;
  for (const auto& s : d.sectors) t.emplace_back(s.n_J, s.d_J);
  std::sort(t.begin(), t.end());
  return t;
}

// Spin-J multiplicity in n spin-1/2 particles, times its 2J+1 degeneracy.
Table exchange_oracle(int n) {
  Table t;
  for (int twoJ = n % 2; twoJ <= n; twoJ += 2) {
    const int k = (n - twoJ) / 2;
    const auto mult = oracle::binomial(n, k) - oracle::binomial(n, k - 1);
    t.emplace_back(static_cast<int>(mult), twoJ + 1);
  }
  std::sort(t.begin(), t.end());
  return t;
}

// Weight-w spaces pair with weight n-w under X; the middle weight splits.
Table xy_oracle(int n) {
  Table t;
  for (int w = 0; 2 * w < n; ++w) t.emplace_back(static_cast<int>(oracle::binomial(n, w)), 2);
  if (n % 2 == 0) {
    const int half = static_cast<int>(oracle::binomial(n, n / 2) / 2);
    t.emplace_back(half, 1);
    t.emplace_back(half, 1);
  }
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<oracle::Mat> dense(const std::vector<HermitianOp>& ops) {
  std::vector<oracle::Mat> out;
  for (const auto& op : ops) out.push_back(to_matrix(op));
  return out;
}

TEST(Commutant, Examples) {
  std::vector<HermitianOp> id{HermitianOp::identity(2)};
  EXPECT_EQ(commutant(id).size(), 16U);
  EXPECT_EQ(commutant(collective_family(3)).size(), 5U);
  EXPECT_EQ(commutant(xy_family(3, Topology::kAllPairs)).size(), 8U);
}

TEST(Commutant, MatchesDenseNullspace) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& gens : {xy_family(n, Topology::kAllPairs),
                             heisenberg_family(n, Topology::kChain),
                             collective_family(n), oprime_family(n)}) {
      EXPECT_EQ(commutant(gens).size(),
                static_cast<std::size_t>(oracle::commutant_dimension(dense(gens))))
          << n;
    }
  }
}

TEST(Commutant, ElementsCommuteWithGenerators) {
  const auto gens = heisenberg_family(4, Topology::kAllPairs);
  for (const auto& c : commutant(gens, 5)) {
    for (const auto& g : gens) EXPECT_LT(bracket(c, g).norm(), 1e-9);
  }
}

TEST(Decompose, ExchangeSectors) {
  for (int n = 2; n <= 5; ++n) {
    const auto basis = close_lie_algebra(heisenberg_family(n, Topology::kAllPairs));
    EXPECT_EQ(table_of(isotypic_decompose(basis)), exchange_oracle(n)) << n;
  }
  const auto b3 = close_lie_algebra(heisenberg_family(3, Topology::kAllPairs));
  EXPECT_EQ(table_of(isotypic_decompose(b3)), (Table{{1, 4}, {2, 2}}));
}

TEST(Decompose, XYSectors) {
  for (int n = 2; n <= 5; ++n) {
    const auto basis = close_lie_algebra(xy_family(n, Topology::kAllPairs));
    EXPECT_EQ(table_of(isotypic_decompose(basis)), xy_oracle(n)) << n;
  }
}

TEST(Decompose, SectorInvariants) {
  const auto gens = xy_family(4, Topology::kAllPairs);
  const auto basis = close_lie_algebra(gens);
  const auto dec = isotypic_decompose(basis);
  int total = 0;
  std::size_t d2 = 0;
  for (const auto& s : dec.sectors) {
    total += s.n_J * s.d_J;
    d2 += static_cast<std::size_t>(s.d_J * s.d_J);
    const CMatrix q = s.subspace();
    EXPECT_LT((q.adjoint() * q - CMatrix::Identity(q.cols(), q.cols())).norm(), 1e-9);
    for (const auto& g : gens) {
      const CMatrix gm = to_matrix(g);
      EXPECT_LT((gm * q - q * (q.adjoint() * gm * q)).norm(), 1e-9);
      const CMatrix first = s.copies[0].adjoint() * gm * s.copies[0];
      for (const auto& c : s.copies) {
        EXPECT_LT((c.adjoint() * gm * c - first).norm(), 1e-9);
      }
    }
  }
  EXPECT_EQ(total, 16);
  EXPECT_EQ(dec.commutant_dim, d2);
}

TEST(Decompose, CommutantDuality) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& gens : {heisenberg_family(n, Topology::kAllPairs),
                             xy_family(n, Topology::kAllPairs)}) {
      const auto dec = isotypic_decompose(close_lie_algebra(gens));
      std::size_t d2 = 0;
      for (const auto& s : dec.sectors) d2 += static_cast<std::size_t>(s.d_J * s.d_J);
      EXPECT_EQ(commutant(gens).size(), d2) << n;
    }
  }
}

TEST(Decompose, SeedReproducible) {
  const auto basis = close_lie_algebra(heisenberg_family(4, Topology::kAllPairs));
  DecomposeOptions opt;
  opt.seed = 42;
  const auto a = isotypic_decompose(basis, opt);
  const auto b = isotypic_decompose(basis, opt);
  ASSERT_EQ(a.sectors.size(), b.sectors.size());
  for (std::size_t k = 0; k < a.sectors.size(); ++k) {
    for (std::size_t c = 0; c < a.sectors[k].copies.size(); ++c) {
      EXPECT_EQ((a.sectors[k].copies[c] - b.sectors[k].copies[c]).norm(), 0.0);
    }
  }
}

TEST(Decompose, RejectsLargeSystems) {
  LieBasis big;
  big.n = kDecomposeLimit + 1;
  big.elements.push_back(HermitianOp::identity(big.n));
  EXPECT_THROW(isotypic_decompose(big), std::length_error);
}

TEST(SuVerdict, Examples) {
  const auto xy = close_lie_algebra(xy_family(3, Topology::kAllPairs));
  for (const auto& s : isotypic_decompose(xy).sectors) {
    if (s.n_J == 3) EXPECT_TRUE(su_verdict(s, xy));
    if (s.n_J == 1) EXPECT_TRUE(su_verdict(s, xy));
  }
  const auto ex = close_lie_algebra(heisenberg_family(3, Topology::kAllPairs));
  for (const auto& s : isotypic_decompose(ex).sectors) {
    if (s.n_J == 2) EXPECT_TRUE(su_verdict(s, ex));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto col = close_lie_algebra(collective_family(n));
    for (const auto& s : isotypic_decompose(col).sectors) {
      if (s.n_J >= 3) EXPECT_FALSE(su_verdict(s, col)) << n << " " << s.n_J;
    }
  }
}

TEST(Restrict, Examples) {
  const auto code = xy_qutrit_code();
  const auto r = restrict(xy_coupling(3, 0, 1), code);
  CMatrix want = CMatrix::Zero(3, 3);
  want(0, 1) = want(1, 0) = 1.0;
  EXPECT_LT((r.matrix - want).norm(), 1e-12);
  EXPECT_LT(r.leakage, 1e-12);
  const auto id = restrict(HermitianOp::identity(3), trio_code());
  EXPECT_LT((id.matrix - CMatrix::Identity(2, 2)).norm(), 1e-12);
  const auto leaky = restrict(HermitianOp::single(PauliString::from_letters("XII")), code);
  EXPECT_GT(leaky.leakage, 0.5);
  EXPECT_THROW(restrict(HermitianOp::identity(2), code), std::invalid_argument);
}

TEST(ExtractEncoding, XYQutritSpan) {
  const auto basis = close_lie_algebra(xy_family(3, Topology::kAllPairs));
  const auto dec = isotypic_decompose(basis);
  for (const auto& s : dec.sectors) {
    if (s.n_J != 3) continue;
    bool found = false;
    for (int k = 0; k < s.d_J; ++k) {
      const auto code = extract_encoding(s, k, CodeFamily::kXY);
      const CMatrix q = xy_qutrit_code().codewords;
      if (out_of_span_norm(q, code.codewords) < 1e-9) found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(extract_encoding(s, s.d_J), std::out_of_range);
  }
}

TEST(ExtractEncoding, ExchangeMatchesTrioSpectra) {
  const auto gens = heisenberg_family(3, Topology::kAllPairs);
  const auto dec = isotypic_decompose(close_lie_algebra(gens));
  const auto trio = trio_code();
  for (const auto& s : dec.sectors) {
    const auto code = extract_encoding(s, 0, CodeFamily::kExchange);
    if (s.n_J == 1) {
      for (const auto& g : gens) {
        EXPECT_LT(restrict(g, code).leakage, 1e-9);
      }
      continue;
    }
    for (const auto& g : gens) {
      Eigen::SelfAdjointEigenSolver<CMatrix> a(restrict(g, code).matrix);
      Eigen::SelfAdjointEigenSolver<CMatrix> b(restrict(g, trio).matrix);
      EXPECT_LT((a.eigenvalues() - b.eigenvalues()).norm(), 1e-9);
    }
  }
}

TEST(Intertwiners, IrreducibleHasScalarsOnly) {
  std::vector<CMatrix> a;
  for (const auto& g : xy_family(3, Topology::kAllPairs)) {
    a.push_back(restrict(g, xy_qutrit_code()).matrix);
  }
  const auto t = intertwiners(a, a);
  ASSERT_EQ(t.size(), 1U);
  const CMatrix s = t[0] / t[0](0, 0);
  EXPECT_LT((s - CMatrix::Identity(3, 3)).norm(), 1e-9);
}

TEST(XYCommutant, EqualsAlgebraOfSzAndFlip) {
  for (int n = 3; n <= 5; ++n) {
    const auto gens = xy_family(n, Topology::kAllPairs);
    std::vector<CMatrix> comm;
    for (const auto& c : commutant(gens)) {
      const CMatrix m = to_matrix(c);
      comm.push_back(m / m.norm());
    }
    // Complexify: Hermitian elements span the same complex space.
    const auto alg = associative_algebra({to_matrix(total_sz(n)), to_matrix(global_flip(n))});
    double forward = 0.0;
    for (const auto& m : comm) forward = std::max(forward, matrix_span_residual(alg, m));
    std::vector<CMatrix> comm_on = associative_algebra(comm);
    double backward = 0.0;
    for (const auto& m : alg) backward = std::max(backward, matrix_span_residual(comm_on, m));
    EXPECT_LT(forward, 1e-9) << n;
    EXPECT_LT(backward, 1e-9) << n;
    EXPECT_EQ(alg.size(), comm.size()) << n;
  }
}

TEST(AssociativeAlgebra, SingleInvolution) {
  const auto alg = associative_algebra({to_matrix(global_flip(2))});
  EXPECT_EQ(alg.size(), 2U);
}

}  // namespace
}  // namespace enuniv

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
#include <random>

#include "enuniv/lie.hpp"
#include "enuniv/models.hpp"
#include "oracles.hpp"

namespace enuniv {
namespace {

std::vector<oracle::Mat> dense(const std::vector<HermitianOp>& ops) {
  std::vector<oracle::Mat> out;
  for (const auto& op : ops) out.push_back(to_matrix(op));
  return out;
}

// Generators built from the oracle's own matrices, not the model library.
std::vector<oracle::Mat> oracle_xy(int n, bool chain) {
  std::vector<oracle::Mat> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!chain || j == i + 1) out.push_back(oracle::xy_matrix(n, i, j));
    }
  }
  return out;
}

std::vector<oracle::Mat> oracle_swaps(int n) {
  std::vector<oracle::Mat> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.push_back(oracle::swap_matrix(n, i, j));
  }
  return out;
}

std::vector<oracle::Mat> oracle_oprime(int n) {
  std::vector<oracle::Mat> out;
  for (int i = 0; i < n; ++i) out.push_back(oracle::string_matrix(oracle::sites(n, {{i, 'Z'}})));
  for (int i = 0; i + 1 < n; ++i) {
    out.push_back(oracle::string_matrix(oracle::sites(n, {{i, 'X'}, {i + 1, 'X'}})));
  }
  return out;
}

TEST(Closure, ExamplesAgainstDenseOracle) {
  EXPECT_EQ(close_lie_algebra(oprime_family(2)).dim(), 6U);
  EXPECT_EQ(close_lie_algebra(heisenberg_family(3, Topology::kAllPairs)).dim(), 4U);
  EXPECT_EQ(close_lie_algebra(xy_family(3, Topology::kAllPairs)).dim(), 8U);
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(close_lie_algebra(xy_family(n, Topology::kAllPairs)).dim(),
              static_cast<std::size_t>(oracle::lie_dimension(oracle_xy(n, false))))
        << n;
    EXPECT_EQ(close_lie_algebra(xy_family(n, Topology::kChain)).dim(),
              static_cast<std::size_t>(oracle::lie_dimension(oracle_xy(n, true))))
        << n;
    EXPECT_EQ(close_lie_algebra(heisenberg_family(n, Topology::kAllPairs)).dim(),
              static_cast<std::size_t>(oracle::lie_dimension(oracle_swaps(n))))
        << n;
    EXPECT_EQ(close_lie_algebra(oprime_family(n)).dim(),
              static_cast<std::size_t>(oracle::lie_dimension(oracle_oprime(n))))
        << n;
  }
}

TEST(Closure, CollectiveIsSu2ForEveryN) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(close_lie_algebra(collective_family(n)).dim(), 3U) << n;
  }
}

TEST(Closure, BasisIsOrthonormalAndClosed) {
  const auto basis = close_lie_algebra(xy_family(4, Topology::kAllPairs));
  ASSERT_TRUE(basis.closed);
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    for (std::size_t b = 0; b < basis.dim(); ++b) {
      EXPECT_NEAR(hs_inner(basis.elements[a], basis.elements[b]), a == b ? 1.0 : 0.0, 1e-9);
    }
  }
  for (std::size_t a = 0; a < basis.dim(); a += 3) {
    for (std::size_t b = a + 1; b < basis.dim(); b += 5) {
      EXPECT_LT(span_residual(basis, bracket(basis.elements[a], basis.elements[b])), 1e-9);
    }
  }
}

TEST(Closure, GeneratorContainmentAndIdempotence) {
  const auto gens = heisenberg_family(4, Topology::kAllPairs);
  const auto basis = close_lie_algebra(gens);
  for (const auto& g : gens) EXPECT_LT(span_residual(basis, g), 1e-9);
  const auto again = close_lie_algebra(basis.elements);
  EXPECT_EQ(again.dim(), basis.dim());
  EXPECT_LE(basis.dim(), 256U);
}

TEST(Closure, OrderInvariance) {
  auto gens = xy_family(4, Topology::kAllPairs);
  const auto dim = close_lie_algebra(gens).dim();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(close_lie_algebra(gens).dim(), dim);
  }
}

TEST(Closure, ProjectionRemovesResidual) {
  const auto basis = close_lie_algebra(heisenberg_family(3, Topology::kAllPairs));
  const auto op = xy_coupling(3, 0, 1);
  const auto p = project(basis, op);
  EXPECT_LT(span_residual(basis, p), 1e-12);
  EXPECT_NEAR(span_residual(basis, op), (op - p).norm(), 1e-12);
}

TEST(Closure, MaxDimStopsEarly) {
  ClosureOptions opt;
  opt.max_dim = 10;
  const auto basis = close_lie_algebra(xy_family(4, Topology::kAllPairs), opt);
  EXPECT_FALSE(basis.closed);
  EXPECT_LE(basis.dim(), 10U);
}

TEST(Closure, RejectsBadInput) {
  EXPECT_THROW(close_lie_algebra(std::vector<HermitianOp>{}), std::invalid_argument);
  std::vector<HermitianOp> mixed{exchange(2, 0, 1), exchange(3, 0, 1)};
  EXPECT_THROW(close_lie_algebra(mixed), std::invalid_argument);
}

TEST(ExchangeBasis, StructureRelations) {
  const auto h = exchange_h_basis();
  const auto basis = close_lie_algebra(heisenberg_family(3, Topology::kAllPairs));
  for (int a = 1; a <= 3; ++a) EXPECT_LT(span_residual(basis, h[static_cast<std::size_t>(a)]), 1e-9);
  // H_0 differs from the total exchange by a multiple of the identity.
  const auto total = exchange(3, 0, 1) + exchange(3, 1, 2) + exchange(3, 0, 2);
  EXPECT_LT((h[0] - 2.0 * total + HermitianOp::identity(3, 3.0)).norm(), 1e-12);
  // [H_a, H_b] = i eps_abc H_c, so bracket(H_a, H_b) = -eps_abc H_c.
  EXPECT_LT((bracket(h[1], h[2]) + h[3]).norm(), 1e-9);
  EXPECT_LT((bracket(h[2], h[3]) + h[1]).norm(), 1e-9);
  EXPECT_LT((bracket(h[3], h[1]) + h[2]).norm(), 1e-9);
  for (int a = 1; a <= 3; ++a) EXPECT_LT(bracket(h[0], h[a]).norm(), 1e-9);
}

GrowthRecord record_of(std::vector<std::size_t> dims) {
  GrowthRecord r;
  r.family = "test";
  int n = 2;
  for (auto d : dims) r.samples.push_back({n++, d, true, ""});
  return r;
}

TEST(Verdict, Examples) {
  auto v = universality_verdict(record_of({6, 15, 28, 45, 66}));
  EXPECT_EQ(v.kind, VerdictKind::kNonUniversal);
  EXPECT_EQ(v.degree, 2);
  v = universality_verdict(record_of({5, 5, 5, 5}));
  EXPECT_EQ(v.kind, VerdictKind::kNonUniversal);
  EXPECT_EQ(v.degree, 0);
  v = universality_verdict(record_of({1, 8, 31, 123}));
  EXPECT_EQ(v.kind, VerdictKind::kSuperPolynomial);
  v = universality_verdict(record_of({1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(v.kind, VerdictKind::kSuperPolynomial);
  v = universality_verdict(record_of({10, 1, 10, 1, 10, 1}));
  EXPECT_EQ(v.kind, VerdictKind::kInconclusive);
}

TEST(Verdict, RejectsShortOrFailedRecords) {
  EXPECT_THROW(universality_verdict(record_of({1, 2, 3})), std::invalid_argument);
  auto r = record_of({1, 2, 3, 4});
  r.samples[2].error = "boom";
  EXPECT_THROW(universality_verdict(r), std::invalid_argument);
}

TEST(Growth, OprimeAndChainFamilies) {
  const std::vector<int> ns{2, 3, 4, 5, 6};
  const auto rec = growth_function("oprime", family_from_id("oprime"), ns);
  std::vector<std::size_t> dims;
  for (const auto& s : rec.samples) dims.push_back(s.dim);
  EXPECT_EQ(dims, (std::vector<std::size_t>{6, 15, 28, 45, 66}));
  const auto chain = growth_function("xy:chain", family_from_id("xy:chain"), ns);
  EXPECT_EQ(universality_verdict(chain).kind, VerdictKind::kNonUniversal);
}

TEST(Growth, HeisenbergAllPairsIsSuperPolynomialOnset) {
  const std::vector<int> ns{2, 3, 4, 5};
  const auto rec = growth_function("heisenberg:all", family_from_id("heisenberg:all"), ns);
  for (std::size_t k = 0; k < rec.samples.size(); ++k) {
    std::vector<oracle::Mat> gens = oracle_swaps(rec.samples[k].n);
    EXPECT_EQ(rec.samples[k].dim, static_cast<std::size_t>(oracle::lie_dimension(gens)));
  }
  EXPECT_EQ(universality_verdict(rec).kind, VerdictKind::kSuperPolynomial);
}

TEST(Growth, FailedSampleIsRecorded) {
  const std::vector<int> ns{1, 2};
  const auto rec = growth_function("xy:all", family_from_id("xy:all"), ns);
  EXPECT_FALSE(rec.samples[0].error.empty());
  EXPECT_TRUE(rec.samples[1].error.empty());
}

}  // namespace
}  // namespace enuniv

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

#include "enuniv/lie.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace enuniv {
namespace {

// Scratch vector over Pauli-string indices. Dense for small n, hashed
// otherwise; tracks which slots were written so gathers stay sparse.
class Accumulator {
 public:
  explicit Accumulator(int n) : n_(n) {
    if (n <= kDenseIndexLimit) {
      dense_.assign(std::size_t{1} << (2 * n), 0.0);
      seen_.assign(dense_.size(), 0);
    }
  }

  void clear() {
    if (!dense_.empty()) {
      for (auto i : touched_) {
        dense_[i] = 0.0;
        seen_[i] = 0;
      }
    } else {
      sparse_.clear();
    }
    touched_.clear();
  }

  double get(std::uint64_t i) const {
    if (!dense_.empty()) return dense_[i];
    auto it = sparse_.find(i);
    return it == sparse_.end() ? 0.0 : it->second;
  }

  void add(std::uint64_t i, double v) {
    if (!dense_.empty()) {
      if (!seen_[i]) {
        seen_[i] = 1;
        touched_.push_back(i);
      }
      dense_[i] += v;
    } else {
      auto [it, inserted] = sparse_.try_emplace(i, 0.0);
      if (inserted) touched_.push_back(i);
      it->second += v;
    }
  }

  double norm() const {
    double s = 0.0;
    for (auto i : touched_) {
      const double v = get(i);
      s += v * v;
    }
    return std::sqrt(s);
  }

  HermitianOp gather(double scale) const {
    std::vector<HermitianOp::Term> terms;
    terms.reserve(touched_.size());
    for (auto i : touched_) {
      const double v = get(i) * scale;
      if (std::abs(v) >= kDropTolerance) {
        terms.push_back({PauliString::from_index(n_, i), v});
      }
    }
    return HermitianOp(n_, std::move(terms));
  }

 private:
  static constexpr int kDenseIndexLimit = 10;
  int n_;
  std::vector<double> dense_;
  std::vector<char> seen_;
  std::unordered_map<std::uint64_t, double> sparse_;
  std::vector<std::uint64_t> touched_;
};

double dot(const Accumulator& acc, const HermitianOp& e) {
  double s = 0.0;
  for (const auto& t : e.terms()) s += acc.get(t.string.index()) * t.coeff;
  return s;
}

void axpy(Accumulator& acc, double c, const HermitianOp& e) {
  for (const auto& t : e.terms()) acc.add(t.string.index(), -c * t.coeff);
}

// Loads `op / ||op||` and orthogonalizes against `basis` (two passes).
// Returns the residual norm.
double orthogonalize(Accumulator& acc, const HermitianOp& op,
                     const std::vector<HermitianOp>& basis) {
  acc.clear();
  const double nrm = op.norm();
  for (const auto& t : op.terms()) acc.add(t.string.index(), t.coeff / nrm);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) {
      const double c = dot(acc, e);
      if (c != 0.0) axpy(acc, c, e);
    }
  }
  return acc.norm();
}

// Exact rationals for polynomial interpolation on integer samples.
using Int = __int128;

Int gcd128(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Fraction {
  Int num = 0;
  Int den = 1;

  static Fraction make(Int n, Int d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Int g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  Fraction operator+(const Fraction& o) const {
    return make(num * o.den + o.num * den, den * o.den);
  }
  Fraction operator*(const Fraction& o) const {
    return make(num * o.num, den * o.den);
  }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

// Lagrange interpolant through (xs[i], ys[i]) for i <= degree, evaluated at x.
Fraction interpolate(const std::vector<GrowthSample>& s, int degree, int x) {
  Fraction total;
  for (int i = 0; i <= degree; ++i) {
    Fraction term = Fraction::make(static_cast<Int>(s[i].dim), 1);
    for (int j = 0; j <= degree; ++j) {
      if (j == i) continue;
      term = term * Fraction::make(x - s[j].n, s[i].n - s[j].n);
    }
    total = total + term;
  }
  return total;
}

}  // namespace

LieBasis close_lie_algebra(std::span<const HermitianOp> generators,
                           const ClosureOptions& options) {
  if (generators.empty()) {
    throw std::invalid_argument("close_lie_algebra: empty generator list");
  }
  if (options.max_dim < 1) {
    throw std::invalid_argument("close_lie_algebra: max_dim must be >= 1");
  }
  const int n = generators.front().num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument(
          "close_lie_algebra: generators act on different qubit counts");
    }
  }

  LieBasis basis;
  basis.n = n;
  Accumulator acc(n);
  bool overflow = false;

  auto consider = [&](const HermitianOp& candidate) {
    if (overflow || candidate.is_zero()) return;
    const double residual = orthogonalize(acc, candidate, basis.elements);
    if (residual > options.rank_tol) {
      if (basis.elements.size() >= options.max_dim) {
        overflow = true;
        return;
      }
      basis.min_accepted_residual =
          std::min(basis.min_accepted_residual, residual);
      basis.elements.push_back(acc.gather(1.0 / residual));
    } else {
      basis.max_rejected_residual =
          std::max(basis.max_rejected_residual, residual);
    }
  };

  for (const auto& g : generators) consider(g);
  basis.generator_rank = basis.elements.size();
  for (std::size_t next = 0; next < basis.elements.size() && !overflow;
       ++next) {
    for (const auto& g : generators) {
      // Copy: push_back inside consider may reallocate.
      const HermitianOp element = basis.elements[next];
      consider(bracket(g, element));
      ++basis.brackets_evaluated;
      if (overflow) break;
    }
  }
  basis.closed = !overflow;
  return basis;
}

HermitianOp project(const LieBasis& basis, const HermitianOp& op) {
  HermitianOp out(op.num_qubits());
  std::vector<HermitianOp::Term> terms;
  for (const auto& e : basis.elements) {
    const double c = hs_inner(e, op);
    if (c == 0.0) continue;
    for (const auto& t : e.terms()) terms.push_back({t.string, c * t.coeff});
  }
  return HermitianOp(op.num_qubits(), std::move(terms));
}

double span_residual(const LieBasis& basis, const HermitianOp& op) {
  return (op - project(basis, op)).norm();
}

GrowthRecord growth_function(const std::string& family_id,
                             const FamilyBuilder& family,
                             std::span<const int> n_range,
                             const ClosureOptions& options) {
  GrowthRecord record;
  record.family = family_id;
  for (int n : n_range) {
    GrowthSample s;
    s.n = n;
    try {
      const auto gens = family(n);
      const auto basis = close_lie_algebra(gens, options);
      s.dim = basis.dim();
      s.closed = basis.closed;
      if (!basis.closed) s.error = "max_dim reached before closure";
    } catch (const std::exception& e) {
      s.error = e.what();
    }
    record.samples.push_back(std::move(s));
  }
  return record;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kNonUniversal:
      return "NonUniversal";
    case VerdictKind::kSuperPolynomial:
      return "SuperPolynomial";
    case VerdictKind::kInconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict universality_verdict(const GrowthRecord& record) {
  const auto& s = record.samples;
  if (s.size() < 4) {
    throw std::invalid_argument(
        "universality_verdict: need at least 4 samples, got " +
        std::to_string(s.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].closed || !s[i].error.empty()) {
      throw std::invalid_argument("universality_verdict: sample n=" +
                                  std::to_string(s[i].n) +
                                  " has no valid closure dimension");
    }
    if (i > 0 && s[i].n == s[i - 1].n) {
      throw std::invalid_argument("universality_verdict: repeated n");
    }
  }

  Verdict v;
  v.samples = s;
  const int max_degree = static_cast<int>(s.size() / 2);
  bool all_dominated = true;
  for (int k = 0; k <= max_degree; ++k) {
    InterpolationFit fit;
    fit.degree = k;
    fit.exact = true;
    for (std::size_t i = static_cast<std::size_t>(k) + 1; i < s.size(); ++i) {
      const Fraction p = interpolate(s, k, s[i].n);
      const Fraction diff =
          Fraction::make(static_cast<Int>(s[i].dim), 1) + Fraction{-p.num, p.den};
      fit.deviations.push_back(diff.to_double());
      if (diff.num != 0) fit.exact = false;
      if (diff.num <= 0) all_dominated = false;
    }
    v.fits.push_back(fit);
    if (fit.exact) {
      v.kind = VerdictKind::kNonUniversal;
      v.degree = k;
      return v;
    }
  }
  v.kind = all_dominated ? VerdictKind::kSuperPolynomial
                         : VerdictKind::kInconclusive;
  return v;
}

}  // namespace enuniv

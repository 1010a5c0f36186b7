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

#include "enuniv/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace enuniv {
namespace {

constexpr int kMaxSpins = 8;

double factorial(int k) {
  static const auto table = [] {
    std::array<double, 64> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      t[i] = t[i - 1] * static_cast<double>(i);
    }
    return t;
  }();
  if (k < 0 || k >= static_cast<int>(table.size())) {
    throw std::out_of_range("clebsch_gordan: factorial argument out of range");
  }
  return table[static_cast<std::size_t>(k)];
}

void require_spins(int N) {
  if (N < 1 || N > kMaxSpins) {
    throw std::out_of_range("coupled basis: N must lie in [1, " +
                            std::to_string(kMaxSpins) + "], got " +
                            std::to_string(N));
  }
}

using Path = std::vector<HalfInt>;

std::vector<Path> all_paths(int N) {
  std::vector<Path> paths{{kHalf}};
  for (int k = 1; k < N; ++k) {
    std::vector<Path> next;
    for (const auto& p : paths) {
      for (int step : {-1, 1}) {
        const HalfInt j = p.back() + HalfInt::from_twice(step);
        if (j.twice() < 0) continue;
        Path q = p;
        q.push_back(j);
        next.push_back(std::move(q));
      }
    }
    paths = std::move(next);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

CVector spin_half(HalfInt m) {
  CVector v = CVector::Zero(2);
  v(m.twice() > 0 ? 0 : 1) = 1.0;
  return v;
}

// All M components of the multiplet reached by sequential coupling along
// `path`, keyed by 2M.
std::map<int, CVector> sequential_multiplet(const Path& path) {
  std::map<int, CVector> cur;
  cur[1] = spin_half(kHalf);
  cur[-1] = spin_half(-kHalf);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const HalfInt j1 = path[k - 1];
    const HalfInt j = path[k];
    std::map<int, CVector> next;
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      CVector acc;
      for (int s : {1, -1}) {
        const HalfInt m2 = HalfInt::from_twice(s);
        const HalfInt m1 = m - m2;
        auto it = cur.find(m1.twice());
        if (it == cur.end()) continue;
        const double c = clebsch_gordan(j1, m1, kHalf, m2, j, m);
        if (c == 0.0) continue;
        const CVector term = kron(it->second, spin_half(m2));
        if (acc.size() == 0) {
          acc = c * term;
        } else {
          acc += c * term;
        }
      }
      next[tm] = std::move(acc);
    }
    cur = std::move(next);
  }
  return cur;
}

int principal_of(const Path& path) {
  const auto paths = all_paths(static_cast<int>(path.size()));
  int idx = 0;
  for (const auto& p : paths) {
    if (p.back() != path.back()) continue;
    if (p == path) return idx;
    ++idx;
  }
  throw std::invalid_argument("coupled basis: inadmissible path");
}

CoupledSpinState sequential_state(const Path& path, HalfInt M) {
  const HalfInt J = path.back();
  if (std::abs(M.twice()) > J.twice() || (J.twice() - M.twice()) % 2 != 0) {
    throw std::out_of_range("coupled state: M=" + M.str() +
                            " not in the J=" + J.str() + " multiplet");
  }
  CoupledSpinState s;
  s.N = static_cast<int>(path.size());
  s.path = path;
  s.J = J;
  s.M = M;
  s.principal = principal_of(path);
  s.amplitudes = sequential_multiplet(path).at(M.twice());
  return s;
}

}  // namespace

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
  const int tj1 = j1.twice(), tm1 = m1.twice();
  const int tj2 = j2.twice(), tm2 = m2.twice();
  const int tJ = J.twice(), tM = M.twice();
  if (tj1 < 0 || tj2 < 0 || tJ < 0) return 0.0;
  if (tm1 + tm2 != tM) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) {
    return 0.0;
  }
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tJ + tM) % 2 != 0) {
    return 0.0;
  }
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 + tJ) % 2 != 0) {
    return 0.0;
  }
  // Integer arguments of the Racah formula.
  const int a = (tj1 + tj2 - tJ) / 2;
  const int b = (tj1 - tm1) / 2;
  const int c = (tj2 + tm2) / 2;
  const int d = (tJ - tj2 + tm1) / 2;
  const int e = (tJ - tj1 - tm2) / 2;
  const double pre =
      std::sqrt((tJ + 1) * factorial((tJ + tj1 - tj2) / 2) *
                factorial((tJ - tj1 + tj2) / 2) * factorial(a) /
                factorial((tj1 + tj2 + tJ) / 2 + 1)) *
      std::sqrt(factorial((tJ + tM) / 2) * factorial((tJ - tM) / 2) *
                factorial((tj1 - tm1) / 2) * factorial((tj1 + tm1) / 2) *
                factorial((tj2 - tm2) / 2) * factorial((tj2 + tm2) / 2));
  double sum = 0.0;
  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});
  for (int k = kmin; k <= kmax; ++k) {
    const double den = factorial(k) * factorial(a - k) * factorial(b - k) *
                       factorial(c - k) * factorial(d + k) * factorial(e + k);
    sum += (k % 2 == 0 ? 1.0 : -1.0) / den;
  }
  return pre * sum;
}

std::string CoupledSpinState::label() const {
  std::ostringstream os;
  os << "|" << N << ",";
  if (principal >= 0) {
    os << principal;
  } else {
    os << "(";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i == static_cast<std::size_t>(block_split)) os << ";";
      else if (i > 0) os << " ";
      os << path[i].str();
    }
    os << ")";
  }
  os << "," << J.str() << "," << M.str() << ">";
  return os.str();
}

std::vector<CoupledSpinState> coupled_basis(int N) {
  require_spins(N);
  auto paths = all_paths(N);
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return a.back() < b.back();
  });
  std::vector<CoupledSpinState> out;
  out.reserve(std::size_t{1} << N);
  std::map<int, int> next_principal;
  for (const auto& p : paths) {
    const auto multiplet = sequential_multiplet(p);
    const int principal = next_principal[p.back().twice()]++;
    for (int tm = p.back().twice(); tm >= -p.back().twice(); tm -= 2) {
      CoupledSpinState s;
      s.N = N;
      s.path = p;
      s.J = p.back();
      s.M = HalfInt::from_twice(tm);
      s.principal = principal;
      s.amplitudes = multiplet.at(tm);
      out.push_back(std::move(s));
    }
  }
  return out;
}

int path_count(int N, HalfInt J) {
  require_spins(N);
  int count = 0;
  for (const auto& p : all_paths(N)) count += p.back() == J ? 1 : 0;
  return count;
}

CoupledSpinState coupled_state(int N, int principal, HalfInt J, HalfInt M) {
  require_spins(N);
  int idx = 0;
  for (const auto& p : all_paths(N)) {
    if (p.back() != J) continue;
    if (idx++ == principal) return sequential_state(p, M);
  }
  throw std::out_of_range("coupled_state: no state |" + std::to_string(N) +
                          "," + std::to_string(principal) + "," + J.str() +
                          "," + M.str() + ">");
}

CoupledSpinState with_projection(const CoupledSpinState& state, HalfInt M) {
  if (state.block_split == 0) return sequential_state(state.path, M);
  const auto split = static_cast<std::ptrdiff_t>(state.block_split);
  const Path left(state.path.begin(), state.path.begin() + split);
  const Path right(state.path.begin() + split, state.path.end() - 1);
  return couple_blocks(sequential_state(left, left.back()),
                       sequential_state(right, right.back()), state.J, M);
}

CoupledSpinState couple_blocks(const CoupledSpinState& left,
                               const CoupledSpinState& right, HalfInt J,
                               HalfInt M) {
  if (left.block_split != 0 || right.block_split != 0) {
    throw std::invalid_argument(
        "couple_blocks: nested block coupling is not supported");
  }
  const HalfInt jl = left.J;
  const HalfInt jr = right.J;
  if (J.twice() < std::abs(jl.twice() - jr.twice()) ||
      J.twice() > jl.twice() + jr.twice() || std::abs(M.twice()) > J.twice()) {
    throw std::out_of_range("couple_blocks: inadmissible J=" + J.str() +
                            ", M=" + M.str());
  }
  const auto lm = sequential_multiplet(left.path);
  const auto rm = sequential_multiplet(right.path);
  CoupledSpinState s;
  s.N = left.N + right.N;
  s.path = left.path;
  s.path.insert(s.path.end(), right.path.begin(), right.path.end());
  s.path.push_back(J);
  s.J = J;
  s.M = M;
  s.block_split = left.N;
  s.amplitudes = CVector::Zero(Eigen::Index{1} << s.N);
  for (int t1 = -jl.twice(); t1 <= jl.twice(); t1 += 2) {
    const HalfInt m1 = HalfInt::from_twice(t1);
    const HalfInt m2 = M - m1;
    if (std::abs(m2.twice()) > jr.twice()) continue;
    const double c = clebsch_gordan(jl, m1, jr, m2, J, M);
    if (c == 0.0) continue;
    s.amplitudes += c * kron(lm.at(t1), rm.at(m2.twice()));
  }
  return s;
}

std::vector<std::pair<double, CoupledSpinState>> decompose_product(
    const CoupledSpinState& left, const CoupledSpinState& right) {
  if (left.N + right.N > kMaxSpins) {
    throw std::out_of_range("decompose_product: combined N exceeds 8");
  }
  std::vector<std::pair<double, CoupledSpinState>> out;
  const HalfInt M = left.M + right.M;
  for (int tJ = std::abs(left.J.twice() - right.J.twice());
       tJ <= left.J.twice() + right.J.twice(); tJ += 2) {
    if (std::abs(M.twice()) > tJ) continue;
    const HalfInt J = HalfInt::from_twice(tJ);
    const double c = clebsch_gordan(left.J, left.M, right.J, right.M, J, M);
    if (std::abs(c) < 1e-15) continue;
    out.emplace_back(c, couple_blocks(left, right, J, M));
  }
  return out;
}

CMatrix spin_operator(int N, char alpha) {
  require_spins(N);
  const Eigen::Index dim = Eigen::Index{1} << N;
  CMatrix s = CMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (int q = 0; q < N; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << (N - 1 - q);
      const bool down = (b & bit) != 0;
      switch (alpha) {
        case 'Z':
          s(b, b) += down ? -0.5 : 0.5;
          break;
        case 'X':
          s(b ^ bit, b) += 0.5;
          break;
        case 'Y':
          s(b ^ bit, b) += down ? Complex(0, -0.5) : Complex(0, 0.5);
          break;
        default:
          throw std::invalid_argument("spin_operator: axis must be X, Y or Z");
      }
    }
  }
  return s;
}

CMatrix total_spin_squared(int N) {
  CMatrix s2 = CMatrix::Zero(Eigen::Index{1} << N, Eigen::Index{1} << N);
  for (char a : {'X', 'Y', 'Z'}) {
    const CMatrix s = spin_operator(N, a);
    s2 += s * s;
  }
  return s2;
}

}  // namespace enuniv

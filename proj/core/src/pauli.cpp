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

#include "enuniv/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace enuniv {
namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint64_t site_bit(int n, int site) {
  return std::uint64_t{1} << (n - 1 - site);
}

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) +
                                ": qubit count mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// In-place Walsh-Hadamard transform (unnormalized).
void walsh_hadamard(std::vector<Complex>& f) {
  const std::size_t len = f.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex a = f[j];
        const Complex b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
}

}  // namespace

Complex Phase::value() const {
  switch (power & 3u) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(int n) : PauliString(n, 0, 0) {}

PauliString::PauliString(int n, std::uint64_t x, std::uint64_t z)
    : n_(n), x_(x), z_(z) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  if ((x & ~mask) != 0 || (z & ~mask) != 0) {
    throw std::invalid_argument("PauliString: mask exceeds qubit count");
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  if (!letters.empty() && letters.front() == '+') letters.remove_prefix(1);
  const int n = static_cast<int>(letters.size());
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = site_bit(n, k);
    switch (letters[static_cast<std::size_t>(k)]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("PauliString: bad letter in '" +
                                    std::string(letters) + "'");
    }
  }
  return PauliString(n, x, z);
}

PauliString PauliString::from_sites(
    int n, std::initializer_list<std::pair<int, char>> sites) {
  return from_sites(n, std::span<const std::pair<int, char>>(sites.begin(),
                                                             sites.size()));
}

PauliString PauliString::from_sites(
    int n, std::span<const std::pair<int, char>> sites) {
  std::string letters(static_cast<std::size_t>(n), 'I');
  for (const auto& [site, op] : sites) {
    if (site < 0 || site >= n) {
      throw std::invalid_argument("PauliString: site " + std::to_string(site) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (letters[static_cast<std::size_t>(site)] != 'I') {
      throw std::invalid_argument("PauliString: site listed twice");
    }
    letters[static_cast<std::size_t>(site)] = op;
  }
  return from_letters(letters);
}

char PauliString::letter(int site) const {
  const std::uint64_t bit = site_bit(n_, site);
  const bool xb = (x_ & bit) != 0;
  const bool zb = (z_ & bit) != 0;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) s.push_back(letter(k));
  return s;
}

int PauliString::weight() const { return popcount(x_ | z_); }

PauliString PauliString::from_index(int n, std::uint64_t index) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return PauliString(n, index & mask, (index >> n) & mask);
}

bool PauliString::commutes_with(const PauliString& other) const {
  return ((popcount(x_ & other.z_) + popcount(z_ & other.x_)) & 1) == 0;
}

PauliProduct pauli_mul(const PauliString& p, const PauliString& q) {
  require_same_n(p.num_qubits(), q.num_qubits(), "pauli_mul");
  const std::uint64_t x = p.x_mask() ^ q.x_mask();
  const std::uint64_t z = p.z_mask() ^ q.z_mask();
  const int power = popcount(p.x_mask() & p.z_mask()) +
                    popcount(q.x_mask() & q.z_mask()) +
                    2 * popcount(p.z_mask() & q.x_mask()) - popcount(x & z);
  return {Phase{static_cast<std::uint8_t>(((power % 4) + 4) % 4)},
          PauliString(p.num_qubits(), x, z)};
}

// ---------------------------------------------------------------------------

HermitianOp::HermitianOp(int n) : n_(n) {
  if (n < 1 || n > PauliString::kMaxQubits) {
    throw std::invalid_argument("HermitianOp: bad qubit count");
  }
}

HermitianOp::HermitianOp(int n, std::vector<Term> terms, double drop)
    : n_(n), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    require_same_n(n_, t.string.num_qubits(), "HermitianOp");
  }
  normalize(drop);
}

HermitianOp HermitianOp::identity(int n, double coeff) {
  return HermitianOp(n, {{PauliString(n), coeff}});
}

HermitianOp HermitianOp::single(const PauliString& p, double coeff) {
  return HermitianOp(p.num_qubits(), {{p, coeff}});
}

void HermitianOp::normalize(double drop) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.string < b.string; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().string == t.string) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged,
                [drop](const Term& t) { return std::abs(t.coeff) < drop; });
  terms_ = std::move(merged);
}

double HermitianOp::coeff(const PauliString& p) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const Term& t, const PauliString& s) { return t.string < s; });
  return (it != terms_.end() && it->string == p) ? it->coeff : 0.0;
}

double HermitianOp::norm() const { return std::sqrt(hs_inner(*this, *this)); }

double HermitianOp::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

std::string HermitianOp::to_string(int precision) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    os << std::abs(t.coeff) << "*" << t.string.letters();
    first = false;
  }
  return os.str();
}

HermitianOp& HermitianOp::operator+=(const HermitianOp& other) {
  require_same_n(n_, other.n_, "HermitianOp::+");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize(kDropTolerance);
  return *this;
}

HermitianOp& HermitianOp::operator-=(const HermitianOp& other) {
  require_same_n(n_, other.n_, "HermitianOp::-");
  for (const auto& t : other.terms_) terms_.push_back({t.string, -t.coeff});
  normalize(kDropTolerance);
  return *this;
}

HermitianOp& HermitianOp::operator*=(double s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize(kDropTolerance);
  return *this;
}

HermitianOp bracket(const HermitianOp& a, const HermitianOp& b) {
  require_same_n(a.num_qubits(), b.num_qubits(), "bracket");
  std::vector<HermitianOp::Term> out;
  out.reserve(a.size() * b.size() / 2 + 1);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (ta.string.commutes_with(tb.string)) continue;
      // i(PQ - QP) = 2i PQ = 2i * i^k R with k odd.
      const auto prod = pauli_mul(ta.string, tb.string);
      const double sign = (prod.phase.power == 1) ? -2.0 : 2.0;
      out.push_back({prod.string, sign * ta.coeff * tb.coeff});
    }
  }
  return HermitianOp(a.num_qubits(), std::move(out));
}

double hs_inner(const HermitianOp& a, const HermitianOp& b) {
  require_same_n(a.num_qubits(), b.num_qubits(), "hs_inner");
  double s = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->string < ib->string) {
      ++ia;
    } else if (ib->string < ia->string) {
      ++ib;
    } else {
      s += ia->coeff * ib->coeff;
      ++ia;
      ++ib;
    }
  }
  return s;
}

CMatrix to_matrix(const PauliString& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  CMatrix m = CMatrix::Zero(dim, dim);
  const Complex base = Phase{static_cast<std::uint8_t>(
                                 popcount(p.x_mask() & p.z_mask()) & 3)}
                           .value();
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
    const double sign = (popcount(p.z_mask() & j) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(j ^ p.x_mask()), static_cast<Eigen::Index>(j)) =
        base * sign;
  }
  return m;
}

CMatrix to_matrix(const HermitianOp& a, int dense_limit) {
  const int n = a.num_qubits();
  if (n > dense_limit) {
    throw std::length_error("to_matrix: " + std::to_string(n) +
                            " qubits exceeds the dense limit of " +
                            std::to_string(dense_limit));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const auto& t : a.terms()) {
    const auto& p = t.string;
    const Complex base =
        t.coeff *
        Phase{static_cast<std::uint8_t>(popcount(p.x_mask() & p.z_mask()) & 3)}
            .value();
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
      const double sign = (popcount(p.z_mask() & j) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ p.x_mask()),
        static_cast<Eigen::Index>(j)) += base * sign;
    }
  }
  return m;
}

RVector pauli_coefficients(const CMatrix& m) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("pauli_coefficients: need a 2^n square matrix");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  const auto udim = static_cast<std::uint64_t>(dim);
  RVector coeffs = RVector::Zero(static_cast<Eigen::Index>(udim * udim));
  std::vector<Complex> f(udim);
  // tr(P M) = i^{|x&z|} sum_k (-1)^{z.k} M(k, k^x): a Walsh-Hadamard
  // transform over k for each x.
  for (std::uint64_t x = 0; x < udim; ++x) {
    for (std::uint64_t k = 0; k < udim; ++k) {
      f[k] = m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k ^ x));
    }
    walsh_hadamard(f);
    for (std::uint64_t z = 0; z < udim; ++z) {
      const Complex ph =
          Phase{static_cast<std::uint8_t>(popcount(x & z) & 3)}.value();
      coeffs(static_cast<Eigen::Index>(x | (z << n))) =
          (ph * f[z]).real() / static_cast<double>(udim);
    }
  }
  return coeffs;
}

HermitianOp from_matrix(const CMatrix& m, double drop) {
  const RVector c = pauli_coefficients(m);
  const int n = std::countr_zero(static_cast<std::uint64_t>(m.rows()));
  std::vector<HermitianOp::Term> terms;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::abs(c(i)) >= drop) {
      terms.push_back(
          {PauliString::from_index(n, static_cast<std::uint64_t>(i)), c(i)});
    }
  }
  return HermitianOp(n, std::move(terms), drop);
}

}  // namespace enuniv

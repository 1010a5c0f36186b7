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

#include "enuniv/models.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace enuniv {
namespace {

void require_pair(int n, int i, int j, const char* what) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::invalid_argument(std::string(what) + ": invalid pair (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") on " + std::to_string(n) + " qubits");
  }
}

void require_min_n(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": need n >= " +
                                std::to_string(min) + ", got " +
                                std::to_string(n));
  }
}

HermitianOp two_site(int n, int i, int j, char a, double c) {
  return HermitianOp::single(PauliString::from_sites(n, {{i, a}, {j, a}}), c);
}

std::string pair_label(char prefix, int i, int j) {
  return std::string(1, prefix) + "_" + std::to_string(i + 1) +
         std::to_string(j + 1);
}

// Smallest subspace containing span(p) invariant under every generator.
CMatrix krylov_closure(const CMatrix& p, const std::vector<CMatrix>& gens) {
  CMatrix q = orthonormal_columns(p);
  for (;;) {
    const Eigen::Index before = q.cols();
    for (const auto& g : gens) {
      CMatrix w = g * q;
      for (int pass = 0; pass < 2; ++pass) w -= q * (q.adjoint() * w);
      if (w.norm() < 1e-10) continue;
      const CMatrix extra = orthonormal_columns(w, 1e-9);
      CMatrix next(q.rows(), q.cols() + extra.cols());
      next << q, extra;
      q = orthonormal_columns(next);
    }
    if (q.cols() == before) return q;
  }
}

std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& ms) {
  std::vector<CMatrix> out;
  for (CMatrix m : ms) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : out) m -= (b.conjugate().cwiseProduct(m)).sum() * b;
    }
    const double r = m.norm();
    if (r > 1e-10) out.push_back(m / r);
  }
  return out;
}

std::string ambient_label(const CMatrix& q, CodeFamily family, int n) {
  std::ostringstream os;
  if (family == CodeFamily::kXY) {
    int weight = -1;
    bool single = true;
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      if (q.row(i).norm() < 1e-9) continue;
      const int w = std::popcount(static_cast<std::uint64_t>(i));
      if (weight < 0) weight = w;
      single = single && w == weight;
    }
    if (single) {
      os << "weight-" << weight << " sector";
    } else {
      os << "xy-invariant span";
    }
  } else if (family == CodeFamily::kExchange) {
    CMatrix s2 = CMatrix::Zero(q.rows(), q.rows());
    for (char a : {'X', 'Y', 'Z'}) {
      const CMatrix c = to_matrix(collective(n, a));
      s2 += 0.25 * c * c;
    }
    const CMatrix r = q.adjoint() * s2 * q;
    const double mean = r.trace().real() / static_cast<double>(q.cols());
    const CMatrix dev =
        r - mean * CMatrix::Identity(q.cols(), q.cols());
    if (dev.norm() < 1e-8) {
      const double j = 0.5 * (std::sqrt(1.0 + 4.0 * mean) - 1.0);
      os << "J=" << std::round(2.0 * j) / 2.0 << " multiplicity space";
    } else {
      os << "exchange-invariant span";
    }
  } else {
    os << "product span";
  }
  os << " (dim " << q.cols() << ")";
  return os.str();
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                std::string(s) + "'");
  }
  return v;
}

}  // namespace

Topology parse_topology(std::string_view name) {
  if (name == "all") return Topology::kAllPairs;
  if (name == "chain") return Topology::kChain;
  throw std::invalid_argument("unknown topology '" + std::string(name) +
                              "' (expected all or chain)");
}

std::string to_string(Topology topology) {
  return topology == Topology::kAllPairs ? "all" : "chain";
}

std::vector<std::pair<int, int>> topology_pairs(int n, Topology topology) {
  std::vector<std::pair<int, int>> out;
  if (topology == Topology::kChain) {
    for (int i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
  }
  return out;
}

HermitianOp exchange(int n, int i, int j) {
  require_pair(n, i, j, "exchange");
  HermitianOp e = HermitianOp::identity(n, 0.5);
  for (char a : {'X', 'Y', 'Z'}) e += two_site(n, i, j, a, 0.5);
  return e;
}

HermitianOp xy_coupling(int n, int i, int j) {
  require_pair(n, i, j, "xy_coupling");
  return two_site(n, i, j, 'X', 0.5) + two_site(n, i, j, 'Y', 0.5);
}

HermitianOp collective(int n, char alpha) {
  require_min_n(n, 1, "collective");
  if (alpha != 'X' && alpha != 'Y' && alpha != 'Z') {
    throw std::invalid_argument("collective: axis must be X, Y or Z");
  }
  HermitianOp c(n);
  for (int i = 0; i < n; ++i) {
    c += HermitianOp::single(PauliString::from_sites(n, {{i, alpha}}));
  }
  return c;
}

HermitianOp total_sz(int n) { return 0.5 * collective(n, 'Z'); }

HermitianOp global_flip(int n) {
  require_min_n(n, 1, "global_flip");
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return HermitianOp::single(PauliString(n, all, 0));
}

std::vector<HermitianOp> heisenberg_family(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  require_min_n(n, 2, "heisenberg_family");
  std::vector<HermitianOp> out;
  for (auto [i, j] : pairs) out.push_back(exchange(n, i, j));
  return out;
}

std::vector<HermitianOp> heisenberg_family(int n, Topology topology) {
  require_min_n(n, 2, "heisenberg_family");
  return heisenberg_family(n, topology_pairs(n, topology));
}

std::vector<HermitianOp> xy_family(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  require_min_n(n, 2, "xy_family");
  std::vector<HermitianOp> out;
  for (auto [i, j] : pairs) out.push_back(xy_coupling(n, i, j));
  return out;
}

std::vector<HermitianOp> xy_family(int n, Topology topology) {
  require_min_n(n, 2, "xy_family");
  return xy_family(n, topology_pairs(n, topology));
}

std::vector<HermitianOp> oprime_family(int n) {
  require_min_n(n, 2, "oprime_family");
  std::vector<HermitianOp> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(HermitianOp::single(PauliString::from_sites(n, {{i, 'Z'}})));
  }
  for (int i = 0; i + 1 < n; ++i) out.push_back(two_site(n, i, i + 1, 'X', 1.0));
  return out;
}

std::vector<HermitianOp> collective_family(int n) {
  return {collective(n, 'X'), collective(n, 'Y'), collective(n, 'Z')};
}

std::array<HermitianOp, 4> exchange_h_basis() {
  constexpr int n = 3;
  const auto id = HermitianOp::identity(n);
  auto coupling = [&](int i, int j) { return 2.0 * exchange(n, i, j) - id; };
  const auto e12 = coupling(0, 1);
  const auto e23 = coupling(1, 2);
  const auto e13 = coupling(0, 2);
  std::array<HermitianOp, 4> h;
  h[0] = e12 + e23 + e13;
  h[1] = (1.0 / (4.0 * std::sqrt(3.0))) * (e13 - e23);
  h[3] = (1.0 / 12.0) * (-2.0 * e12 + e23 + e13);
  h[2] = bracket(h[1], h[3]);
  return h;
}

LogicalCode trio_code() {
  LogicalCode code;
  code.n = 3;
  code.family = CodeFamily::kExchange;
  code.label = "code:trio";
  code.codewords = CMatrix::Zero(8, 2);
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  code.codewords(0b010, 0) = r2;
  code.codewords(0b100, 0) = -r2;
  code.codewords(0b001, 1) = std::sqrt(2.0 / 3.0);
  code.codewords(0b010, 1) = -r6;
  code.codewords(0b100, 1) = -r6;
  return code;
}

LogicalCode xy_qutrit_code() {
  LogicalCode code;
  code.n = 3;
  code.family = CodeFamily::kXY;
  code.label = "code:xy-qutrit";
  code.codewords = CMatrix::Zero(8, 3);
  code.codewords(0b100, 0) = 1.0;
  code.codewords(0b010, 1) = 1.0;
  code.codewords(0b001, 2) = 1.0;
  return code;
}

std::vector<LogicalCode> s_n_j_space(int n, int J) {
  if (n < 1 || n > 20) {
    throw std::out_of_range("s_n_j_space: n must lie in [1, 20]");
  }
  if (J < 0 || 2 * J > n) {
    throw std::out_of_range("s_n_j_space: J=" + std::to_string(J) +
                            " outside [0, " + std::to_string(n / 2) + "]");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t all = dim - 1;
  std::vector<std::uint64_t> strings;
  for (std::uint64_t s = dim; s-- > 0;) {
    if (std::popcount(s) == J) strings.push_back(s);
  }
  const std::string base =
      "code:snj:n=" + std::to_string(n) + ",J=" + std::to_string(J);
  const auto rows = static_cast<Eigen::Index>(dim);

  if (2 * J != n) {
    LogicalCode code;
    code.n = n;
    code.family = CodeFamily::kXY;
    code.label = base;
    code.codewords = CMatrix::Zero(rows, static_cast<Eigen::Index>(strings.size()));
    for (std::size_t k = 0; k < strings.size(); ++k) {
      code.codewords(static_cast<Eigen::Index>(strings[k]),
                     static_cast<Eigen::Index>(k)) = 1.0;
    }
    return {code};
  }

  // Doubling: representatives have qubit 0 set, so each X-pair appears once.
  std::vector<std::uint64_t> reps;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (auto s : strings) {
    if (s & top) reps.push_back(s);
  }
  std::vector<LogicalCode> out;
  const double r2 = 1.0 / std::sqrt(2.0);
  for (double sign : {1.0, -1.0}) {
    LogicalCode code;
    code.n = n;
    code.family = CodeFamily::kXY;
    code.label = base + (sign > 0 ? ",sign=+" : ",sign=-");
    code.codewords = CMatrix::Zero(rows, static_cast<Eigen::Index>(reps.size()));
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const auto col = static_cast<Eigen::Index>(k);
      code.codewords(static_cast<Eigen::Index>(reps[k]), col) = r2;
      code.codewords(static_cast<Eigen::Index>(reps[k] ^ all), col) = sign * r2;
    }
    fix_column_phases(code.codewords);
    out.push_back(std::move(code));
  }
  return out;
}

std::vector<HermitianOp> code_generators(const LogicalCode& code) {
  switch (code.family) {
    case CodeFamily::kExchange:
      return heisenberg_family(code.n, Topology::kAllPairs);
    case CodeFamily::kXY:
      return xy_family(code.n, Topology::kAllPairs);
    case CodeFamily::kGeneric:
      break;
  }
  throw std::invalid_argument("code_generators: code '" + code.label +
                              "' has no associated interaction family");
}

ConjoinedSpace conjoin(const LogicalCode& left, const LogicalCode& right) {
  if (left.family != right.family) {
    throw std::invalid_argument("conjoin: incompatible code families (" +
                                to_string(left.family) + " and " +
                                to_string(right.family) + ")");
  }
  const int n = left.n + right.n;
  if (n > kDenseLimit) {
    throw std::length_error("conjoin: joined system exceeds the dense limit");
  }
  ConjoinedSpace out;
  out.left = left;
  out.right = right;
  out.product_basis = kron(left.codewords, right.codewords);
  // Codeword columns of the Kronecker product come out in (a, b) row-major
  // order already.
  if (left.family == CodeFamily::kGeneric) {
    out.ambient = orthonormal_columns(out.product_basis);
  } else {
    LogicalCode joined;
    joined.n = n;
    joined.family = left.family;
    std::vector<CMatrix> gens;
    for (const auto& g : code_generators(joined)) gens.push_back(to_matrix(g));
    out.ambient = krylov_closure(out.product_basis, gens);
  }
  out.ambient_label = ambient_label(out.ambient, left.family, n);
  out.embedding_residual = out_of_span_norm(out.ambient, out.product_basis);
  return out;
}

WitnessTest test_witness(const ConjoinedSpace& space, const HermitianOp& op) {
  LogicalCode product;
  product.n = space.n();
  product.codewords = space.product_basis;
  const auto r = restrict(op, product);
  WitnessTest t;
  t.leakage = r.leakage;
  t.preserves = r.leakage < 1e-9;

  const int a = space.left.dim_L();
  const int b = space.right.dim_L();
  std::vector<CMatrix> local;
  const CMatrix ia = CMatrix::Identity(a, a);
  const CMatrix ib = CMatrix::Identity(b, b);
  for (int p = 0; p < a; ++p) {
    for (int q = 0; q < a; ++q) {
      CMatrix e = CMatrix::Zero(a, a);
      e(p, q) = 1.0;
      local.push_back(kron(e, ib));
    }
  }
  for (int p = 0; p < b; ++p) {
    for (int q = 0; q < b; ++q) {
      CMatrix e = CMatrix::Zero(b, b);
      e(p, q) = 1.0;
      local.push_back(kron(ia, e));
    }
  }
  const auto basis = orthonormalize(local);
  const double nr = r.matrix.norm();
  t.entangling_residual =
      nr < 1e-12 ? 0.0 : matrix_span_residual(basis, r.matrix) / nr;
  t.entangling = t.entangling_residual > 1e-6;
  return t;
}

std::optional<CouplingWitness> coupling_witness(
    const ConjoinedSpace& space, const std::vector<HermitianOp>& generators,
    const std::vector<std::string>& labels, int max_depth,
    std::size_t* tried, bool project_fallback) {
  if (labels.size() != generators.size()) {
    throw std::invalid_argument("coupling_witness: one label per generator");
  }
  std::size_t count = 0;
  std::optional<CouplingWitness> found;
  auto check = [&](const HermitianOp& op, const std::string& expr) {
    ++count;
    if (op.is_zero()) return false;
    const auto t = test_witness(space, op);
    if (t.preserves && t.entangling) {
      found = CouplingWitness{op, expr, t.leakage, t.entangling_residual, count};
      return true;
    }
    return false;
  };
  auto finish = [&]() {
    if (tried != nullptr) *tried = count;
    return found;
  };

  const int n = space.n();
  if (space.left.family == CodeFamily::kXY && n >= 6) {
    const auto a16 = xy_coupling(n, 0, 5);
    const auto a15 = xy_coupling(n, 0, 4);
    const auto a12 = xy_coupling(n, 0, 1);
    if (check(bracket(bracket(a16, a15), a12),
              "[[A_16,A_15],A_12]")) {
      return finish();
    }
  }

  const std::size_t m = generators.size();
  std::vector<std::pair<HermitianOp, std::string>> shallow;
  for (std::size_t i = 0; i < m; ++i) {
    shallow.emplace_back(generators[i], labels[i]);
  }
  if (max_depth >= 1) {
    for (std::size_t i = 0; i < m; ++i) {
      if (check(generators[i], labels[i])) return finish();
    }
  }
  if (max_depth >= 2) {
    std::vector<std::pair<HermitianOp, std::string>> level2;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        auto op = bracket(generators[i], generators[j]);
        std::string expr = "[" + labels[i] + "," + labels[j] + "]";
        if (check(op, expr)) return finish();
        if (!op.is_zero()) level2.emplace_back(std::move(op), std::move(expr));
      }
    }
    if (max_depth >= 3) {
      for (const auto& [op2, expr2] : level2) {
        for (std::size_t k = 0; k < m; ++k) {
          if (check(bracket(op2, generators[k]),
                    "[" + expr2 + "," + labels[k] + "]")) {
            return finish();
          }
        }
      }
    }
    shallow.insert(shallow.end(), level2.begin(), level2.end());
  }
  if (!project_fallback || generators.empty()) return finish();

  // Elements X of the closure with (1 - P P^dagger) X P = 0.
  const LieBasis closure = close_lie_algebra(generators);
  const CMatrix& p = space.product_basis;
  const CMatrix q = CMatrix::Identity(p.rows(), p.rows()) - p * p.adjoint();
  const auto d = static_cast<Eigen::Index>(closure.dim());
  const Eigen::Index len = p.rows() * p.cols();
  RMatrix leak(2 * len, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const CMatrix l =
        q * to_matrix(closure.elements[static_cast<std::size_t>(k)]) * p;
    leak.col(k).head(len) = l.reshaped().real();
    leak.col(k).tail(len) = l.reshaped().imag();
  }
  const RMatrix gram = leak.transpose() * leak;
  const RMatrix keep =
      psd_nullspace(gram, 1e-12 * std::max(1.0, gram.diagonal().maxCoeff()));
  if (keep.cols() == 0) return finish();
  for (const auto& [op, expr] : shallow) {
    RVector c(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      c(k) = hs_inner(closure.elements[static_cast<std::size_t>(k)], op);
    }
    const RVector proj = keep * (keep.transpose() * c);
    HermitianOp x(n);
    for (Eigen::Index k = 0; k < d; ++k) {
      if (std::abs(proj(k)) > kDropTolerance) {
        x += proj(k) * closure.elements[static_cast<std::size_t>(k)];
      }
    }
    if (check(x, "preserving-projection(" + expr + ")")) {
      found->projected = true;
      return finish();
    }
  }
  return finish();
}

std::vector<std::string> family_labels(std::string_view family_id, int n) {
  std::vector<std::string> out;
  const auto colon = family_id.find(':');
  const std::string_view head = family_id.substr(0, colon);
  const Topology topo =
      colon == std::string_view::npos
          ? Topology::kAllPairs
          : parse_topology(family_id.substr(colon + 1));
  if (head == "heisenberg" || head == "xy") {
    const char prefix = head == "xy" ? 'A' : 'E';
    for (auto [i, j] : topology_pairs(n, topo)) {
      out.push_back(pair_label(prefix, i, j));
    }
  } else if (head == "oprime") {
    for (int i = 0; i < n; ++i) out.push_back("Z_" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) {
      out.push_back("X_" + std::to_string(i + 1) + "X_" + std::to_string(i + 2));
    }
  } else if (head == "collective") {
    out = {"C_x", "C_y", "C_z"};
  } else {
    throw std::invalid_argument("unknown family '" + std::string(family_id) +
                                "'");
  }
  return out;
}

FamilyBuilder family_from_id(std::string_view id) {
  if (id == "heisenberg:all" || id == "heisenberg") {
    return [](int n) { return heisenberg_family(n, Topology::kAllPairs); };
  }
  if (id == "heisenberg:chain") {
    return [](int n) { return heisenberg_family(n, Topology::kChain); };
  }
  if (id == "xy:all" || id == "xy") {
    return [](int n) { return xy_family(n, Topology::kAllPairs); };
  }
  if (id == "xy:chain") {
    return [](int n) { return xy_family(n, Topology::kChain); };
  }
  if (id == "oprime") return [](int n) { return oprime_family(n); };
  if (id == "collective") return [](int n) { return collective_family(n); };
  throw std::invalid_argument(
      "unknown family '" + std::string(id) +
      "' (expected heisenberg:all, heisenberg:chain, xy:all, xy:chain, "
      "oprime or collective)");
}

std::vector<LogicalCode> code_from_id(std::string_view id) {
  if (id == "code:trio") return {trio_code()};
  if (id == "code:xy-qutrit") return {xy_qutrit_code()};
  constexpr std::string_view prefix = "code:snj:";
  if (id.substr(0, prefix.size()) == prefix) {
    std::string_view rest = id.substr(prefix.size());
    int n = -1;
    int J = -1;
    int sign = 0;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("code id: expected key=value in '" +
                                    std::string(item) + "'");
      }
      const auto key = item.substr(0, eq);
      const auto value = item.substr(eq + 1);
      if (key == "n") {
        n = parse_int(value, "code id");
      } else if (key == "J") {
        J = parse_int(value, "code id");
      } else if (key == "sign" && (value == "+" || value == "-")) {
        sign = value == "+" ? 1 : -1;
      } else {
        throw std::invalid_argument("code id: unknown field '" +
                                    std::string(item) + "'");
      }
    }
    if (n < 0 || J < 0) {
      throw std::invalid_argument("code id: snj needs n=<int>,J=<int>");
    }
    auto codes = s_n_j_space(n, J);
    if (sign != 0 && codes.size() == 2) {
      return {codes[sign > 0 ? 0 : 1]};
    }
    return codes;
  }
  throw std::invalid_argument(
      "unknown code '" + std::string(id) +
      "' (expected code:trio, code:xy-qutrit or code:snj:n=<n>,J=<J>)");
}

}  // namespace enuniv

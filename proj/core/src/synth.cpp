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

#include "enuniv/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace enuniv {
namespace {

constexpr double kPi = std::numbers::pi;

void require_square_same(const CMatrix& u, const CMatrix& v, const char* what) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

// Period (up to global phase) of t -> exp(i t h) from the eigenvalue gaps,
// or 2 pi when the spectrum is degenerate or incommensurate.
double pulse_period(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& ev = es.eigenvalues();
  double smallest = 0.0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    const double d = ev(i) - ev(0);
    if (d > 1e-9 && (smallest == 0.0 || d < smallest)) smallest = d;
  }
  if (smallest == 0.0) return 2 * kPi;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    const double ratio = (ev(i) - ev(0)) / smallest;
    if (std::abs(ratio - std::round(ratio)) > 1e-9) return 2 * kPi / smallest * 8;
  }
  return 2 * kPi / smallest;
}

double parse_angle(std::string_view s) {
  const std::string str(s);
  auto to_double = [&](const std::string& t) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number");
    return v;
  };
  try {
    const auto pos = str.find("pi");
    if (pos == std::string::npos) return to_double(str);
    double coeff = 1.0;
    if (pos > 0) {
      std::string c = str.substr(0, pos);
      if (c == "-") {
        coeff = -1.0;
      } else {
        if (c.back() != '*') throw std::invalid_argument("bad angle");
        coeff = to_double(c.substr(0, c.size() - 1));
      }
    }
    double den = 1.0;
    const std::string rest = str.substr(pos + 2);
    if (!rest.empty()) {
      if (rest.front() != '/') throw std::invalid_argument("bad angle");
      den = to_double(rest.substr(1));
    }
    return coeff * kPi / den;
  } catch (const std::exception&) {
    throw std::invalid_argument("target: cannot parse angle '" + str + "'");
  }
}

std::vector<std::vector<int>> orderings(int generators, int length) {
  std::vector<std::vector<int>> out;
  if (length == 0) return {{}};
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int g = 0; g < generators; ++g) {
      if (!cur.empty() && cur.back() == g) continue;
      cur.push_back(g);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

struct StartOutcome {
  double distance = 1.0;
  RVector durations;
  std::size_t iterations = 0;
};

}  // namespace

UnitaryMatrix expm_hermitian(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::polar(1.0, t * es.eigenvalues()(i));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

UnitaryMatrix expm_pulse(const HermitianOp& h, double t) {
  return expm_hermitian(to_matrix(h), t);
}

Metric parse_metric(std::string_view name) {
  if (name == "trace") return Metric::kTrace;
  if (name == "operator") return Metric::kOperator;
  if (name == "phase" || name == "phase-invariant") return Metric::kPhaseInvariant;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::kTrace:
      return "trace";
    case Metric::kOperator:
      return "operator";
    case Metric::kPhaseInvariant:
      return "phase-invariant";
  }
  return "trace";
}

double distance(const UnitaryMatrix& u, const UnitaryMatrix& v, Metric metric) {
  require_square_same(u, v, "distance");
  const double n = static_cast<double>(u.rows());
  switch (metric) {
    case Metric::kTrace: {
      const double x = 1.0 - (u.adjoint() * v).trace().real() / n;
      return std::sqrt(std::max(0.0, x));
    }
    case Metric::kPhaseInvariant: {
      const double x = 1.0 - std::abs((u.adjoint() * v).trace()) / n;
      return std::sqrt(std::max(0.0, x));
    }
    case Metric::kOperator: {
      Eigen::JacobiSVD<CMatrix> svd(u - v);
      return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    }
  }
  return 0.0;
}

UnitaryMatrix trotter_sum(const HermitianOp& a, const HermitianOp& b,
                          double alpha, double beta, int p) {
  if (p < 1) throw std::invalid_argument("trotter_sum: p must be >= 1");
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("trotter_sum: qubit count mismatch");
  }
  const UnitaryMatrix step = expm_pulse(a, alpha / p) * expm_pulse(b, beta / p);
  UnitaryMatrix out = UnitaryMatrix::Identity(step.rows(), step.cols());
  for (int k = 0; k < p; ++k) out = out * step;
  return out;
}

UnitaryMatrix trotter_commutator(const HermitianOp& a, const HermitianOp& b,
                                 int p) {
  if (p < 1) throw std::invalid_argument("trotter_commutator: p must be >= 1");
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("trotter_commutator: qubit count mismatch");
  }
  const double s = 1.0 / std::sqrt(static_cast<double>(p));
  const CMatrix am = to_matrix(a);
  const CMatrix bm = to_matrix(b);
  const UnitaryMatrix step = expm_hermitian(am, -s) * expm_hermitian(bm, s) *
                             expm_hermitian(am, s) * expm_hermitian(bm, -s);
  UnitaryMatrix out = UnitaryMatrix::Identity(step.rows(), step.cols());
  for (int k = 0; k < p; ++k) out = out * step;
  return out;
}

UnitaryMatrix realize(const PulseSequence& sequence,
                      const std::vector<CMatrix>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("realize: empty generator set");
  }
  const Eigen::Index dim = generators.front().rows();
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  for (const auto& pulse : sequence.pulses) {
    if (pulse.generator < 0 ||
        pulse.generator >= static_cast<int>(generators.size())) {
      throw std::out_of_range("realize: generator index out of range");
    }
    if (!std::isfinite(pulse.duration)) {
      throw std::invalid_argument("realize: non-finite duration");
    }
    u = expm_hermitian(generators[static_cast<std::size_t>(pulse.generator)],
                       pulse.duration) *
        u;
  }
  return u;
}

std::vector<CMatrix> restricted_generators(
    const std::vector<HermitianOp>& generators, const LogicalCode& code) {
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto r = restrict(generators[k], code);
    if (r.leakage >= 1e-9) {
      throw std::invalid_argument("synthesis: generator " + std::to_string(k) +
                                  " leaks out of the code (leakage " +
                                  std::to_string(r.leakage) + ")");
    }
    out.push_back(0.5 * (r.matrix + r.matrix.adjoint()));
  }
  return out;
}

UnitaryMatrix parse_target(std::string_view spec,
                           const std::vector<CMatrix>& restricted, int dim) {
  const Complex i(0, 1);
  const std::string s(spec);
  if (s == "identity") return UnitaryMatrix::Identity(dim, dim);
  if (s.rfind("pulse:", 0) == 0) {
    const auto colon = s.find(':', 6);
    if (colon == std::string::npos) {
      throw std::invalid_argument("target: expected pulse:<k>:<t>");
    }
    const int k = std::stoi(s.substr(6, colon - 6));
    if (k < 0 || k >= static_cast<int>(restricted.size())) {
      throw std::invalid_argument("target: pulse generator out of range");
    }
    return expm_hermitian(restricted[static_cast<std::size_t>(k)],
                          parse_angle(s.substr(colon + 1)));
  }
  if (dim != 2) {
    throw std::invalid_argument("target '" + s +
                                "' needs a two-dimensional code");
  }
  UnitaryMatrix u(2, 2);
  if (s == "x") {
    u << 0, 1, 1, 0;
  } else if (s == "y") {
    u << 0, -i, i, 0;
  } else if (s == "z") {
    u << 1, 0, 0, -1;
  } else if (s == "h") {
    const double r = 1.0 / std::sqrt(2.0);
    u << r, r, r, -r;
  } else if (s.size() > 3 && s[0] == 'r' && s[2] == ':') {
    const double th = parse_angle(s.substr(3));
    const double c = std::cos(th / 2);
    const double sn = std::sin(th / 2);
    switch (s[1]) {
      case 'x':
        u << c, -i * sn, -i * sn, c;
        break;
      case 'y':
        u << c, -sn, sn, c;
        break;
      case 'z':
        u << std::polar(1.0, -th / 2), 0, 0, std::polar(1.0, th / 2);
        break;
      default:
        throw std::invalid_argument("target: unknown rotation '" + s + "'");
    }
  } else {
    throw std::invalid_argument("target: unknown gate '" + s + "'");
  }
  return u;
}

SimplexResult nelder_mead(const std::function<double(const RVector&)>& f,
                          const RVector& x0, const RVector& step,
                          int max_iterations, double f_target) {
  const Eigen::Index n = x0.size();
  SimplexResult res;
  if (n == 0) {
    res.x = x0;
    res.value = f(x0);
    return res;
  }
  std::vector<RVector> pts;
  std::vector<double> vals;
  pts.push_back(x0);
  for (Eigen::Index k = 0; k < n; ++k) {
    RVector p = x0;
    p(k) += step(k);
    pts.push_back(p);
  }
  for (const auto& p : pts) vals.push_back(f(p));
  std::vector<std::size_t> idx(pts.size());

  int it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second = idx[idx.size() - 2];
    if (vals[best] <= f_target) break;
    double spread = 0.0;
    for (const auto& p : pts) spread = std::max(spread, (p - pts[best]).cwiseAbs().maxCoeff());
    if (spread < 1e-12) break;

    RVector centroid = RVector::Zero(n);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k != worst) centroid += pts[k];
    }
    centroid /= static_cast<double>(n);
    const RVector xr = centroid + (centroid - pts[worst]);
    const double fr = f(xr);
    if (fr < vals[best]) {
      const RVector xe = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const RVector xc = outside ? RVector(centroid + 0.5 * (xr - centroid))
                               : RVector(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = f(xc);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == best) continue;
      pts[k] = pts[best] + 0.5 * (pts[k] - pts[best]);
      vals[k] = f(pts[k]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(vals.begin(), vals.end()) - vals.begin());
  res.x = pts[best];
  res.value = vals[best];
  res.iterations = static_cast<std::size_t>(it);
  return res;
}

SynthesisResult synthesize_sequence(const UnitaryMatrix& target,
                                    const std::vector<CMatrix>& restricted,
                                    const SynthesisOptions& options) {
  if (restricted.empty()) {
    throw std::invalid_argument("synthesize_sequence: empty generator set");
  }
  if (target.rows() != restricted.front().rows()) {
    throw std::invalid_argument(
        "synthesize_sequence: target and code dimensions differ");
  }
  if (options.max_pulses < 0 || options.starts < 1) {
    throw std::invalid_argument("synthesize_sequence: invalid options");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int m = static_cast<int>(restricted.size());
  std::vector<double> periods;
  for (const auto& r : restricted) periods.push_back(pulse_period(r));

  SynthesisResult best;
  best.seed = options.seed;
  best.distance = distance(target, realize({}, restricted), Metric::kPhaseInvariant);
  best.success = best.distance < options.tol;
  best.orderings_tried = 1;
  if (best.success) return best;

  std::uint64_t stream = 0;
  for (int len = 1; len <= options.max_pulses; ++len) {
    const auto orders = orderings(m, len);
    struct Job {
      std::size_t order;
      std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t o = 0; o < orders.size(); ++o) {
      for (int s = 0; s < options.starts; ++s) {
        jobs.push_back({o, derive_seed(options.seed, stream++)});
      }
    }
    auto run = [&](const Job& job) {
      const auto& order = orders[job.order];
      std::mt19937_64 rng(job.seed);
      RVector x0(len);
      RVector step(len);
      for (int k = 0; k < len; ++k) {
        const double period = periods[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        x0(k) = std::uniform_real_distribution<double>(0.0, period)(rng);
        step(k) = 0.25 * period;
      }
      auto objective = [&](const RVector& x) {
        PulseSequence seq;
        for (int k = 0; k < len; ++k) {
          seq.pulses.push_back({order[static_cast<std::size_t>(k)], x(k)});
        }
        const UnitaryMatrix u = realize(seq, restricted);
        const double n = static_cast<double>(u.rows());
        return std::max(0.0, 1.0 - std::abs((target.adjoint() * u).trace()) / n);
      };
      const auto nm = nelder_mead(objective, x0, step, options.max_iterations,
                                  0.01 * options.tol * options.tol);
      StartOutcome out;
      out.distance = std::sqrt(nm.value);
      out.durations = nm.x;
      out.iterations = nm.iterations;
      return out;
    };
    const std::size_t width =
        std::max<std::size_t>(2, std::thread::hardware_concurrency());
    std::vector<StartOutcome> outcomes;
    outcomes.reserve(jobs.size());
    bool out_of_time = false;
    for (std::size_t first = 0; first < jobs.size() && !out_of_time;
         first += width) {
      std::vector<std::future<StartOutcome>> batch;
      for (std::size_t j = first; j < std::min(jobs.size(), first + width); ++j) {
        batch.push_back(std::async(std::launch::async, run, jobs[j]));
      }
      for (auto& f : batch) outcomes.push_back(f.get());
      out_of_time = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count() > options.time_budget_s;
    }
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      const StartOutcome& out = outcomes[j];
      best.iterations += out.iterations;
      ++best.starts_run;
      if (out.distance < best.distance) {
        best.distance = out.distance;
        best.sequence.pulses.clear();
        const auto& order = orders[jobs[j].order];
        for (int k = 0; k < len; ++k) {
          const auto g = static_cast<std::size_t>(order[static_cast<std::size_t>(k)]);
          double t = std::fmod(out.durations(k), periods[g]);
          if (t < 0) t += periods[g];
          best.sequence.pulses.push_back({order[static_cast<std::size_t>(k)], t});
        }
      }
    }
    best.orderings_tried += orders.size();
    // Wrapping durations by a period can change the global phase only.
    best.distance = distance(target, realize(best.sequence, restricted),
                             Metric::kPhaseInvariant);
    best.success = best.distance < options.tol;
    if (best.success) break;
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (elapsed > options.time_budget_s) break;
  }
  return best;
}

}  // namespace enuniv

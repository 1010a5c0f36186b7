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

#include "enuniv/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "enuniv/lie.hpp"
#include "enuniv/models.hpp"
#include "enuniv/rep.hpp"
#include "enuniv/sil.hpp"
#include "enuniv/synth.hpp"

namespace enuniv {
namespace {

using nlohmann::json;

json options_json(const std::string& name, const CommandOptions& o) {
  json j;
  j["name"] = name;
  j["family"] = o.family;
  j["topology"] = o.topology;
  j["code"] = o.code;
  j["input"] = o.input;
  j["target"] = o.target;
  j["metric"] = o.metric;
  j["n"] = o.n;
  j["n_min"] = o.n_min;
  j["n_max"] = o.n_max;
  j["max_pulses"] = o.max_pulses;
  j["trotter_p_max"] = o.trotter_p_max;
  j["tol"] = o.tol ? json(*o.tol) : json(nullptr);
  j["perturb"] = o.perturb;
  return j;
}

AnalysisReport run_guarded(const std::string& name, const CommandOptions& o,
                           const std::function<void(AnalysisReport&)>& body) {
  AnalysisReport report;
  report.command = options_json(name, o);
  report.seed = o.seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const std::exception& e) {
    report.errors.emplace_back(e.what());
  }
  report.timing_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return report;
}

std::string family_id(const CommandOptions& o) {
  if (o.family.empty()) throw std::invalid_argument("--family is required");
  if (!o.topology.empty() && o.family.find(':') == std::string::npos &&
      (o.family == "xy" || o.family == "heisenberg")) {
    return o.family + ":" + to_string(parse_topology(o.topology));
  }
  if (o.family == "xy" || o.family == "heisenberg") return o.family + ":all";
  return o.family;
}

struct ResolvedFamily {
  std::string id;
  FamilyBuilder builder;
  int fixed_n = 0;  ///< Non-zero for custom input.
};

ResolvedFamily resolve_family(const CommandOptions& o) {
  const std::string id = family_id(o);
  if (id == "custom") {
    if (o.input.empty()) {
      throw std::invalid_argument("family 'custom' needs --input <file>");
    }
    auto gens = load_custom_generators(o.input);
    const int n = gens.front().num_qubits();
    return {id,
            [gens, n](int m) {
              if (m != n) {
                throw std::invalid_argument("custom generators act on " +
                                            std::to_string(n) + " qubits");
              }
              return gens;
            },
            n};
  }
  return {id, family_from_id(id), 0};
}

int resolve_n(const CommandOptions& o, const ResolvedFamily& f) {
  const int n = f.fixed_n != 0 && o.n == 0 ? f.fixed_n : o.n;
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  return n;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m, double chop = 1e-12) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Complex z = m(i, j);
      if (std::abs(z.real()) < chop) z.real(0.0);
      if (std::abs(z.imag()) < chop) z.imag(0.0);
      row.push_back(complex_json(z));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bitstring(Eigen::Index index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((index >> (n - 1 - k)) & 1) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

json codewords_json(const LogicalCode& code) {
  json words = json::array();
  for (Eigen::Index c = 0; c < code.codewords.cols(); ++c) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < code.codewords.rows(); ++i) {
      const Complex z = code.codewords(i, c);
      if (std::abs(z) < 1e-12) continue;
      amps.push_back({{"basis", bitstring(i, code.n)},
                      {"amplitude", complex_json(z)}});
    }
    words.push_back(amps);
  }
  return words;
}

// Dimension of the real Lie algebra generated by dense Hermitian matrices
// under i[a, b], and of its traceless part.
std::pair<int, int> dense_lie_dims(const std::vector<CMatrix>& gens) {
  std::vector<CMatrix> basis;
  auto add = [&basis](CMatrix m) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        m -= (b.conjugate().cwiseProduct(m)).sum().real() * b;
      }
    }
    const double r = m.norm();
    if (r < 1e-9) return false;
    basis.push_back(m / r);
    return true;
  };
  for (const auto& g : gens) add(g);
  const std::size_t rank = basis.size();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t g = 0; g < rank; ++g) {
      const CMatrix a = basis[k];
      add(Complex(0, 1) * (a * basis[g] - basis[g] * a));
    }
  }
  if (basis.empty()) return {0, 0};
  const Eigen::Index d = basis.front().rows();
  int traceless = 0;
  std::vector<CMatrix> tl;
  for (const auto& b : basis) {
    CMatrix t = b - (b.trace() / static_cast<double>(d)) *
                        CMatrix::Identity(d, d);
    for (const auto& q : tl) t -= (q.conjugate().cwiseProduct(t)).sum().real() * q;
    if (t.norm() > 1e-9) {
      tl.push_back(t / t.norm());
      ++traceless;
    }
  }
  return {static_cast<int>(basis.size()), traceless};
}

json code_summary(const LogicalCode& code, bool with_generators) {
  json j;
  j["label"] = code.label;
  j["n"] = code.n;
  j["dim_L"] = code.dim_L();
  j["family"] = to_string(code.family);
  j["codewords"] = codewords_json(code);
  if (!with_generators || code.family == CodeFamily::kGeneric) return j;
  const auto gens = code_generators(code);
  const auto labels = family_labels(
      code.family == CodeFamily::kXY ? "xy:all" : "heisenberg:all", code.n);
  json restricted = json::array();
  std::vector<CMatrix> mats;
  double max_leak = 0.0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto r = restrict(gens[k], code);
    restricted.push_back({{"generator", labels[k]},
                          {"matrix", matrix_json(r.matrix)},
                          {"leakage", r.leakage}});
    max_leak = std::max(max_leak, r.leakage);
    if (r.leakage < 1e-9) mats.push_back(0.5 * (r.matrix + r.matrix.adjoint()));
  }
  j["restricted_generators"] = restricted;
  j["max_leakage"] = max_leak;
  const auto [dim, traceless] = dense_lie_dims(mats);
  const int d = code.dim_L();
  j["restricted_lie_dim"] = dim;
  j["generates_su"] = d <= 1 ? json("n/a") : json(traceless >= d * d - 1);
  return j;
}

}  // namespace

json AnalysisReport::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["seed"] = seed;
  j["results"] = results;
  j["residuals"] = residuals;
  j["errors"] = errors;
  j["timing_ms"] = timing_ms;
  return j;
}

AnalysisReport AnalysisReport::from_json(const json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version " +
                                std::to_string(r.schema_version));
  }
  r.command = j.at("command");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.results = j.at("results");
  r.residuals = j.at("residuals");
  r.errors = j.value("errors", std::vector<std::string>{});
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string render_pretty(const AnalysisReport& report) {
  std::ostringstream os;
  os << "command: " << report.command.value("name", std::string("?"))
     << "  seed: " << report.seed << "  time: " << report.timing_ms
     << " ms\n";
  for (const auto& [key, value] : report.results.items()) {
    if (key == "sectors" && value.is_array()) {
      os << "sectors:\n    n_J   d_J   su\n";
      for (const auto& s : value) {
        os << "  " << std::setw(5) << s.at("n_J").get<int>() << " "
           << std::setw(5) << s.at("d_J").get<int>() << "   "
           << s.at("su").dump() << "\n";
      }
      continue;
    }
    std::string text = value.dump();
    if (text.size() > 160) text = text.substr(0, 157) + "...";
    os << key << ": " << text << "\n";
  }
  for (const auto& [key, value] : report.residuals.items()) {
    os << "residual " << key << ": " << value.dump() << "\n";
  }
  for (const auto& e : report.errors) os << "error: " << e << "\n";
  return os.str();
}

std::vector<HermitianOp> parse_custom_generators(const json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    if (n < 1 || n > PauliString::kMaxQubits) {
      throw std::invalid_argument("custom input: n out of range");
    }
    std::vector<HermitianOp> out;
    for (const auto& term : doc.at("terms")) {
      const double coeff = term.at("coeff").get<double>();
      std::vector<std::pair<int, char>> sites;
      for (const auto& p : term.at("paulis")) {
        const int site = p.at("site").get<int>();
        const auto op = p.at("op").get<std::string>();
        if (site < 0 || site >= n) {
          throw std::invalid_argument("custom input: site out of range");
        }
        if (op != "X" && op != "Y" && op != "Z") {
          throw std::invalid_argument("custom input: op must be X, Y or Z");
        }
        sites.emplace_back(site, op[0]);
      }
      out.push_back(HermitianOp::single(
          PauliString::from_sites(n, std::span<const std::pair<int, char>>(sites)),
          coeff));
    }
    if (out.empty()) throw std::invalid_argument("custom input: no terms");
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("custom input: ") + e.what());
  }
}

std::vector<HermitianOp> load_custom_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  return parse_custom_generators(doc);
}

AnalysisReport cmd_closure(const CommandOptions& o) {
  return run_guarded("closure", o, [&](AnalysisReport& r) {
    const auto fam = resolve_family(o);
    const int n = resolve_n(o, fam);
    const auto gens = fam.builder(n);
    ClosureOptions copt;
    if (o.tol) copt.rank_tol = *o.tol;
    const auto basis = close_lie_algebra(gens, copt);
    r.results["family"] = fam.id;
    r.results["n"] = n;
    r.results["dimension"] = basis.dim();
    r.results["closed"] = basis.closed;
    r.results["generator_count"] = gens.size();
    r.results["generator_rank"] = basis.generator_rank;
    r.results["brackets_evaluated"] = basis.brackets_evaluated;
    int max_weight = 0;
    std::size_t terms = 0;
    for (const auto& e : basis.elements) {
      terms += e.size();
      for (const auto& t : e.terms()) {
        max_weight = std::max(max_weight, t.string.weight());
      }
    }
    json preview = json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(8, basis.dim()); ++k) {
      preview.push_back(basis.elements[k].to_string(6));
    }
    r.results["basis_summary"] = {{"total_terms", terms},
                                  {"max_pauli_weight", max_weight},
                                  {"leading_elements", preview}};
    r.residuals["min_accepted"] = std::isfinite(basis.min_accepted_residual)
                                      ? json(basis.min_accepted_residual)
                                      : json(nullptr);
    r.residuals["max_rejected"] = basis.max_rejected_residual;
    if (!basis.closed) r.errors.emplace_back("closure did not terminate");
  });
}

AnalysisReport cmd_decompose(const CommandOptions& o) {
  return run_guarded("decompose", o, [&](AnalysisReport& r) {
    const auto fam = resolve_family(o);
    const int n = resolve_n(o, fam);
    const auto basis = close_lie_algebra(fam.builder(n));
    DecomposeOptions dopt;
    dopt.seed = o.seed;
    if (o.tol) dopt.tol = *o.tol;
    const auto dec = isotypic_decompose(basis, dopt);
    r.results["family"] = fam.id;
    r.results["n"] = n;
    r.results["lie_dimension"] = basis.dim();
    r.results["commutant_dim"] = dec.commutant_dim;
    r.results["draws_used"] = dec.draws_used;
    json sectors = json::array();
    int total = 0;
    double inv = 0.0;
    double fac = 0.0;
    for (const auto& s : dec.sectors) {
      sectors.push_back({{"n_J", s.n_J},
                         {"d_J", s.d_J},
                         {"su", s.n_J <= 1 ? json("n/a")
                                           : json(su_verdict(s, basis))}});
      total += s.n_J * s.d_J;
      inv = std::max(inv, s.invariance_residual);
      fac = std::max(fac, s.factorization_residual);
    }
    r.results["sectors"] = sectors;
    r.results["total_dimension"] = total;
    r.residuals["invariance"] = inv;
    r.residuals["factorization"] = fac;
    r.residuals["min_gap"] = dec.min_gap;
  });
}

AnalysisReport cmd_verdict(const CommandOptions& o) {
  return run_guarded("verdict", o, [&](AnalysisReport& r) {
    const auto fam = resolve_family(o);
    if (o.n_min < 1 || o.n_max < o.n_min) {
      throw std::invalid_argument("need 1 <= --n-min <= --n-max");
    }
    std::vector<int> ns(static_cast<std::size_t>(o.n_max - o.n_min + 1));
    std::iota(ns.begin(), ns.end(), o.n_min);
    ClosureOptions copt;
    if (o.tol) copt.rank_tol = *o.tol;
    const auto record = growth_function(fam.id, fam.builder, ns, copt);
    json samples = json::array();
    for (const auto& s : record.samples) {
      samples.push_back({{"n", s.n}, {"dim", s.dim}, {"closed", s.closed}});
      if (!s.error.empty()) {
        r.errors.push_back("n=" + std::to_string(s.n) + ": " + s.error);
      }
    }
    r.results["family"] = fam.id;
    r.results["samples"] = samples;
    if (!r.errors.empty()) return;
    const auto v = universality_verdict(record);
    r.results["verdict"] = to_string(v.kind);
    r.results["degree"] = v.kind == VerdictKind::kNonUniversal
                              ? json(v.degree)
                              : json(nullptr);
    json fits = json::array();
    for (const auto& f : v.fits) {
      fits.push_back({{"degree", f.degree},
                      {"deviations", f.deviations},
                      {"exact", f.exact}});
    }
    r.results["fits"] = fits;
    r.results["note"] = Verdict::kNote;
  });
}

AnalysisReport cmd_encode(const CommandOptions& o) {
  return run_guarded("encode", o, [&](AnalysisReport& r) {
    if (!o.code.empty()) {
      json codes = json::array();
      double leak = 0.0;
      for (const auto& code : code_from_id(o.code)) {
        auto s = code_summary(code, true);
        leak = std::max(leak, s.value("max_leakage", 0.0));
        codes.push_back(std::move(s));
      }
      r.results["codes"] = codes;
      r.residuals["max_leakage"] = leak;
      return;
    }
    const auto fam = resolve_family(o);
    const int n = resolve_n(o, fam);
    r.results["family"] = fam.id;
    r.results["n"] = n;
    if (fam.id.rfind("xy", 0) == 0 && fam.id != "xy:chain") {
      // Combinatorial sector table: weight-J strings, halved at J = n/2.
      json table = json::array();
      int max_nj = 0;
      for (int J = 0; 2 * J <= n; ++J) {
        json codes = json::array();
        for (const auto& code : s_n_j_space(n, J)) {
          codes.push_back({{"label", code.label}, {"dim_L", code.dim_L()}});
          max_nj = std::max(max_nj, code.dim_L());
        }
        table.push_back({{"J", J}, {"codes", codes}});
      }
      r.results["sector_table"] = table;
      r.results["max_n_J"] = max_nj;
      return;
    }
    const auto basis = close_lie_algebra(fam.builder(n));
    DecomposeOptions dopt;
    dopt.seed = o.seed;
    const auto dec = isotypic_decompose(basis, dopt);
    json codes = json::array();
    for (std::size_t k = 0; k < dec.sectors.size(); ++k) {
      auto code = extract_encoding(dec.sectors[k], 0);
      code.label = fam.id + ":sector" + std::to_string(k);
      auto s = code_summary(code, false);
      s["d_J"] = dec.sectors[k].d_J;
      s["su"] = dec.sectors[k].n_J <= 1
                    ? json("n/a")
                    : json(su_verdict(dec.sectors[k], basis));
      codes.push_back(std::move(s));
    }
    r.results["codes"] = codes;
  });
}

AnalysisReport cmd_conjoin(const CommandOptions& o) {
  return run_guarded("conjoin", o, [&](AnalysisReport& r) {
    const std::string id = o.code.empty() ? "code:xy-qutrit" : o.code;
    const auto codes = code_from_id(id);
    const auto& block = codes.front();
    const auto space = conjoin(block, block);
    const std::string fam =
        block.family == CodeFamily::kXY ? "xy:all" : "heisenberg:all";
    const auto gens = family_from_id(fam)(space.n());
    const auto labels = family_labels(fam, space.n());
    r.results["code"] = block.label;
    r.results["n"] = space.n();
    r.results["product_dim"] = space.product_basis.cols();
    r.results["ambient_dim"] = space.ambient.cols();
    r.results["ambient_label"] = space.ambient_label;
    r.residuals["embedding"] = space.embedding_residual;
    std::size_t tried = 0;
    const auto w = coupling_witness(space, gens, labels, 3, &tried);
    r.results["candidates_tried"] = tried;
    if (!w) {
      r.errors.emplace_back("no preserving entangling witness found");
      return;
    }
    r.results["witness"] = {{"expression", w->expression},
                            {"projected", w->projected},
                            {"operator_terms", w->op.size()}};
    r.residuals["witness_leakage"] = w->leakage;
    r.residuals["witness_entangling"] = w->entangling_residual;
  });
}

AnalysisReport cmd_trotter(const CommandOptions& o) {
  return run_guarded("trotter", o, [&](AnalysisReport& r) {
    HermitianOp a = HermitianOp::single(PauliString::from_letters("X"));
    HermitianOp b = HermitianOp::single(PauliString::from_letters("Z"));
    if (!o.input.empty()) {
      const auto gens = load_custom_generators(o.input);
      if (gens.size() != 2) {
        throw std::invalid_argument("trotter input needs exactly two terms");
      }
      a = gens[0];
      b = gens[1];
    }
    if (o.trotter_p_max < 1) throw std::invalid_argument("p max must be >= 1");
    const Metric metric = parse_metric(o.metric);
    const UnitaryMatrix exact = expm_pulse(a + b, 1.0);
    const UnitaryMatrix exact_comm = expm_pulse(-bracket(a, b), 1.0);
    json rows = json::array();
    double prev = 0.0;
    double worst_ratio = 0.0;
    for (int p = 1; p <= o.trotter_p_max; p *= 2) {
      const double e = distance(trotter_sum(a, b, 1.0, 1.0, p), exact, metric);
      const double ec = distance(trotter_commutator(a, b, p), exact_comm, metric);
      json row = {{"p", p}, {"sum_error", e}, {"commutator_error", ec}};
      if (p > 1 && prev > 0.0) {
        row["ratio"] = e / prev;
        if (p > 16) worst_ratio = std::max(worst_ratio, e / prev);
      }
      rows.push_back(row);
      prev = e;
    }
    r.results["metric"] = to_string(metric);
    r.results["rows"] = rows;
    r.residuals["worst_ratio_p_ge_16"] = worst_ratio;
  });
}

AnalysisReport cmd_synthesize(const CommandOptions& o) {
  return run_guarded("synthesize", o, [&](AnalysisReport& r) {
    const std::string id = o.code.empty() ? "code:trio" : o.code;
    const auto code = code_from_id(id).front();
    const auto gens = code_generators(code);
    const auto labels = family_labels(
        code.family == CodeFamily::kXY ? "xy:all" : "heisenberg:all", code.n);
    const auto restricted = restricted_generators(gens, code);
    const UnitaryMatrix target =
        parse_target(o.target, restricted, code.dim_L());
    SynthesisOptions sopt;
    sopt.max_pulses = o.max_pulses;
    sopt.seed = o.seed;
    sopt.time_budget_s = o.time_budget_s;
    if (o.tol) sopt.tol = *o.tol;
    const auto res = synthesize_sequence(target, restricted, sopt);
    json seq = json::array();
    for (const auto& p : res.sequence.pulses) {
      seq.push_back({{"generator", p.generator},
                     {"label", labels[static_cast<std::size_t>(p.generator)]},
                     {"duration", p.duration}});
    }
    const double recomputed =
        distance(target, realize(res.sequence, restricted),
                 Metric::kPhaseInvariant);
    r.results["code"] = code.label;
    r.results["target"] = o.target;
    r.results["sequence"] = seq;
    r.results["pulses"] = res.sequence.pulses.size();
    r.results["success"] = res.success;
    r.results["tol"] = sopt.tol;
    r.results["iterations"] = res.iterations;
    r.results["orderings_tried"] = res.orderings_tried;
    r.results["starts_run"] = res.starts_run;
    r.residuals["distance"] = res.distance;
    r.residuals["recomputed_distance"] = recomputed;
    if (!res.success) {
      std::ostringstream os;
      os << "tolerance " << sopt.tol << " not met; best distance "
         << res.distance;
      r.errors.push_back(os.str());
    }
  });
}

AnalysisReport cmd_sil(const CommandOptions& o) {
  return run_guarded("sil", o, [&](AnalysisReport& r) {
    const double tol = o.tol.value_or(1e-9);
    const auto built = build_sil(default_sil_spec());
    UnitaryMatrix u = built.U;
    if (o.perturb != 0.0) u = perturb(u, o.perturb, o.seed);
    const auto rep = verify_sil(u);
    json cases = json::array();
    for (std::size_t k = 0; k < rep.case_labels.size(); ++k) {
      cases.push_back(
          {{"label", rep.case_labels[k]}, {"residual", rep.case_residuals[k]}});
    }
    json sectors = json::array();
    for (const auto& s : built.sectors) {
      sectors.push_back({{"J", s.J.str()},
                         {"n_J", s.n_J},
                         {"constrained", s.constrained}});
    }
    r.results["dimension"] = u.rows();
    r.results["cases"] = cases;
    r.results["multiplicity_blocks"] = sectors;
    r.results["perturbation"] = o.perturb;
    r.results["passes"] = rep.passes(tol);
    r.results["tol"] = tol;
    r.residuals["unitarity"] = rep.unitarity;
    r.residuals["commutator_x"] = rep.commutators[0];
    r.residuals["commutator_y"] = rep.commutators[1];
    r.residuals["commutator_z"] = rep.commutators[2];
    r.residuals["worst_case"] = rep.worst_case();
    r.residuals["worst_constraint"] =
        rep.constraint_residuals.empty()
            ? 0.0
            : *std::max_element(rep.constraint_residuals.begin(),
                                rep.constraint_residuals.end());
    r.residuals["consistency"] = built.consistency_residual;
    if (o.perturb == 0.0 && !rep.passes(tol)) {
      r.errors.emplace_back("SIL verification failed");
    }
  });
}

AnalysisReport run_command(const std::string& name, const CommandOptions& o) {
  if (name == "closure") return cmd_closure(o);
  if (name == "decompose") return cmd_decompose(o);
  if (name == "verdict") return cmd_verdict(o);
  if (name == "encode") return cmd_encode(o);
  if (name == "conjoin") return cmd_conjoin(o);
  if (name == "trotter") return cmd_trotter(o);
  if (name == "synthesize") return cmd_synthesize(o);
  if (name == "sil") return cmd_sil(o);
  return run_guarded(name, o, [&](AnalysisReport&) {
    throw std::invalid_argument("unknown command '" + name + "'");
  });
}

}  // namespace enuniv

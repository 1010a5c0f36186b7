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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "enuniv/report.hpp"

namespace {

constexpr const char* kIds = R"(Identifiers:
  families: heisenberg:all | heisenberg:chain | xy:all | xy:chain | oprime |
            collective | custom (with --input FILE)
  codes:    code:trio | code:xy-qutrit | code:snj:n=<n>,J=<J>[,sign=+|-]
  targets:  identity | x | y | z | h | rx:<a> | ry:<a> | rz:<a> | pulse:<k>:<t>
            (angles: decimals, pi, pi/<d>, <c>*pi/<d>)
)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-algebraic universality analysis of interaction families"};
  app.footer(kIds);
  app.require_subcommand(1);
  app.fallthrough();

  enuniv::CommandOptions opt;
  std::string json_path;
  bool pretty = false;
  double tol = 0.0;

  app.add_option("--json", json_path, "Write the JSON report to this path");
  app.add_flag("--pretty", pretty, "Print a readable summary instead of JSON");
  app.add_option("--seed", opt.seed, "Seed for randomized steps");
  app.add_option("--tol", tol, "Override the command's tolerance");

  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "Family identifier");
    sub->add_option("--topology", opt.topology, "all | chain (for xy/heisenberg)");
    sub->add_option("--input", opt.input, "Custom generator JSON file");
  };

  auto* closure = app.add_subcommand("closure", "Lie closure dimension");
  family_opts(closure);
  closure->add_option("--n", opt.n, "Qubit count");

  auto* decompose = app.add_subcommand("decompose", "Isotypic sectors");
  family_opts(decompose);
  decompose->add_option("--n", opt.n, "Qubit count");

  auto* verdict = app.add_subcommand("verdict", "Growth function verdict");
  family_opts(verdict);
  verdict->add_option("--n-min", opt.n_min, "Smallest n");
  verdict->add_option("--n-max", opt.n_max, "Largest n");

  auto* encode = app.add_subcommand("encode", "Code summary or sector table");
  family_opts(encode);
  encode->add_option("--n", opt.n, "Qubit count");
  encode->add_option("--code", opt.code, "Code identifier");

  auto* conjoin = app.add_subcommand("conjoin", "Join two copies of a code");
  conjoin->add_option("--code", opt.code, "Code identifier");

  auto* trotter = app.add_subcommand("trotter", "Product formula errors");
  trotter->add_option("--input", opt.input, "Two-term custom JSON file");
  trotter->add_option("--metric", opt.metric, "trace | operator | phase");
  trotter->add_option("--p-max", opt.trotter_p_max, "Largest step count");

  auto* synth = app.add_subcommand("synthesize", "Pulse sequence search");
  synth->add_option("--code", opt.code, "Code identifier");
  synth->add_option("--target", opt.target, "Target gate");
  synth->add_option("--max-pulses", opt.max_pulses, "Longest sequence");
  synth->add_option("--time-budget", opt.time_budget_s, "Seconds");

  auto* sil = app.add_subcommand("sil", "Build and verify the leak-swap unitary");
  sil->add_option("--perturb", opt.perturb, "Add a seeded perturbation");

  CLI11_PARSE(app, argc, argv);
  if (app.count("--tol") > 0) opt.tol = tol;

  const auto* sub = app.get_subcommands().front();
  const auto report = enuniv::run_command(sub->get_name(), opt);
  const auto doc = report.to_json();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  }
  if (pretty) {
    std::cout << enuniv::render_pretty(report);
  } else if (json_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  }
  for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
  return report.exit_code();
}

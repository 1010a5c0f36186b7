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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enuniv/pauli.hpp"
#include "json.hpp"

namespace enuniv {

inline constexpr int kSchemaVersion = 1;

/// Inputs shared by every command. Unset optionals take the module default.
struct CommandOptions {
  std::string family;
  std::string topology;  ///< Appended to bare "xy" / "heisenberg" family ids.
  std::string code;
  std::string input;     ///< Custom Hamiltonian file for family "custom".
  std::string target = "rz:pi/2";
  std::string metric = "trace";
  int n = 0;
  int n_min = 2;
  int n_max = 6;
  int max_pulses = 4;
  int trotter_p_max = 128;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  double perturb = 0.0;
  double time_budget_s = 300.0;
};

struct AnalysisReport {
  int schema_version = kSchemaVersion;
  nlohmann::json command = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();
  std::vector<std::string> errors;
  double timing_ms = 0.0;

  [[nodiscard]] bool ok() const { return errors.empty(); }
  [[nodiscard]] int exit_code() const { return ok() ? 0 : 1; }
  [[nodiscard]] nlohmann::json to_json() const;
  /// Throws nlohmann::json::exception on a malformed document and
  /// std::invalid_argument on a schema version mismatch.
  static AnalysisReport from_json(const nlohmann::json& j);
};

/// Short human-readable rendering of a report.
std::string render_pretty(const AnalysisReport& report);

/**
 * Custom generator file: {"n": int, "terms": [{"coeff": real, "paulis":
 * [{"site": int, "op": "X|Y|Z"}]}]}. Each term becomes one generator.
 * Throws std::invalid_argument on malformed input.
 */
std::vector<HermitianOp> parse_custom_generators(const nlohmann::json& doc);
std::vector<HermitianOp> load_custom_generators(const std::string& path);

// Each command records its inputs, catches exceptions as error entries and
// never throws.
AnalysisReport cmd_closure(const CommandOptions& options);
AnalysisReport cmd_decompose(const CommandOptions& options);
AnalysisReport cmd_verdict(const CommandOptions& options);
AnalysisReport cmd_encode(const CommandOptions& options);
AnalysisReport cmd_conjoin(const CommandOptions& options);
AnalysisReport cmd_trotter(const CommandOptions& options);
AnalysisReport cmd_synthesize(const CommandOptions& options);
AnalysisReport cmd_sil(const CommandOptions& options);

/// Dispatches by subcommand name; an unknown name yields an error report.
AnalysisReport run_command(const std::string& name,
                           const CommandOptions& options);

}  // namespace enuniv

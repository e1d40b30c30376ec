// Copyright (c) 2026 The lebesgue-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lebesgue_lab/compact_set.hpp"
#include "lebesgue_lab/interp_matrix.hpp"
#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

inline constexpr const char* kSchema = "lebesgue-lab/1";
/// Generator behind every random choice; reported in outputs.
inline constexpr const char* kGenerator = "std::mt19937_64";

enum class Command { growth, converge, faber_check, porosity, oracle };
enum class Format { csv, json };

struct ExperimentConfig {
  Command command = Command::growth;
  /// chebyshev | equispaced | nested:<nodes-file> | <matrix-file>
  std::string matrix_spec = "chebyshev";
  /// <set-file> | geometric:<ratio>:<depth> | cantor:<depth>:<middle-fraction>
  std::optional<std::string> set_spec;
  std::optional<std::pair<Real, Real>> interval;
  int n_max = 10;
  std::vector<std::string> functions;
  std::optional<std::string> basis_file;
  std::optional<std::string> nodes_file;
  /// Porosity query points; all interval endpoints when empty.
  std::vector<Real> points;
  Format format = Format::csv;
  std::uint64_t seed = 0;
};

/// Parses "growth", "converge", "faber-check", "porosity", "oracle".
Command parse_command(const std::string& name);
std::string command_name(Command c);

/// X from the config: the set spec, else the interval, else [-1, 1].
CompactSet resolve_set(const ExperimentConfig& config);
/// Matrix with at least `rows` rows. Built-in schemes are mapped affinely
/// from [-1, 1] onto [min X, max X] when X is wider than a point.
InterpolationMatrix resolve_matrix(const ExperimentConfig& config, const CompactSet& x_set,
                                   int rows);

/// Writes the report for `config` to `out`. Throws InputError, DomainError or
/// NumericalError; negative verdicts are part of the report, not errors.
void run_experiment(const ExperimentConfig& config, std::ostream& out);

/// run_experiment with errors mapped to exit codes: 0 success, 2 input
/// error, 3 numerical failure. Diagnostics go to `err`.
int run_and_report(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Description of every CSV column and JSON key, for --help.
std::string output_field_documentation();

}  // namespace lebesgue_lab

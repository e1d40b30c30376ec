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

#include <stdexcept>
#include <string>

namespace lebesgue_lab {

/// Arithmetic kernel. Every module computes in this type; swapping it for a
/// wider floating type is a one-line change here.
using Real = double;

/// Tolerance constants shared across modules. Nothing else in the library
/// hard-codes a cutoff.
namespace tol {

/// Coefficients below this fraction of the largest coefficient count as zero
/// when computing degrees.
inline constexpr Real degree_trim = 1e-12;

/// Node comparison for matrices read back from text files.
inline constexpr Real file_node_match = 1e-12;

/// Width of the bracket at which local refinement of a sampled maximum stops.
inline constexpr Real refinement = 1e-8;

/// Relative tie window when choosing the smallest maximizer.
inline constexpr Real argmax_tie = 1e-12;

/// Zero test for basis polynomials at nodes, relative to max coefficient.
inline constexpr Real zero_pattern = 1e-9;

/// Residual cutoff for node recovery by deflation.
inline constexpr Real recovery_residual = 1e-8;

/// Highest polynomial degree accepted by node recovery.
inline constexpr int recovery_max_degree = 12;

/// Agreement tolerance for projection-chain and commutation checks.
inline constexpr Real chain = 1e-8;

/// Slack in the Lebesgue-lemma inequality check.
inline constexpr Real lemma_slack = 1e-8;

/// Coefficientwise agreement for rescaled-basis comparisons.
inline constexpr Real rescale_match = 1e-9;

/// Porosity estimates within this band over the last grid refinements are
/// reported as converged.
inline constexpr Real porosity_stability = 0.02;

}  // namespace tol

/// Invalid argument to a mathematical operation (duplicate nodes, empty set,
/// non-finite input, point outside a set).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input file or configuration. `line` is 1-based, 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A computation produced a non-finite or otherwise unusable result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lebesgue_lab

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

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

/// A real function known in closed form or by its values on finitely many
/// points. Evaluation outside a table throws DomainError.
class SampledFunction {
 public:
  static SampledFunction closed_form(std::string name, std::function<Real(Real)> f);
  static SampledFunction tabulated(std::string name, std::vector<std::pair<Real, Real>> table);

  /// sum_i coeffs[i] x^i
  static SampledFunction polynomial(std::vector<Real> coeffs);
  /// Continuous bump max(0, 1 - |x - center| / half_width): 1 at `center`,
  /// 0 outside (center - half_width, center + half_width).
  static SampledFunction hat(Real center, Real half_width);

  Real operator()(Real x) const;
  const std::string& name() const { return name_; }
  bool is_tabulated() const { return !table_.empty(); }

 private:
  SampledFunction() = default;

  std::string name_;
  std::function<Real(Real)> closed_;
  std::vector<std::pair<Real, Real>> table_;  // sorted by point
};

/// Registry lookup. Accepted names:
///   abs, runge (1/(1+25x^2)), exp, step (0 below -0.1, 1 above 0.1, linear between),
///   poly:c0,c1,...  (monomial coefficients, constant first),
///   hat:center,half_width.
/// Throws InputError for anything else.
SampledFunction registry_function(std::string_view spec);

/// Names of the parameter-free registry entries, sorted.
std::vector<std::string> registry_names();

}  // namespace lebesgue_lab

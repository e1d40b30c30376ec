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

#include "lebesgue_lab/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lebesgue_lab {

namespace {

std::vector<Real> parse_reals(std::string_view text, std::string_view spec) {
  std::vector<Real> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Real v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw InputError("bad number '" + item + "' in function '" + std::string(spec) + "'");
    out.push_back(v);
  }
  return out;
}

std::string format_reals(const std::vector<Real>& v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

SampledFunction SampledFunction::closed_form(std::string name, std::function<Real(Real)> f) {
  SampledFunction s;
  s.name_ = std::move(name);
  s.closed_ = std::move(f);
  return s;
}

SampledFunction SampledFunction::tabulated(std::string name,
                                           std::vector<std::pair<Real, Real>> table) {
  if (table.empty()) throw DomainError("tabulated function needs at least one point");
  std::sort(table.begin(), table.end());
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i].first == table[i - 1].first)
      throw DomainError("tabulated function lists a point twice");
  }
  SampledFunction s;
  s.name_ = std::move(name);
  s.table_ = std::move(table);
  return s;
}

SampledFunction SampledFunction::polynomial(std::vector<Real> coeffs) {
  std::string name = "poly:" + format_reals(coeffs);
  return closed_form(std::move(name), [c = std::move(coeffs)](Real x) {
    Real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  });
}

SampledFunction SampledFunction::hat(Real center, Real half_width) {
  if (!(half_width > 0)) throw DomainError("hat function needs a positive half width");
  return closed_form("hat:" + format_reals({center, half_width}), [=](Real x) {
    return std::max<Real>(0, 1 - std::abs(x - center) / half_width);
  });
}

Real SampledFunction::operator()(Real x) const {
  if (closed_) {
    const Real v = closed_(x);
    if (!std::isfinite(v)) throw DomainError(name_ + " is not finite at the requested point");
    return v;
  }
  auto it = std::lower_bound(table_.begin(), table_.end(), x,
                             [](const auto& entry, Real v) { return entry.first < v; });
  if (it == table_.end() || it->first != x) {
    std::ostringstream os;
    os.precision(17);
    os << name_ << " has no value at x = " << x;
    throw DomainError(os.str());
  }
  return it->second;
}

SampledFunction registry_function(std::string_view spec) {
  if (spec == "abs") return SampledFunction::closed_form("abs", [](Real x) { return std::abs(x); });
  if (spec == "runge")
    return SampledFunction::closed_form("runge", [](Real x) { return 1 / (1 + 25 * x * x); });
  if (spec == "exp") return SampledFunction::closed_form("exp", [](Real x) { return std::exp(x); });
  if (spec == "step") {
    return SampledFunction::closed_form("step", [](Real x) {
      return std::clamp<Real>((x + 0.1) / 0.2, 0, 1);
    });
  }
  if (spec.starts_with("poly:")) {
    auto c = parse_reals(spec.substr(5), spec);
    if (c.empty()) throw InputError("poly: needs at least one coefficient");
    return SampledFunction::polynomial(std::move(c));
  }
  if (spec.starts_with("hat:")) {
    auto p = parse_reals(spec.substr(4), spec);
    if (p.size() != 2 || !(p[1] > 0))
      throw InputError("hat: needs center,half_width with half_width > 0");
    return SampledFunction::hat(p[0], p[1]);
  }
  throw InputError("unknown function '" + std::string(spec) + "'");
}

std::vector<std::string> registry_names() { return {"abs", "exp", "runge", "step"}; }

}  // namespace lebesgue_lab

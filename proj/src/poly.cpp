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

#include "lebesgue_lab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lebesgue_lab {

namespace {

void require_finite(Real x) {
  if (!std::isfinite(x)) throw DomainError("evaluation point is not finite");
}

std::optional<int> trimmed_degree(std::span<const Real> coeffs) {
  Real scale = 0;
  for (Real c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) return std::nullopt;
  const Real cutoff = tol::degree_trim * scale;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (std::abs(coeffs[k]) >= cutoff) return k;
  }
  return std::nullopt;
}

}  // namespace

MonomialForm::MonomialForm(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NewtonForm::NewtonForm(std::vector<Real> nodes, std::vector<Real> coeffs)
    : nodes_(std::move(nodes)), coeffs_(std::move(coeffs)) {
  if (nodes_.size() != coeffs_.size())
    throw DomainError("Newton form needs one coefficient per node");
  if (nodes_.empty()) throw DomainError("Newton form needs at least one node");
  require_distinct(nodes_, "Newton nodes");
}

BarycentricForm::BarycentricForm(std::vector<Real> nodes, std::vector<Real> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size())
    throw DomainError("barycentric form needs one value per node");
  if (nodes_.empty()) throw DomainError("barycentric form needs at least one node");
  weights_ = barycentric_weights(nodes_);
}

void require_distinct(std::span<const Real> nodes, const char* what) {
  std::vector<Real> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (Real x : sorted) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + " contain a non-finite value");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError(std::string(what) + " are not pairwise distinct");
}

std::vector<Real> barycentric_weights(std::span<const Real> nodes) {
  require_distinct(nodes);
  const std::size_t m = nodes.size();
  std::vector<Real> w(m, 1.0);
  for (std::size_t k = 0; k < m; ++k) {
    Real prod = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != k) prod *= nodes[k] - nodes[j];
    }
    w[k] = 1 / prod;
    if (!std::isfinite(w[k]) || w[k] == 0)
      throw NumericalError("barycentric weight out of floating-point range");
  }
  return w;
}

std::vector<Real> newton_coefficients(std::span<const Real> nodes, std::span<const Real> values) {
  if (nodes.size() != values.size()) throw DomainError("one value per node required");
  require_distinct(nodes);
  std::vector<Real> d(values.begin(), values.end());
  const std::size_t m = d.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (nodes[i] - nodes[i - j]);
    }
  }
  return d;
}

Real evaluate(const MonomialForm& p, Real x) {
  require_finite(x);
  Real acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real evaluate(const NewtonForm& p, Real x) {
  require_finite(x);
  const auto c = p.coeffs();
  const auto nodes = p.nodes();
  Real acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * (x - nodes[k]) + c[k];
  return acc;
}

Real evaluate(const BarycentricForm& p, Real x) {
  require_finite(x);
  const auto nodes = p.nodes();
  const auto w = p.weights();
  const auto v = p.values();
  Real num = 0;
  Real den = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (x == nodes[k]) return v[k];
    const Real t = w[k] / (x - nodes[k]);
    num += t * v[k];
    den += t;
  }
  return num / den;
}

Real evaluate(const PolynomialForm& p, Real x) {
  return std::visit([x](const auto& form) { return evaluate(form, x); }, p);
}

MonomialForm to_monomial(const NewtonForm& p) {
  const auto c = p.coeffs();
  const auto nodes = p.nodes();
  // Horner in coefficient space: acc <- acc * (x - x_k) + c_k.
  std::vector<Real> acc{c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    std::vector<Real> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= nodes[k] * acc[i];
    }
    next[0] += c[k];
    acc = std::move(next);
  }
  return MonomialForm(std::move(acc));
}

NewtonForm to_newton(const BarycentricForm& p) {
  std::vector<Real> nodes(p.nodes().begin(), p.nodes().end());
  auto coeffs = newton_coefficients(nodes, p.values());
  return NewtonForm(std::move(nodes), std::move(coeffs));
}

MonomialForm to_monomial(const BarycentricForm& p) { return to_monomial(to_newton(p)); }

MonomialForm to_monomial(const PolynomialForm& p) {
  return std::visit(
      [](const auto& form) -> MonomialForm {
        if constexpr (std::is_same_v<std::decay_t<decltype(form)>, MonomialForm>) {
          return form;
        } else {
          return to_monomial(form);
        }
      },
      p);
}

std::optional<int> degree(const MonomialForm& p) { return trimmed_degree(p.coeffs()); }

// Newton polynomials are monic with deg pi_k = k - 1, so the degree is the
// index of the last significant Newton coefficient.
std::optional<int> degree(const NewtonForm& p) { return trimmed_degree(p.coeffs()); }

std::optional<int> degree(const BarycentricForm& p) { return degree(to_newton(p)); }

std::optional<int> degree(const PolynomialForm& p) {
  return std::visit([](const auto& form) { return degree(form); }, p);
}

Real max_coeff_magnitude(const PolynomialForm& p) {
  Real scale = 0;
  const MonomialForm m = to_monomial(p);
  for (Real c : m.coeffs()) scale = std::max(scale, std::abs(c));
  return scale;
}

PolynomialForm scaled(const PolynomialForm& p, Real lambda) {
  auto times = [lambda](std::span<const Real> v) {
    std::vector<Real> out(v.begin(), v.end());
    for (Real& c : out) c *= lambda;
    return out;
  };
  if (const auto* m = std::get_if<MonomialForm>(&p)) return MonomialForm(times(m->coeffs()));
  if (const auto* n = std::get_if<NewtonForm>(&p)) {
    return NewtonForm(std::vector<Real>(n->nodes().begin(), n->nodes().end()), times(n->coeffs()));
  }
  const auto& b = std::get<BarycentricForm>(p);
  return BarycentricForm(std::vector<Real>(b.nodes().begin(), b.nodes().end()), times(b.values()));
}

}  // namespace lebesgue_lab

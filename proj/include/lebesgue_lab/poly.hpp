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

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

/// Polynomial as coefficients of 1, x, x^2, ... Trailing zeros are stripped on
/// construction; the zero polynomial has no coefficients.
class MonomialForm {
 public:
  MonomialForm() = default;
  explicit MonomialForm(std::vector<Real> coeffs);

  std::span<const Real> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

 private:
  std::vector<Real> coeffs_;
};

/// Polynomial sum_k c_k * pi_k with pi_1 = 1 and pi_k(x) = prod_{j<k} (x - x_j).
/// The last node never enters evaluation but is kept so that the form carries
/// the full node sequence it was built from.
class NewtonForm {
 public:
  NewtonForm(std::vector<Real> nodes, std::vector<Real> coeffs);

  std::span<const Real> nodes() const { return nodes_; }
  std::span<const Real> coeffs() const { return coeffs_; }

 private:
  std::vector<Real> nodes_;
  std::vector<Real> coeffs_;
};

/// Interpolating polynomial stored by nodes, values and barycentric weights
/// w_k = 1 / prod_{j != k} (x_k - x_j).
class BarycentricForm {
 public:
  BarycentricForm(std::vector<Real> nodes, std::vector<Real> values);

  std::span<const Real> nodes() const { return nodes_; }
  std::span<const Real> weights() const { return weights_; }
  std::span<const Real> values() const { return values_; }

 private:
  std::vector<Real> nodes_;
  std::vector<Real> weights_;
  std::vector<Real> values_;
};

using PolynomialForm = std::variant<MonomialForm, NewtonForm, BarycentricForm>;

// Throws DomainError naming `what` if two nodes coincide.
void require_distinct(std::span<const Real> nodes, const char* what = "nodes");

/// Barycentric weights for distinct nodes. Throws DomainError on duplicates
/// and NumericalError if a weight over- or underflows.
std::vector<Real> barycentric_weights(std::span<const Real> nodes);

/// Newton coefficients f[x_1..x_k], k = 1..m, by the standard recursion.
std::vector<Real> newton_coefficients(std::span<const Real> nodes, std::span<const Real> values);

Real evaluate(const MonomialForm& p, Real x);
Real evaluate(const NewtonForm& p, Real x);
/// Second barycentric formula; returns the stored value exactly at a node.
Real evaluate(const BarycentricForm& p, Real x);
Real evaluate(const PolynomialForm& p, Real x);

MonomialForm to_monomial(const NewtonForm& p);
MonomialForm to_monomial(const BarycentricForm& p);
MonomialForm to_monomial(const PolynomialForm& p);
NewtonForm to_newton(const BarycentricForm& p);

/// Degree after trimming trailing coefficients below tol::degree_trim times
/// the largest magnitude. std::nullopt means the zero polynomial.
std::optional<int> degree(const MonomialForm& p);
std::optional<int> degree(const NewtonForm& p);
std::optional<int> degree(const BarycentricForm& p);
std::optional<int> degree(const PolynomialForm& p);

/// Largest monomial coefficient magnitude (0 for the zero polynomial).
Real max_coeff_magnitude(const PolynomialForm& p);

/// lambda * p in the same representation.
PolynomialForm scaled(const PolynomialForm& p, Real lambda);

}  // namespace lebesgue_lab

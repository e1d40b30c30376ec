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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lebesgue_lab/compact_set.hpp"
#include "lebesgue_lab/functions.hpp"
#include "lebesgue_lab/interp_matrix.hpp"
#include "lebesgue_lab/poly.hpp"
#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

/// Candidate Faber basis p_1, ..., p_N. A valid candidate has deg p_k = k - 1.
struct BasisCandidate {
  std::vector<PolynomialForm> polys;
  std::optional<NodeSequence> claimed_nodes;
};

/// First 1-based k whose polynomial is zero or has degree other than k - 1.
std::optional<std::size_t> degree_pattern_violation(const BasisCandidate& basis);

enum class DividedDifferenceMethod { explicit_sum, recursive };

/// entries[k - 1] = f[x_1, ..., x_k].
struct DividedDifferenceTable {
  std::vector<Real> nodes;
  std::vector<Real> entries;
};

DividedDifferenceTable divided_differences(
    std::span<const Real> nodes, std::span<const Real> values,
    DividedDifferenceMethod method = DividedDifferenceMethod::recursive);
DividedDifferenceTable divided_differences(
    const SampledFunction& f, const NodeSequence& nodes,
    DividedDifferenceMethod method = DividedDifferenceMethod::recursive);

/// pi_k = prod_{j < k} (x - x_j), pi_1 = 1. Needs k >= 1 and at least k - 1 nodes.
NewtonForm newton_basis(const NodeSequence& nodes, int k);
/// pi_k / pi_k(x_k). Needs at least k nodes.
PolynomialForm lagrange_basis(const NodeSequence& nodes, int k);

/// First `count` Newton (resp. normalized Lagrange) basis polynomials.
BasisCandidate newton_basis_candidate(const NodeSequence& nodes, int count);
BasisCandidate lagrange_basis_candidate(const NodeSequence& nodes, int count);

/// sum_{k=1}^{n} f[x_1..x_k] pi_k, the interpolant of f at x_1..x_n.
NewtonForm partial_sum(const SampledFunction& f, int n, const NodeSequence& nodes);

struct InterpolatingVerdict {
  bool pass = true;
  // First violation, 1-based; j == k means p_k(x_k) vanished.
  std::size_t k = 0;
  std::size_t j = 0;
  Real value = 0;
  Real scale = 0;
};

/// Zero pattern p_k(x_j) = 0 for j < k and p_k(x_k) != 0, both relative to
/// the largest monomial coefficient of p_k. Violations are reported in
/// lexicographic (k, j) order.
InterpolatingVerdict check_interpolating(const BasisCandidate& basis, const NodeSequence& nodes);

struct NodeRecovery {
  bool ok = false;
  /// x_1..x_{N-1} for an N-polynomial basis (x_N is not determined by p_1..p_N).
  std::vector<Real> nodes;
  /// |p_{k+1}(x_k)| / max coefficient, per recovered node.
  std::vector<Real> residuals;
  std::string failure;
};

/// x_k is the zero of p_{k+1} left after deflating by x_1..x_{k-1}. Fails on a
/// broken degree pattern, a zero pattern the deflation cannot confirm, a
/// repeated node, a root outside `ambient`, or degree above
/// tol::recovery_max_degree.
NodeRecovery recover_nodes(const BasisCandidate& basis,
                           std::optional<Interval> ambient = std::nullopt);

/// p_k -> lambdas[k-1] * p_k. Throws DomainError on a zero multiplier.
BasisCandidate rescale_basis(const BasisCandidate& basis, std::span<const Real> lambdas);

/// n-th partial sum sum_{k<=n} y_k p_k of an interpolating basis, the y_k
/// solving the triangular interpolation system at x_1..x_n.
MonomialForm basis_partial_sum(const BasisCandidate& basis, const NodeSequence& nodes,
                               const SampledFunction& f, int n);

struct PartialSumComparison {
  bool equal = false;
  std::vector<Real> lambdas;       // a_k = lambdas[k-1] * b_k
  std::size_t first_mismatch = 0;  // 1-based k, 0 if none
  Real max_coeff_deviation = 0;    // relative to max |coeff a_k|
  /// Max |S_n^a f - S_n^b f| over fs, n and sample points; only when both
  /// bases are interpolating with `nodes`, otherwise NaN.
  Real max_partial_sum_deviation = 0;
};

PartialSumComparison partial_sums_equal(const BasisCandidate& a, const BasisCandidate& b,
                                        const NodeSequence& nodes,
                                        std::span<const SampledFunction> fs);

struct ChainWitness {
  int n = 0;
  std::string function;
  Real x = 0;
  Real deviation = 0;
};

struct ChainReport {
  int max_degree = 0;  // conditions certified for degrees <= max_degree only
  bool chain = true;        // L_n(L_{n+1} f) == L_n f
  bool commutation = true;  // L_n L_{n+1} f == L_{n+1} L_n f
  bool degrees = true;      // deg L_n f >= deg L_{n-1} f
  std::optional<ChainWitness> chain_witness;
  std::optional<ChainWitness> commutation_witness;
  std::optional<ChainWitness> degree_witness;  // x unused; deviation = deg drop
  bool all() const { return chain && commutation && degrees; }
};

/// Projection-chain, commutation and degree-monotonicity conditions for
/// degrees 0..max_degree (rows 1..max_degree + 1), at 2 * max_degree + 3
/// equispaced points of the ambient interval.
ChainReport projection_chain_check(const InterpolationMatrix& m,
                                   std::span<const SampledFunction> fs, int max_degree);

/// Hat function equal to 1 at the first node of row n + 1 missing from row
/// n + 2 and vanishing at every node of row n + 2. Throws DomainError when
/// row n + 1 is contained in row n + 2.
SampledFunction chain_breaking_function(const InterpolationMatrix& m, int n);

/// Max over 100 points of the node hull of |L f - partial_sum(f, n + 1)|,
/// both built on the first n + 1 nodes.
Real newton_lagrange_equivalence(const SampledFunction& f, const NodeSequence& nodes, int n);

}  // namespace lebesgue_lab

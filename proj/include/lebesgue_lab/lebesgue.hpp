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
#include <functional>
#include <span>
#include <vector>

#include "lebesgue_lab/compact_set.hpp"
#include "lebesgue_lab/functions.hpp"
#include "lebesgue_lab/interp_matrix.hpp"
#include "lebesgue_lab/poly.hpp"
#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

// Indexing: the degree-n operator L_n interpolates at the n + 1 nodes of
// matrix row n + 1. Functions taking a bare `row` use all of its nodes.

/// Row of nodes used by L_n.
std::span<const Real> degree_row(const InterpolationMatrix& m, int n);

/// Fundamental polynomials l_k(x) of the row, barycentrically. Exact
/// Kronecker pattern at a node. Throws DomainError on duplicate nodes.
std::vector<Real> fundamental_values(std::span<const Real> row, Real x);

/// Interpolant of f at the row nodes. Throws DomainError if f cannot be
/// evaluated at a node.
BarycentricForm lagrange_interpolant(const SampledFunction& f, std::span<const Real> row);

/// sum_k |l_k(x)|; exactly 1 at nodes.
Real lebesgue_function(std::span<const Real> row, Real x);

struct SupOracle {
  Real value;
  std::vector<int> signs;  // maximizing +-1 pattern, first found in enumeration order
};

/// max over sign vectors s of |sum_k s_k l_k(x)|, with l_k from the raw
/// product formula. Refuses rows longer than 20 nodes.
SupOracle lebesgue_sup_oracle(std::span<const Real> row, Real x);

struct Maximum {
  Real value = 0;
  Real argmax = 0;
};

/// Supremum of a nonnegative function over X. `breakpoints` split interval
/// components into segments on which g is smooth; each segment is sampled at
/// `samples_per_segment` Chebyshev-Lobatto points and the best sample is
/// refined by Brent's parabolic search to a bracket of tol::refinement. Ties
/// within tol::argmax_tie go to the smallest x.
Maximum maximize_over_set(const CompactSet& x_set, std::span<const Real> breakpoints,
                          std::size_t samples_per_segment, const std::function<Real(Real)>& g);

/// Lebesgue constant of the row over X, with the smallest maximizer.
Maximum lebesgue_constant(std::span<const Real> row, const CompactSet& x_set);

/// Sampling density used for a row of `nodes` points: 8 * nodes, at least 16.
std::size_t samples_for(std::size_t nodes);

/// max over the given +-1 patterns f of ||L f||_X. Never exceeds the Lebesgue
/// constant; equals it when every pattern is supplied.
Real operator_norm_probe(std::span<const Real> row, const CompactSet& x_set,
                         std::span<const std::vector<int>> patterns);

/// Same, drawing `trials` patterns from std::mt19937_64(seed) (bit k of one
/// draw is the sign of node k). When trials >= 2^(nodes) and the row has at
/// most 20 nodes, all patterns are enumerated instead.
Real operator_norm_probe(std::span<const Real> row, const CompactSet& x_set, int trials,
                         std::uint64_t seed);

/// sup over X of |f - L_n f|, L_n taken from matrix row n + 1.
Real uniform_error(const SampledFunction& f, const InterpolationMatrix& m, int n,
                   const CompactSet& x_set);

/// Upper bound for the best uniform approximation error E_n(f) on X: the
/// error on X of the degree-n Chebyshev interpolant on [min X, max X].
Real best_approx_upper_bound(const SampledFunction& f, int n, const CompactSet& x_set);

struct LemmaCheck {
  bool pass = false;
  Real error = 0;       // ||f - L_n f||_X
  Real lambda = 0;      // Lambda_n over X
  Real best_bound = 0;  // upper bound for E_n(f)
  /// (1 + lambda) * best_bound - error; the check passes when >= -tol::lemma_slack.
  Real slack = 0;
};

LemmaCheck lebesgue_lemma_check(const SampledFunction& f, const InterpolationMatrix& m, int n,
                                const CompactSet& x_set);

struct ProfileRow {
  int n = 0;
  Real lambda = 0;
  Real argmax = 0;
  Real lambda_at_nodes_max = 0;
  Real ratio_log = 0;                // lambda / ln(n + 1)
  std::vector<Real> errors;          // one per function, input order
  std::vector<Real> best_bounds;     // one per function
  std::vector<Real> lambda_at_probes;
};

/// Rows n = 1..n_max of Lambda_n, uniform errors and pointwise Lebesgue
/// function values at `probes` (which need not lie in X).
std::vector<ProfileRow> convergence_profile(std::span<const SampledFunction> fs,
                                            const InterpolationMatrix& m,
                                            const CompactSet& x_set, int n_max,
                                            std::span<const Real> probes = {});

}  // namespace lebesgue_lab

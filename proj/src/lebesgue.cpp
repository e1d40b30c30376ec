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

#include "lebesgue_lab/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include <boost/math/tools/minima.hpp>

namespace lebesgue_lab {

namespace {

// Nodes with precomputed weights; evaluates all fundamental polynomials at once.
class Cardinals {
 public:
  explicit Cardinals(std::span<const Real> row)
      : nodes_(row.begin(), row.end()), weights_(barycentric_weights(row)) {}

  // First barycentric form l(x) * w_k / (x - x_k). Every term of the Lebesgue
  // sum is then nonnegative, so nothing cancels. The node polynomial l(x) is
  // kept as mantissa and binary exponent to stay clear of under- and overflow.
  void values(Real x, std::vector<Real>& out) const {
    out.assign(nodes_.size(), 0.0);
    if (const auto k = node_index(x)) {
      out[*k] = 1;
      return;
    }
    const auto [mant, exp] = node_polynomial(x);
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      out[k] = std::ldexp(mant * (weights_[k] / (x - nodes_[k])), exp);
  }

  Real lebesgue(Real x) const {
    if (node_index(x)) return 1;
    const auto [mant, exp] = node_polynomial(x);
    Real sum = 0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum += std::abs(weights_[k] / (x - nodes_[k]));
    return std::ldexp(std::abs(mant) * sum, exp);
  }

  std::size_t size() const { return nodes_.size(); }
  std::span<const Real> nodes() const { return nodes_; }

 private:
  std::optional<std::size_t> node_index(Real x) const {
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      if (x == nodes_[k]) return k;
    return std::nullopt;
  }

  std::pair<Real, int> node_polynomial(Real x) const {
    Real mant = 1;
    int exp = 0;
    for (Real t : nodes_) {
      int e = 0;
      mant = std::frexp(mant * (x - t), &e);
      exp += e;
    }
    return {mant, exp};
  }

  std::vector<Real> nodes_;
  std::vector<Real> weights_;
};

Real product_cardinal(std::span<const Real> row, std::size_t k, Real x) {
  Real v = 1;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != k) v *= (x - row[j]) / (row[k] - row[j]);
  }
  return v;
}

}  // namespace

std::span<const Real> degree_row(const InterpolationMatrix& m, int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  return m.row(static_cast<std::size_t>(n) + 1);
}

std::vector<Real> fundamental_values(std::span<const Real> row, Real x) {
  if (!std::isfinite(x)) throw DomainError("evaluation point is not finite");
  std::vector<Real> out;
  Cardinals(row).values(x, out);
  return out;
}

BarycentricForm lagrange_interpolant(const SampledFunction& f, std::span<const Real> row) {
  std::vector<Real> values;
  values.reserve(row.size());
  for (Real x : row) values.push_back(f(x));
  return BarycentricForm(std::vector<Real>(row.begin(), row.end()), std::move(values));
}

Real lebesgue_function(std::span<const Real> row, Real x) {
  if (!std::isfinite(x)) throw DomainError("evaluation point is not finite");
  return Cardinals(row).lebesgue(x);
}

SupOracle lebesgue_sup_oracle(std::span<const Real> row, Real x) {
  constexpr std::size_t max_nodes = 20;
  if (row.size() > max_nodes)
    throw DomainError("sign enumeration refused for rows longer than 20 nodes");
  require_distinct(row);
  std::vector<Real> ell(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) ell[k] = product_cardinal(row, k, x);

  SupOracle best{-1, {}};
  const std::uint64_t patterns = std::uint64_t{1} << row.size();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    Real s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += (mask >> k & 1U) ? -ell[k] : ell[k];
    if (std::abs(s) > best.value) {
      best.value = std::abs(s);
      best_mask = mask;
    }
  }
  for (std::size_t k = 0; k < row.size(); ++k) best.signs.push_back((best_mask >> k & 1U) ? -1 : 1);
  return best;
}

std::size_t samples_for(std::size_t nodes) { return std::max<std::size_t>(16, 8 * nodes); }

Maximum maximize_over_set(const CompactSet& x_set, std::span<const Real> breakpoints,
                          std::size_t samples_per_segment, const std::function<Real(Real)>& g) {
  std::vector<Real> cuts(breakpoints.begin(), breakpoints.end());
  std::sort(cuts.begin(), cuts.end());
  const std::size_t m = std::max<std::size_t>(samples_per_segment, 3);
  const int bits = std::numeric_limits<Real>::digits / 2;

  Maximum best;
  bool have = false;
  auto consider = [&](Real x, Real v) {
    if (!std::isfinite(v)) throw NumericalError("non-finite value while maximizing over X");
    if (!have || v > best.value + tol::argmax_tie * std::max<Real>(1, std::abs(best.value))) {
      best = {v, x};
      have = true;
    }
  };

  std::vector<Real> xs(m);
  for (const auto& iv : x_set.intervals()) {
    if (iv.degenerate()) {
      consider(iv.lo, g(iv.lo));
      continue;
    }
    std::vector<Real> ends{iv.lo};
    for (Real c : cuts) {
      if (c > iv.lo && c < iv.hi) ends.push_back(c);
    }
    ends.push_back(iv.hi);
    for (std::size_t s = 0; s + 1 < ends.size(); ++s) {
      const Real a = ends[s];
      const Real b = ends[s + 1];
      std::size_t arg = 0;
      Real top = -1;
      for (std::size_t i = 0; i < m; ++i) {
        Real x = a + (b - a) * (1 - std::cos(std::numbers::pi * i / (m - 1))) / 2;
        if (i == 0) x = a;
        if (i == m - 1) x = b;
        xs[i] = x;
        const Real v = g(x);
        if (v > top) {
          top = v;
          arg = i;
        }
      }
      Real where = xs[arg];
      const Real lo = xs[arg == 0 ? 0 : arg - 1];
      const Real hi = xs[std::min(arg + 1, m - 1)];
      if (hi - lo > tol::refinement) {
        std::uintmax_t iters = 200;
        auto r = boost::math::tools::brent_find_minima([&](Real x) { return -g(x); }, lo, hi,
                                                       bits, iters);
        if (-r.second > top) {
          top = -r.second;
          where = r.first;
        }
      }
      consider(where, top);
    }
  }
  return best;
}

Maximum lebesgue_constant(std::span<const Real> row, const CompactSet& x_set) {
  const Cardinals card(row);
  return maximize_over_set(x_set, row, samples_for(row.size()),
                           [&](Real x) { return card.lebesgue(x); });
}

Real operator_norm_probe(std::span<const Real> row, const CompactSet& x_set,
                         std::span<const std::vector<int>> patterns) {
  const Cardinals card(row);
  std::vector<Real> ell;
  Real best = 0;
  for (const auto& s : patterns) {
    if (s.size() != row.size()) throw DomainError("sign pattern length must match the row");
    const Maximum mx = maximize_over_set(x_set, row, samples_for(row.size()), [&](Real x) {
      card.values(x, ell);
      Real acc = 0;
      for (std::size_t k = 0; k < ell.size(); ++k) acc += s[k] * ell[k];
      return std::abs(acc);
    });
    best = std::max(best, mx.value);
  }
  return best;
}

Real operator_norm_probe(std::span<const Real> row, const CompactSet& x_set, int trials,
                         std::uint64_t seed) {
  if (trials < 1) throw DomainError("operator norm probe needs at least one trial");
  const std::size_t m = row.size();
  std::vector<std::vector<int>> patterns;
  auto from_bits = [m](std::uint64_t bits) {
    std::vector<int> s(m);
    for (std::size_t k = 0; k < m; ++k) s[k] = (bits >> (k % 64) & 1U) ? -1 : 1;
    return s;
  };
  if (m <= 20 && static_cast<std::uint64_t>(trials) >= (std::uint64_t{1} << m)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      patterns.push_back(from_bits(mask));
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      std::vector<int> s(m);
      std::uint64_t bits = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (k % 64 == 0) bits = rng();
        s[k] = (bits >> (k % 64) & 1U) ? -1 : 1;
      }
      patterns.push_back(std::move(s));
    }
  }
  return operator_norm_probe(row, x_set, patterns);
}

Real uniform_error(const SampledFunction& f, const InterpolationMatrix& m, int n,
                   const CompactSet& x_set) {
  const auto row = degree_row(m, n);
  const BarycentricForm p = lagrange_interpolant(f, row);
  return maximize_over_set(x_set, row, samples_for(row.size()), [&](Real x) {
           return std::abs(f(x) - evaluate(p, x));
         }).value;
}

Real best_approx_upper_bound(const SampledFunction& f, int n, const CompactSet& x_set) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  const Real a = x_set.min();
  const Real b = x_set.max();
  if (a == b) return 0;
  std::vector<Real> nodes = chebyshev_row(n + 1);
  for (Real& t : nodes) t = 0.5 * (a + b) + 0.5 * (b - a) * t;
  const BarycentricForm p = lagrange_interpolant(f, nodes);
  return maximize_over_set(x_set, nodes, samples_for(nodes.size()), [&](Real x) {
           return std::abs(f(x) - evaluate(p, x));
         }).value;
}

LemmaCheck lebesgue_lemma_check(const SampledFunction& f, const InterpolationMatrix& m, int n,
                                const CompactSet& x_set) {
  LemmaCheck c;
  c.error = uniform_error(f, m, n, x_set);
  c.lambda = lebesgue_constant(degree_row(m, n), x_set).value;
  c.best_bound = best_approx_upper_bound(f, n, x_set);
  c.slack = (1 + c.lambda) * c.best_bound - c.error;
  c.pass = c.slack >= -tol::lemma_slack;
  return c;
}

std::vector<ProfileRow> convergence_profile(std::span<const SampledFunction> fs,
                                            const InterpolationMatrix& m,
                                            const CompactSet& x_set, int n_max,
                                            std::span<const Real> probes) {
  if (n_max < 1 || static_cast<std::size_t>(n_max) + 1 > m.size())
    throw DomainError("n_max must satisfy 1 <= n_max <= rows - 1");
  std::vector<ProfileRow> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto row = degree_row(m, n);
    const Cardinals card(row);
    ProfileRow r;
    r.n = n;
    const Maximum mx = lebesgue_constant(row, x_set);
    r.lambda = mx.value;
    r.argmax = mx.argmax;
    for (Real x : row) r.lambda_at_nodes_max = std::max(r.lambda_at_nodes_max, card.lebesgue(x));
    r.ratio_log = r.lambda / std::log(n + 1.0);
    for (const auto& f : fs) {
      r.errors.push_back(uniform_error(f, m, n, x_set));
      r.best_bounds.push_back(best_approx_upper_bound(f, n, x_set));
    }
    for (Real x : probes) r.lambda_at_probes.push_back(card.lebesgue(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lebesgue_lab

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

#include "lebesgue_lab/faber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lebesgue_lab/lebesgue.hpp"

namespace lebesgue_lab {

namespace {

BarycentricForm interpolate(std::span<const Real> row, const auto& g) {
  std::vector<Real> values;
  values.reserve(row.size());
  for (Real x : row) values.push_back(g(x));
  return BarycentricForm(std::vector<Real>(row.begin(), row.end()), std::move(values));
}

std::vector<Real> sample_points(Real lo, Real hi, int count) {
  std::vector<Real> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) xs[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return xs;
}

Real coeff_at(std::span<const Real> c, std::size_t i) { return i < c.size() ? c[i] : 0; }

// Synthetic division by (x - r); returns the remainder q(r).
Real deflate(std::vector<Real>& c, Real r) {
  if (c.empty()) return 0;
  Real carry = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    const Real v = c[i] + carry * r;
    c[i] = carry;
    carry = v;
  }
  // c[i] is now the quotient coefficient of x^i; the top slot is zero.
  c.pop_back();
  return carry;
}

}  // namespace

std::optional<std::size_t> degree_pattern_violation(const BasisCandidate& basis) {
  for (std::size_t k = 1; k <= basis.polys.size(); ++k) {
    const auto d = degree(basis.polys[k - 1]);
    if (!d || *d != static_cast<int>(k) - 1) return k;
  }
  return std::nullopt;
}

DividedDifferenceTable divided_differences(std::span<const Real> nodes,
                                           std::span<const Real> values,
                                           DividedDifferenceMethod method) {
  require_distinct(nodes);
  if (nodes.size() != values.size()) throw DomainError("one value per node required");
  DividedDifferenceTable t{std::vector<Real>(nodes.begin(), nodes.end()), {}};
  if (method == DividedDifferenceMethod::recursive) {
    t.entries = newton_coefficients(nodes, values);
    return t;
  }
  for (std::size_t k = 1; k <= nodes.size(); ++k) {
    Real sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      Real denom = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != j) denom *= nodes[j] - nodes[i];
      }
      sum += values[j] / denom;
    }
    t.entries.push_back(sum);
  }
  return t;
}

DividedDifferenceTable divided_differences(const SampledFunction& f, const NodeSequence& nodes,
                                           DividedDifferenceMethod method) {
  std::vector<Real> values;
  for (Real x : nodes.points()) values.push_back(f(x));
  return divided_differences(nodes.points(), values, method);
}

NewtonForm newton_basis(const NodeSequence& nodes, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > nodes.size() + 1)
    throw DomainError("Newton polynomial index out of range");
  const auto n = static_cast<std::size_t>(k);
  std::vector<Real> x;
  if (nodes.size() >= n) {
    x.assign(nodes.points().begin(), nodes.points().begin() + k);
  } else {
    // Only k - 1 nodes enter pi_k; pad with a distinct placeholder.
    x.assign(nodes.points().begin(), nodes.points().end());
    Real pad = 1;
    for (Real v : x) pad = std::max(pad, std::abs(v) + 1);
    x.push_back(pad);
  }
  std::vector<Real> c(n, 0.0);
  c.back() = 1;
  return NewtonForm(std::move(x), std::move(c));
}

PolynomialForm lagrange_basis(const NodeSequence& nodes, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > nodes.size())
    throw DomainError("Lagrange basis index out of range");
  const auto head = nodes.head(static_cast<std::size_t>(k));
  Real at_node = 1;
  for (int j = 0; j + 1 < k; ++j) at_node *= head[k - 1] - head[j];
  std::vector<Real> c(static_cast<std::size_t>(k), 0.0);
  c.back() = 1 / at_node;
  return NewtonForm(std::vector<Real>(head.begin(), head.end()), std::move(c));
}

BasisCandidate newton_basis_candidate(const NodeSequence& nodes, int count) {
  BasisCandidate b;
  for (int k = 1; k <= count; ++k) b.polys.emplace_back(newton_basis(nodes, k));
  b.claimed_nodes = nodes;
  return b;
}

BasisCandidate lagrange_basis_candidate(const NodeSequence& nodes, int count) {
  BasisCandidate b;
  for (int k = 1; k <= count; ++k) b.polys.push_back(lagrange_basis(nodes, k));
  b.claimed_nodes = nodes;
  return b;
}

NewtonForm partial_sum(const SampledFunction& f, int n, const NodeSequence& nodes) {
  if (n < 1) throw DomainError("partial sum needs n >= 1");
  const auto head = nodes.head(static_cast<std::size_t>(n));
  std::vector<Real> values;
  for (Real x : head) values.push_back(f(x));
  auto t = divided_differences(head, values);
  return NewtonForm(std::move(t.nodes), std::move(t.entries));
}

InterpolatingVerdict check_interpolating(const BasisCandidate& basis, const NodeSequence& nodes) {
  if (nodes.size() < basis.polys.size())
    throw DomainError("need at least as many nodes as basis polynomials");
  InterpolatingVerdict v;
  for (std::size_t k = 1; k <= basis.polys.size(); ++k) {
    const auto& p = basis.polys[k - 1];
    const Real scale = max_coeff_magnitude(p);
    const Real cutoff = tol::zero_pattern * scale;
    for (std::size_t j = 1; j <= k; ++j) {
      const Real value = evaluate(p, nodes[j - 1]);
      const bool bad = j < k ? std::abs(value) > cutoff : !(std::abs(value) > cutoff);
      if (bad) return {false, k, j, value, scale};
    }
  }
  return v;
}

NodeRecovery recover_nodes(const BasisCandidate& basis, std::optional<Interval> ambient) {
  NodeRecovery r;
  if (basis.polys.size() < 2) {
    r.failure = "need at least two basis polynomials";
    return r;
  }
  if (auto k = degree_pattern_violation(basis)) {
    r.failure = "degree pattern violated at k = " + std::to_string(*k);
    return r;
  }
  for (std::size_t k = 1; k < basis.polys.size(); ++k) {
    // p_{k+1} has degree k.
    if (static_cast<int>(k) > tol::recovery_max_degree) {
      r.failure = "unsupported degree " + std::to_string(k);
      return r;
    }
    const MonomialForm mono = to_monomial(basis.polys[k]);
    std::vector<Real> q(mono.coeffs().begin(), mono.coeffs().end());
    q.resize(k + 1, 0.0);
    Real scale = 0;
    for (Real c : q) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const Real rem = deflate(q, r.nodes[j]);
      if (std::abs(rem) > tol::recovery_residual * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "p_" << k + 1 << " does not vanish at x_" << j + 1 << " (relative residual "
           << std::abs(rem) / scale << ")";
        r.failure = os.str();
        return r;
      }
    }
    // q is linear now.
    const Real root = -q[0] / q[1];
    const Real residual = std::abs(evaluate(basis.polys[k], root)) / scale;
    r.residuals.push_back(residual);
    if (!std::isfinite(root) || residual > tol::recovery_residual) {
      r.failure = "root of p_" + std::to_string(k + 1) + " fails the residual check";
      return r;
    }
    if (ambient && (root < ambient->lo || root > ambient->hi)) {
      std::ostringstream os;
      os.precision(17);
      os << "p_" << k + 1 << " has its new root " << root << " outside the ambient interval";
      r.failure = os.str();
      return r;
    }
    const Real scale_prev = max_coeff_magnitude(basis.polys[k - 1]);
    if (std::abs(evaluate(basis.polys[k - 1], root)) <= tol::zero_pattern * scale_prev) {
      r.failure = "recovered x_" + std::to_string(k) + " repeats an earlier node";
      return r;
    }
    r.nodes.push_back(root == 0 ? 0.0 : root);  // no negative zero
  }
  r.ok = true;
  return r;
}

BasisCandidate rescale_basis(const BasisCandidate& basis, std::span<const Real> lambdas) {
  if (lambdas.size() != basis.polys.size())
    throw DomainError("one multiplier per basis polynomial required");
  BasisCandidate out;
  out.claimed_nodes = basis.claimed_nodes;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (lambdas[k] == 0 || !std::isfinite(lambdas[k]))
      throw DomainError("rescaling multipliers must be finite and nonzero");
    out.polys.push_back(scaled(basis.polys[k], lambdas[k]));
  }
  return out;
}

MonomialForm basis_partial_sum(const BasisCandidate& basis, const NodeSequence& nodes,
                               const SampledFunction& f, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > basis.polys.size())
    throw DomainError("partial sum index out of range");
  const auto x = nodes.head(static_cast<std::size_t>(n));
  std::vector<Real> y(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Real rhs = f(x[j]);
    for (int k = 0; k < j; ++k) rhs -= y[k] * evaluate(basis.polys[k], x[j]);
    const Real diag = evaluate(basis.polys[j], x[j]);
    if (diag == 0) throw DomainError("basis is not interpolating with these nodes");
    y[j] = rhs / diag;
  }
  std::vector<Real> sum(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    const MonomialForm m = to_monomial(basis.polys[k]);
    for (std::size_t i = 0; i < m.coeffs().size(); ++i) sum[i] += y[k] * m.coeffs()[i];
  }
  return MonomialForm(std::move(sum));
}

PartialSumComparison partial_sums_equal(const BasisCandidate& a, const BasisCandidate& b,
                                        const NodeSequence& nodes,
                                        std::span<const SampledFunction> fs) {
  PartialSumComparison c;
  c.max_partial_sum_deviation = std::numeric_limits<Real>::quiet_NaN();
  const std::size_t count = std::min(a.polys.size(), b.polys.size());
  if (a.polys.size() != b.polys.size()) c.first_mismatch = count + 1;
  for (std::size_t k = 1; k <= count; ++k) {
    const MonomialForm pa = to_monomial(a.polys[k - 1]);
    const MonomialForm pb = to_monomial(b.polys[k - 1]);
    const Real lead_b = coeff_at(pb.coeffs(), k - 1);
    const Real lambda = lead_b == 0 ? std::numeric_limits<Real>::quiet_NaN()
                                    : coeff_at(pa.coeffs(), k - 1) / lead_b;
    c.lambdas.push_back(lambda);
    Real scale = 0;
    for (Real v : pa.coeffs()) scale = std::max(scale, std::abs(v));
    Real dev = std::numeric_limits<Real>::infinity();
    if (std::isfinite(lambda) && lambda != 0 && scale > 0) {
      dev = 0;
      const std::size_t len = std::max(pa.coeffs().size(), pb.coeffs().size());
      for (std::size_t i = 0; i < len; ++i) {
        dev = std::max(dev, std::abs(coeff_at(pa.coeffs(), i) - lambda * coeff_at(pb.coeffs(), i)));
      }
      dev /= scale;
    }
    c.max_coeff_deviation = std::max(c.max_coeff_deviation, dev);
    if (dev > tol::rescale_match && c.first_mismatch == 0) c.first_mismatch = k;
  }

  bool sums_ok = true;
  if (!fs.empty() && count > 0 && nodes.size() >= count && a.polys.size() == b.polys.size() &&
      check_interpolating(a, nodes).pass && check_interpolating(b, nodes).pass) {
    const auto head = nodes.head(count);
    const auto [lo, hi] = std::minmax_element(head.begin(), head.end());
    const auto xs = sample_points(*lo, *hi, 2 * static_cast<int>(count) + 3);
    Real worst = 0;
    for (const auto& f : fs) {
      for (int n = 1; n <= static_cast<int>(count); ++n) {
        const MonomialForm sa = basis_partial_sum(a, nodes, f, n);
        const MonomialForm sb = basis_partial_sum(b, nodes, f, n);
        for (Real x : xs) {
          const Real va = evaluate(sa, x);
          const Real d = std::abs(va - evaluate(sb, x));
          worst = std::max(worst, d);
          if (d > tol::chain * (1 + std::abs(va))) sums_ok = false;
        }
      }
    }
    c.max_partial_sum_deviation = worst;
  }
  c.equal = c.first_mismatch == 0 && sums_ok;
  return c;
}

ChainReport projection_chain_check(const InterpolationMatrix& m,
                                   std::span<const SampledFunction> fs, int max_degree) {
  if (max_degree < 1 || static_cast<std::size_t>(max_degree) + 1 > m.size())
    throw DomainError("projection chain check needs 1 <= N and N + 1 <= rows");
  ChainReport rep;
  rep.max_degree = max_degree;
  const auto xs = sample_points(m.lower(), m.upper(), 2 * max_degree + 3);
  for (int n = 0; n < max_degree; ++n) {
    const auto row_n = degree_row(m, n);
    const auto row_next = degree_row(m, n + 1);
    for (const auto& f : fs) {
      const BarycentricForm ln = lagrange_interpolant(f, row_n);
      const BarycentricForm lnext = lagrange_interpolant(f, row_next);
      const BarycentricForm chain = interpolate(row_n, [&](Real x) { return evaluate(lnext, x); });
      const BarycentricForm swapped = interpolate(row_next, [&](Real x) { return evaluate(ln, x); });
      for (Real x : xs) {
        const Real base = evaluate(ln, x);
        const Real c = evaluate(chain, x);
        const Real s = evaluate(swapped, x);
        const Real scale = 1 + std::abs(base);
        if (rep.chain && std::abs(c - base) > tol::chain * scale) {
          rep.chain = false;
          rep.chain_witness = ChainWitness{n, f.name(), x, std::abs(c - base)};
        }
        if (rep.commutation && std::abs(c - s) > tol::chain * scale) {
          rep.commutation = false;
          rep.commutation_witness = ChainWitness{n, f.name(), x, std::abs(c - s)};
        }
      }
    }
  }
  for (int n = 1; n <= max_degree && rep.degrees; ++n) {
    for (const auto& f : fs) {
      const int prev = degree(lagrange_interpolant(f, degree_row(m, n - 1))).value_or(-1);
      const int cur = degree(lagrange_interpolant(f, degree_row(m, n))).value_or(-1);
      if (cur < prev) {
        rep.degrees = false;
        rep.degree_witness = ChainWitness{n, f.name(), 0, static_cast<Real>(prev - cur)};
        break;
      }
    }
  }
  return rep;
}

SampledFunction chain_breaking_function(const InterpolationMatrix& m, int n) {
  const auto row = degree_row(m, n);
  const auto next = degree_row(m, n + 1);
  const auto missing = first_missing(row, next, NodeMatching::exact);
  if (!missing) throw DomainError("row is contained in the next row; no chain-breaking function");
  Real half_width = std::numeric_limits<Real>::infinity();
  for (Real x : next) half_width = std::min(half_width, std::abs(x - *missing));
  return SampledFunction::hat(*missing, half_width);
}

Real newton_lagrange_equivalence(const SampledFunction& f, const NodeSequence& nodes, int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  const auto head = nodes.head(static_cast<std::size_t>(n) + 1);
  const BarycentricForm lag = lagrange_interpolant(f, head);
  const NewtonForm newton = partial_sum(f, n + 1, nodes);
  const auto [lo, hi] = std::minmax_element(head.begin(), head.end());
  Real worst = 0;
  for (Real x : sample_points(*lo, *hi, 100))
    worst = std::max(worst, std::abs(evaluate(lag, x) - evaluate(newton, x)));
  return worst;
}

}  // namespace lebesgue_lab

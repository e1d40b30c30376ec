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

#include "lebesgue_lab/interp_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lebesgue_lab/poly.hpp"

namespace lebesgue_lab {

namespace {

bool same_node(Real x, Real y, NodeMatching matching) {
  if (matching == NodeMatching::exact) return x == y;
  return std::abs(x - y) <= tol::file_node_match * std::max<Real>(1, std::abs(x));
}

}  // namespace

NodeSequence::NodeSequence(std::vector<Real> points) : points_(std::move(points)) {
  require_distinct(points_, "sequence nodes");
}

std::span<const Real> NodeSequence::head(std::size_t count) const {
  if (count > points_.size())
    throw DomainError("node sequence has " + std::to_string(points_.size()) +
                      " points, " + std::to_string(count) + " requested");
  return std::span<const Real>(points_).first(count);
}

InterpolationMatrix::InterpolationMatrix(std::vector<std::vector<Real>> rows, Real lower,
                                         Real upper, NodeMatching matching)
    : rows_(std::move(rows)), lower_(lower), upper_(upper), matching_(matching) {
  if (!(lower <= upper)) throw DomainError("ambient interval must satisfy lower <= upper");
  if (rows_.empty()) throw DomainError("interpolation matrix needs at least one row");
  for (std::size_t n = 1; n <= rows_.size(); ++n) {
    const auto& r = rows_[n - 1];
    if (r.size() != n)
      throw DomainError("row " + std::to_string(n) + " has " + std::to_string(r.size()) +
                        " nodes");
    for (Real x : r) {
      if (!std::isfinite(x) || x < lower || x > upper)
        throw DomainError("row " + std::to_string(n) + " has a node outside the ambient interval");
    }
  }
}

std::span<const Real> InterpolationMatrix::row(std::size_t n) const {
  if (n == 0 || n > rows_.size())
    throw DomainError("row " + std::to_string(n) + " requested from a matrix with " +
                      std::to_string(rows_.size()) + " rows");
  return rows_[n - 1];
}

std::vector<Real> chebyshev_row(int n) {
  if (n < 1) throw DomainError("Chebyshev row needs n >= 1");
  std::vector<Real> row(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    row[k - 1] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
  }
  // cos rounds slightly off zero and off odd symmetry; restore both.
  for (int k = 0; k < n / 2; ++k) {
    const Real v = 0.5 * (row[k] - row[n - 1 - k]);
    row[k] = v;
    row[n - 1 - k] = -v;
  }
  if (n % 2 == 1) row[n / 2] = 0;
  return row;
}

std::vector<Real> equispaced_row(int n, Real a, Real b) {
  if (n < 1) throw DomainError("equispaced row needs n >= 1");
  if (!(a < b)) throw DomainError("equispaced row needs a < b");
  if (n == 1) return {0.5 * (a + b)};
  std::vector<Real> row(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) row[k] = a + k * (b - a) / (n - 1);
  row.back() = b;
  return row;
}

InterpolationMatrix chebyshev_matrix(int rows) {
  if (rows < 1) throw DomainError("matrix needs at least one row");
  std::vector<std::vector<Real>> r;
  for (int n = 1; n <= rows; ++n) r.push_back(chebyshev_row(n));
  return InterpolationMatrix(std::move(r), -1, 1);
}

InterpolationMatrix equispaced_matrix(int rows, Real a, Real b) {
  if (rows < 1) throw DomainError("matrix needs at least one row");
  std::vector<std::vector<Real>> r;
  for (int n = 1; n <= rows; ++n) r.push_back(equispaced_row(n, a, b));
  return InterpolationMatrix(std::move(r), a, b);
}

InterpolationMatrix nested_matrix(const NodeSequence& seq, int rows) {
  if (rows < 1) throw DomainError("matrix needs at least one row");
  const auto pts = seq.head(static_cast<std::size_t>(rows));
  std::vector<std::vector<Real>> r;
  for (int n = 1; n <= rows; ++n) r.emplace_back(pts.begin(), pts.begin() + n);
  const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
  return InterpolationMatrix(std::move(r), *lo, *hi);
}

std::vector<RowViolation> validate_matrix(const InterpolationMatrix& m) {
  std::vector<RowViolation> out;
  for (std::size_t n = 1; n <= m.size(); ++n) {
    const auto r = m.row(n);
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        if (r[i] == r[j]) out.push_back({n, i + 1, j + 1});
      }
    }
  }
  return out;
}

std::optional<Real> first_missing(std::span<const Real> a, std::span<const Real> b,
                                  NodeMatching matching) {
  std::vector<Real> sorted(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  const Real slack = matching == NodeMatching::exact ? 0 : tol::file_node_match;
  for (Real x : a) {
    const Real reach = slack * std::max<Real>(1, std::abs(x));
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x - reach);
    if (it == sorted.end() || !same_node(x, *it, matching)) return x;
  }
  return std::nullopt;
}

Nestedness is_nested(const InterpolationMatrix& m) {
  Nestedness result;
  for (std::size_t n = 1; n < m.size(); ++n) {
    if (auto missing = first_missing(m.row(n), m.row(n + 1), m.matching())) {
      result.witness_row = n;
      result.witness_node = *missing;
      return result;
    }
  }
  result.nested = true;
  result.sequence.push_back(m.row(1)[0]);
  for (std::size_t n = 2; n <= m.size(); ++n) {
    // Exactly one node of row n is new when row n - 1 is a subset of it.
    result.sequence.push_back(*first_missing(m.row(n), m.row(n - 1), m.matching()));
  }
  return result;
}

InterpolationMatrix affine_transform(const InterpolationMatrix& m, Real alpha, Real beta) {
  if (alpha == 0 || !std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("affine map needs finite alpha != 0 and finite beta");
  auto rows = m.rows();
  for (auto& r : rows) {
    for (Real& x : r) x = alpha * x + beta;
  }
  Real lo = alpha * m.lower() + beta;
  Real hi = alpha * m.upper() + beta;
  if (lo > hi) std::swap(lo, hi);
  // Rounding can push a node a hair past the mapped endpoint.
  for (const auto& r : rows) {
    for (Real x : r) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  return InterpolationMatrix(std::move(rows), lo, hi, m.matching());
}

std::vector<Real> leja_order(std::span<const Real> points) {
  std::vector<Real> pool(points.begin(), points.end());
  std::vector<Real> out;
  if (pool.empty()) return out;
  std::size_t first = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (std::abs(pool[i]) > std::abs(pool[first])) first = i;
  }
  std::vector<bool> used(pool.size(), false);
  // Running log-product of distances to chosen points.
  std::vector<Real> score(pool.size(), 0.0);
  std::size_t pick = first;
  for (std::size_t step = 0; step < pool.size(); ++step) {
    used[pick] = true;
    out.push_back(pool[pick]);
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      score[i] += std::log(std::abs(pool[i] - pool[pick]));
      if (best == pool.size() || score[i] > score[best]) best = i;
    }
    pick = best;
  }
  return out;
}

}  // namespace lebesgue_lab

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

// Reference computations for the test suites. Nothing here calls into the
// code paths it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lebesgue_lab/compact_set.hpp"

namespace oracle {

using lebesgue_lab::Real;

/// l_k(x) from the raw product prod_{j != k} (x - x_j) / (x_k - x_j).
inline Real product_cardinal(const std::vector<Real>& row, std::size_t k, Real x) {
  Real v = 1;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != k) v *= (x - row[j]) / (row[k] - row[j]);
  }
  return v;
}

inline Real product_lebesgue(const std::vector<Real>& row, Real x) {
  Real s = 0;
  for (std::size_t k = 0; k < row.size(); ++k) s += std::abs(product_cardinal(row, k, x));
  return s;
}

/// Dense equispaced scan of the product-form Lebesgue function on [a, b].
inline Real scan_lebesgue_max(const std::vector<Real>& row, Real a, Real b, int samples) {
  Real best = 0;
  for (int i = 0; i <= samples; ++i) best = std::max(best, product_lebesgue(row, a + (b - a) * i / samples));
  return best;
}

/// Expand prod (x - r_j) into monomial coefficients, constant first.
inline std::vector<Real> expand_roots(const std::vector<Real>& roots) {
  std::vector<Real> c{1};
  for (Real r : roots) {
    std::vector<Real> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

inline Real horner(const std::vector<Real>& c, Real x) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Largest open gap of (x0, x0 + r) \ X (or the mirrored window), found by
/// collecting every interval endpoint inside the window and testing the
/// midpoint of each elementary piece for membership.
inline Real brute_gap(const lebesgue_lab::CompactSet& x_set, Real x0, Real r, bool right) {
  const Real lo = right ? x0 : x0 - r;
  const Real hi = right ? x0 + r : x0;
  std::vector<Real> cuts{lo, hi};
  for (const auto& iv : x_set.intervals()) {
    for (Real e : {iv.lo, iv.hi}) {
      if (e > lo && e < hi) cuts.push_back(e);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  auto member = [&](Real x) {
    for (const auto& iv : x_set.intervals()) {
      if (x >= iv.lo && x <= iv.hi) return true;
    }
    return false;
  };
  Real best = 0;
  Real run = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Real w = cuts[i + 1] - cuts[i];
    if (w <= 0) continue;
    // A point strictly inside the window that is a member breaks the run.
    if (i > 0 && member(cuts[i])) run = 0;
    if (member(0.5 * (cuts[i] + cuts[i + 1]))) {
      run = 0;
    } else {
      run += w;
      best = std::max(best, run);
    }
  }
  return best;
}

/// min over a log-spaced radius grid of brute_gap / r.
inline Real brute_porosity(const lebesgue_lab::CompactSet& x_set, Real x0, bool right,
                           Real r_min, Real r_max, int samples) {
  Real best = 1;
  const Real span = std::log(r_max / r_min);
  for (int i = 0; i <= samples; ++i) {
    const Real r = r_min * std::exp(span * i / samples);
    best = std::min(best, brute_gap(x_set, x0, r, right) / r);
  }
  return best;
}

/// Deterministic uniform reals for property tests.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  Real operator()(Real a, Real b) { return a + (b - a) * (static_cast<Real>(rng_() >> 11) * 0x1.0p-53); }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  /// Sorted-free distinct points in [a, b] with pairwise separation >= sep.
  std::vector<Real> separated(int count, Real a, Real b, Real sep) {
    std::vector<Real> out;
    while (static_cast<int>(out.size()) < count) {
      const Real x = (*this)(a, b);
      if (std::all_of(out.begin(), out.end(), [&](Real y) { return std::abs(x - y) >= sep; }))
        out.push_back(x);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

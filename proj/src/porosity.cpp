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

#include "lebesgue_lab/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lebesgue_lab {

namespace {

constexpr Real inf = std::numeric_limits<Real>::infinity();

std::size_t member_index(const CompactSet& x_set, Real x0) {
  const auto i = x_set.component_of(x0);
  if (!i) {
    std::ostringstream os;
    os.precision(17);
    os << "point " << x0 << " is not a member of the set";
    throw DomainError(os.str());
  }
  return *i;
}

struct OffsetGap {
  Real u;  // distance from x0 to the near end
  Real v;  // distance to the far end (inf past the extent of X)
};

// Gaps on one side of x0, as distances from x0, nearest first.
std::vector<OffsetGap> offset_gaps(const CompactSet& x_set, Real x0, Side side) {
  const auto ivs = x_set.intervals();
  const std::size_t i = member_index(x_set, x0);
  std::vector<OffsetGap> gaps;
  if (side == Side::right) {
    for (std::size_t j = i; j + 1 < ivs.size(); ++j)
      gaps.push_back({ivs[j].hi - x0, ivs[j + 1].lo - x0});
    gaps.push_back({ivs.back().hi - x0, inf});
  } else {
    for (std::size_t j = i; j > 0; --j) gaps.push_back({x0 - ivs[j].lo, x0 - ivs[j - 1].hi});
    gaps.push_back({x0 - ivs.front().lo, inf});
  }
  return gaps;
}

std::vector<Real> geometric_grid(Real r_min, Real r_max, Real factor) {
  std::vector<Real> grid;
  for (Real r = r_max; r > r_min; r *= factor) grid.push_back(r);
  grid.push_back(r_min);
  return grid;
}

}  // namespace

Real gap_length(const CompactSet& x_set, Real x0, Real r, Side side) {
  if (!(r > 0) || !std::isfinite(r)) throw DomainError("gap radius must be positive and finite");
  const auto ivs = x_set.intervals();
  const std::size_t i = member_index(x_set, x0);
  // Work in distances from x0 so that an empty window measures exactly r.
  Real largest = 0;
  if (side == Side::right) {
    Real cur = ivs[i].hi - x0;
    for (std::size_t j = i + 1; j < ivs.size() && cur < r; ++j) {
      largest = std::max(largest, std::min(ivs[j].lo - x0, r) - cur);
      cur = ivs[j].hi - x0;
    }
    if (cur < r) largest = std::max(largest, r - cur);
  } else {
    Real cur = x0 - ivs[i].lo;
    for (std::size_t j = i; j > 0 && cur < r; --j) {
      largest = std::max(largest, std::min(x0 - ivs[j - 1].hi, r) - cur);
      cur = x0 - ivs[j - 1].lo;
    }
    if (cur < r) largest = std::max(largest, r - cur);
  }
  return std::min(largest, r);
}

SidePorosity side_porosity(const CompactSet& x_set, Real x0, Side side, Real r_min, Real r_max,
                           Real grid_factor) {
  if (!(r_min > 0) || !(r_min < r_max) || !std::isfinite(r_max))
    throw DomainError("porosity window needs 0 < r_min < r_max");
  if (!(grid_factor > 0 && grid_factor < 1)) throw DomainError("grid factor must lie in (0, 1)");

  SidePorosity out;
  out.r_min = r_min;
  out.r_max = r_max;
  out.r_grid = geometric_grid(r_min, r_max, grid_factor);

  std::vector<Real> candidates = out.r_grid;
  Real completed = 0;  // longest gap lying entirely before the current one
  for (const auto& g : offset_gaps(x_set, x0, side)) {
    if (g.u > r_max) break;
    candidates.push_back(g.u);
    if (std::isfinite(g.v)) candidates.push_back(g.v);
    // Inside (u, v) the ratio is max(completed / r, 1 - u / r).
    const Real cross = g.u + completed;
    if (cross > g.u && cross < g.v) candidates.push_back(cross);
    if (std::isfinite(g.v)) completed = std::max(completed, g.v - g.u);
  }
  std::erase_if(candidates, [&](Real r) { return !(r >= r_min && r <= r_max); });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Real> ratio(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    ratio[i] = gap_length(x_set, x0, candidates[i], side) / candidates[i];

  // Running infimum over [rho, r_max] for rho at each grid radius.
  auto inf_from = [&](Real rho) {
    Real m = 1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i] >= rho) m = std::min(m, ratio[i]);
    }
    return m;
  };
  out.value = inf_from(r_min);
  const std::size_t last = out.r_grid.size() - 1;
  out.converged =
      last >= 2 && std::abs(inf_from(out.r_grid[last - 2]) - out.value) <= tol::porosity_stability;
  return out;
}

namespace {

PorosityEstimate combine(SidePorosity right, SidePorosity left) {
  PorosityEstimate e;
  e.p_plus = right.value;
  e.p_minus = left.value;
  e.p = std::max(e.p_plus, e.p_minus);
  e.p_star = std::min(e.p_plus, e.p_minus);
  e.converged = right.converged && left.converged;
  e.r_grid = right.r_grid;
  e.r_grid.insert(e.r_grid.end(), left.r_grid.begin(), left.r_grid.end());
  e.right = std::move(right);
  e.left = std::move(left);
  return e;
}

}  // namespace

PorosityEstimate lower_porosity(const CompactSet& x_set, Real x0, Real r_min, Real r_max,
                                Real grid_factor) {
  return combine(side_porosity(x_set, x0, Side::right, r_min, r_max, grid_factor),
                 side_porosity(x_set, x0, Side::left, r_min, r_max, grid_factor));
}

PorosityEstimate lower_porosity(const CompactSet& x_set, Real x0, Real grid_factor) {
  const Isolation iso = isolation_criterion(x_set, x0);
  const Real diameter = x_set.diameter() > 0 ? x_set.diameter() : 1;
  const Real global_min = x_set.smallest_gap().value_or(diameter * 1e-6) / 8;
  auto window = [&](Side side, bool isolated) {
    if (isolated) {
      const auto gaps = offset_gaps(x_set, x0, side);
      const Real reach = std::isfinite(gaps.front().v) ? gaps.front().v : diameter;
      return side_porosity(x_set, x0, side, reach / 64, reach, grid_factor);
    }
    // Inside an interval the window must reach below the covered stretch.
    const auto& iv = x_set.intervals()[member_index(x_set, x0)];
    const Real covered = side == Side::right ? iv.hi - x0 : x0 - iv.lo;
    Real r_min = std::min(global_min, diameter / 2);
    if (covered > 0) r_min = std::min(r_min, covered / 8);
    return side_porosity(x_set, x0, side, r_min, diameter, grid_factor);
  };
  return combine(window(Side::right, iso.right_isolated), window(Side::left, iso.left_isolated));
}

Isolation isolation_criterion(const CompactSet& x_set, Real x0) {
  const auto& iv = x_set.intervals()[member_index(x_set, x0)];
  Isolation iso;
  iso.right_isolated = x0 == iv.hi && !x_set.accumulates(x0, Side::right);
  iso.left_isolated = x0 == iv.lo && !x_set.accumulates(x0, Side::left);
  iso.p_star_exceeds_half = iso.right_isolated && iso.left_isolated;
  return iso;
}

bool every_point_isolated(const CompactSet& x_set) {
  // A non-degenerate interval has points isolated on neither side, so only
  // endpoints need checking.
  for (const auto& iv : x_set.intervals()) {
    if (!isolation_criterion(x_set, iv.lo).p_star_exceeds_half) return false;
    if (!isolation_criterion(x_set, iv.hi).p_star_exceeds_half) return false;
  }
  return true;
}

StrongPorosityVerdict strongly_lower_porous_check(const CompactSet& x_set) {
  StrongPorosityVerdict v;
  for (const auto& iv : x_set.intervals()) {
    if (!iv.degenerate()) {
      v.failing_point = 0.5 * (iv.lo + iv.hi);
      v.reason = "contains a non-degenerate interval; its interior points have porosity 0";
      return v;
    }
  }
  for (const auto& iv : x_set.intervals()) {
    const PorosityEstimate e = lower_porosity(x_set, iv.lo);
    if (e.p < 1 - tol::porosity_stability) {
      std::ostringstream os;
      os.precision(17);
      os << "lower porosity " << e.p << " at x0 = " << iv.lo;
      v.failing_point = iv.lo;
      v.reason = os.str();
      return v;
    }
  }
  v.strongly_porous = true;
  return v;
}

CompactSet make_geometric_set(Real ratio, int depth) {
  if (!(ratio > 0 && ratio < 1)) throw DomainError("ratio must lie in (0, 1)");
  if (depth < 1) throw DomainError("depth must be at least 1");
  std::vector<Interval> ivs{{0, 0}};
  for (int k = depth; k >= 0; --k) {
    const Real x = std::pow(ratio, k);
    ivs.push_back({x, x});
  }
  return CompactSet(std::move(ivs), {{0, Side::right}});
}

CompactSet make_cantor(int depth, Real middle_fraction) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  if (!(middle_fraction > 0 && middle_fraction < 1))
    throw DomainError("middle fraction must lie in (0, 1)");
  std::vector<Interval> ivs{{0, 1}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Interval> next;
    next.reserve(2 * ivs.size());
    for (const auto& iv : ivs) {
      const Real keep = (iv.hi - iv.lo) * (1 - middle_fraction) / 2;
      next.push_back({iv.lo, iv.lo + keep});
      next.push_back({iv.hi - keep, iv.hi});
    }
    ivs = std::move(next);
  }
  return CompactSet(std::move(ivs));
}

Extent extent(const CompactSet& x_set) { return {x_set.min(), x_set.max(), x_set.measure()}; }

}  // namespace lebesgue_lab

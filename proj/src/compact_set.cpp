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

#include "lebesgue_lab/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lebesgue_lab {

CompactSet::CompactSet(std::vector<Interval> intervals, std::vector<LimitPoint> limit_points)
    : intervals_(std::move(intervals)), limit_points_(std::move(limit_points)) {
  if (intervals_.empty()) throw DomainError("compact set must be nonempty");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      std::ostringstream os;
      os << "interval " << i + 1 << " [" << iv.lo << ", " << iv.hi << "] is not a closed interval";
      throw DomainError(os.str());
    }
    if (i > 0 && !(intervals_[i - 1].hi < iv.lo)) {
      std::ostringstream os;
      os.precision(17);
      os << "intervals " << i << " and " << i + 1 << " ([" << intervals_[i - 1].lo << ", "
         << intervals_[i - 1].hi << "] and [" << iv.lo << ", " << iv.hi
         << "]) are not sorted and disjoint";
      throw DomainError(os.str());
    }
  }
  for (const auto& lp : limit_points_) {
    if (!contains(lp.point)) throw DomainError("limit point is not a member of the set");
  }
}

CompactSet CompactSet::interval(Real a, Real b) { return CompactSet({{a, b}}); }

CompactSet CompactSet::points(std::vector<Real> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Interval> iv;
  iv.reserve(pts.size());
  for (Real x : pts) iv.push_back({x, x});
  return CompactSet(std::move(iv));
}

Real CompactSet::measure() const {
  Real total = 0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

std::optional<std::size_t> CompactSet::component_of(Real x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](Real v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  if (x > it->hi) return std::nullopt;
  return static_cast<std::size_t>(it - intervals_.begin());
}

bool CompactSet::accumulates(Real x, Side side) const {
  return std::any_of(limit_points_.begin(), limit_points_.end(),
                     [&](const LimitPoint& lp) { return lp.point == x && lp.side == side; });
}

bool CompactSet::is_finite_point_set() const {
  return limit_points_.empty() &&
         std::all_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& iv) { return iv.degenerate(); });
}

std::optional<Real> CompactSet::smallest_gap() const {
  std::optional<Real> best;
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    const Real g = intervals_[i].lo - intervals_[i - 1].hi;
    if (!best || g < *best) best = g;
  }
  return best;
}

}  // namespace lebesgue_lab

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
#include <vector>

#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

struct Interval {
  Real lo;
  Real hi;
  bool degenerate() const { return lo == hi; }
};

enum class Side { right, left };

/// A member point that the model treats as an accumulation point from one
/// side. Truncated constructions (the geometric set) use this to stand in for
/// the infinitely many points the interval list cannot hold.
struct LimitPoint {
  Real point;
  Side side;
};

/// Compact subset of the line as a sorted union of disjoint closed intervals
/// with strict gaps between neighbours. Degenerate intervals are points.
class CompactSet {
 public:
  /// Throws DomainError on an empty list, unsorted or touching intervals, or
  /// a limit point that is not a member.
  explicit CompactSet(std::vector<Interval> intervals, std::vector<LimitPoint> limit_points = {});

  static CompactSet interval(Real a, Real b);
  /// Sorts and removes duplicates.
  static CompactSet points(std::vector<Real> pts);

  std::span<const Interval> intervals() const { return intervals_; }
  std::span<const LimitPoint> limit_points() const { return limit_points_; }

  Real min() const { return intervals_.front().lo; }
  Real max() const { return intervals_.back().hi; }
  Real measure() const;
  Real diameter() const { return max() - min(); }

  /// Index of the interval containing x.
  std::optional<std::size_t> component_of(Real x) const;
  bool contains(Real x) const { return component_of(x).has_value(); }

  /// True if the model marks x as accumulated from `side`.
  bool accumulates(Real x, Side side) const;

  /// Every interval degenerate and no limit points.
  bool is_finite_point_set() const;

  /// Smallest distance between consecutive intervals; nullopt for one component.
  std::optional<Real> smallest_gap() const;

 private:
  std::vector<Interval> intervals_;
  std::vector<LimitPoint> limit_points_;
};

}  // namespace lebesgue_lab

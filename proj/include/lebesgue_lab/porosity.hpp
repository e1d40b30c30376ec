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
#include <string>
#include <vector>

#include "lebesgue_lab/compact_set.hpp"
#include "lebesgue_lab/real.hpp"

namespace lebesgue_lab {

/// Length of the largest open subinterval of (x0, x0 + r) \ X (right) or
/// (x0 - r, x0) \ X (left). Throws DomainError unless x0 is in X and r > 0.
Real gap_length(const CompactSet& x_set, Real x0, Real r, Side side);

struct SidePorosity {
  Real value = 0;
  bool converged = false;
  Real r_min = 0;
  Real r_max = 0;
  std::vector<Real> r_grid;
};

/// Lower porosity estimates at one point. p = max(p_plus, p_minus) and
/// p_star = min(p_plus, p_minus) hold exactly.
struct PorosityEstimate {
  Real p_plus = 0;
  Real p_minus = 0;
  Real p = 0;
  Real p_star = 0;
  std::vector<Real> r_grid;  // right-side grid followed by left-side grid
  bool converged = false;    // both sides converged
  SidePorosity right;
  SidePorosity left;
};

/// inf of gap_length / r over [r_min, r_max] on one side. The infimum is
/// exact on the range: besides the geometric grid r_max * grid_factor^i it
/// evaluates every radius at which the ratio can attain a local minimum
/// (gap endpoints and the crossing points inside partially covered gaps).
/// `converged` means the running infimum moved by at most
/// tol::porosity_stability over the last two grid refinements.
SidePorosity side_porosity(const CompactSet& x_set, Real x0, Side side, Real r_min, Real r_max,
                           Real grid_factor = 0.9);

/// Both sides over the same radius window.
PorosityEstimate lower_porosity(const CompactSet& x_set, Real x0, Real r_min, Real r_max,
                                Real grid_factor = 0.9);

/// Default windows. A side on which x0 is isolated (see isolation_criterion)
/// is probed below the adjacent gap, where the ratio is identically 1. Any
/// other side uses r_max = diameter(X) down to r_min = smallest gap / 8, or
/// further down to an eighth of the stretch of X covering that side of x0.
PorosityEstimate lower_porosity(const CompactSet& x_set, Real x0, Real grid_factor = 0.9);

struct Isolation {
  bool right_isolated = false;
  bool left_isolated = false;
  bool p_star_exceeds_half = false;
};

/// Exact from the interval list: x0 is right-isolated when it closes its
/// interval and the model does not mark it as accumulated from the right.
Isolation isolation_criterion(const CompactSet& x_set, Real x0);

/// True iff every point of X is isolated on both sides.
bool every_point_isolated(const CompactSet& x_set);

struct StrongPorosityVerdict {
  bool strongly_porous = false;
  std::optional<Real> failing_point;
  std::string reason;
};

/// p(X, x0) >= 1 - tol::porosity_stability at every point. Sets containing a
/// non-degenerate interval are rejected immediately.
StrongPorosityVerdict strongly_lower_porous_check(const CompactSet& x_set);

/// {0} together with ratio^k for k = 0..depth, with 0 marked as accumulated
/// from the right.
CompactSet make_geometric_set(Real ratio, int depth);

/// Depth-d stage of the Cantor construction removing the open middle
/// `middle_fraction` of every interval, starting from [0, 1].
CompactSet make_cantor(int depth, Real middle_fraction);

struct Extent {
  Real a;
  Real b;
  Real measure;
};

Extent extent(const CompactSet& x_set);

}  // namespace lebesgue_lab

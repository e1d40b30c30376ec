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

#include <iosfwd>

#include "lebesgue_lab/compact_set.hpp"
#include "lebesgue_lab/faber.hpp"
#include "lebesgue_lab/interp_matrix.hpp"

namespace lebesgue_lab {

// Text formats. Lines starting with '#' and blank lines are skipped; numbers
// are decimal literals separated by whitespace. Parse failures throw
// InputError carrying the 1-based line number.

/// Data line n holds exactly n distinct nodes. Nodes compare with file tolerance and
/// the ambient interval is the hull of all nodes.
InterpolationMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const InterpolationMatrix& m);

/// One node per line; nodes must be pairwise distinct.
NodeSequence read_nodes(std::istream& in);
void write_nodes(std::ostream& out, const NodeSequence& nodes);

/// One polynomial per line, monomial coefficients constant term first. The
/// degree pattern is not enforced here.
BasisCandidate read_basis(std::istream& in);
void write_basis(std::ostream& out, const BasisCandidate& basis);

/// One interval "a b" per line ("a a" for a point), sorted and disjoint.
CompactSet read_set(std::istream& in);
void write_set(std::ostream& out, const CompactSet& x_set);

/// 17 significant digits; reads back to the same double.
std::string format_real(Real x);

}  // namespace lebesgue_lab

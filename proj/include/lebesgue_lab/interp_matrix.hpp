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

/// Pairwise distinct real points x_1, x_2, ... in caller order.
class NodeSequence {
 public:
  NodeSequence() = default;
  explicit NodeSequence(std::vector<Real> points);

  std::span<const Real> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Real operator[](std::size_t i) const { return points_[i]; }
  /// First `count` points.
  std::span<const Real> head(std::size_t count) const;

 private:
  std::vector<Real> points_;
};

/// How node identity is decided when comparing rows.
enum class NodeMatching {
  exact,           // constructed matrices: bitwise equality
  file_tolerance,  // matrices read from text: |x - y| <= tol::file_node_match * max(1, |x|)
};

/// Triangular node array truncated at N rows. Row n (1-based) holds n nodes
/// inside the ambient interval [lower, upper]. Distinctness within rows is
/// not enforced here; see validate_matrix.
class InterpolationMatrix {
 public:
  InterpolationMatrix(std::vector<std::vector<Real>> rows, Real lower, Real upper,
                      NodeMatching matching = NodeMatching::exact);

  std::size_t size() const { return rows_.size(); }
  std::span<const Real> row(std::size_t n) const;
  const std::vector<std::vector<Real>>& rows() const { return rows_; }
  Real lower() const { return lower_; }
  Real upper() const { return upper_; }
  NodeMatching matching() const { return matching_; }

 private:
  std::vector<std::vector<Real>> rows_;
  Real lower_;
  Real upper_;
  NodeMatching matching_;
};

/// cos((2k - 1) pi / (2n)) for k = 1..n.
std::vector<Real> chebyshev_row(int n);
/// n = 1 gives the midpoint, otherwise a + (k - 1)(b - a)/(n - 1).
std::vector<Real> equispaced_row(int n, Real a, Real b);

InterpolationMatrix chebyshev_matrix(int rows);
InterpolationMatrix equispaced_matrix(int rows, Real a = -1, Real b = 1);
/// Row n is the first n points of `seq`.
InterpolationMatrix nested_matrix(const NodeSequence& seq, int rows);

struct RowViolation {
  std::size_t row;     // 1-based
  std::size_t first;   // 1-based positions of the colliding nodes
  std::size_t second;
};

/// Every pair of exactly equal nodes within a row. Empty means valid.
std::vector<RowViolation> validate_matrix(const InterpolationMatrix& m);

struct Nestedness {
  bool nested = false;
  /// On success: x_n is the node of row n absent from row n - 1.
  std::vector<Real> sequence;
  /// On failure: first row n with a node missing from row n + 1, and that node.
  std::size_t witness_row = 0;
  Real witness_node = 0;
};

Nestedness is_nested(const InterpolationMatrix& m);

/// First node of `a` (in row order) with no match in `b`.
std::optional<Real> first_missing(std::span<const Real> a, std::span<const Real> b,
                                  NodeMatching matching);

/// x -> alpha * x + beta on every node and on the ambient interval.
InterpolationMatrix affine_transform(const InterpolationMatrix& m, Real alpha, Real beta);

/// Greedy Leja ordering: start at the point of largest magnitude, then repeatedly
/// take the point maximizing the product of distances to those already chosen.
/// Ties go to the earlier input index.
std::vector<Real> leja_order(std::span<const Real> points);

}  // namespace lebesgue_lab

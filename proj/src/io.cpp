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

#include "lebesgue_lab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lebesgue_lab {

namespace {

struct DataLine {
  int line;
  std::vector<Real> values;
};

std::vector<DataLine> read_data_lines(std::istream& in) {
  std::vector<DataLine> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    DataLine d{line, {}};
    std::size_t pos = first;
    while (pos < text.size()) {
      const auto end = std::min(text.find_first_of(" \t", pos), text.size());
      const char* b = text.data() + pos;
      const char* e = text.data() + end;
      Real v = 0;
      const auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || ptr != e || !std::isfinite(v))
        throw InputError("'" + std::string(b, e) + "' is not a finite decimal number", line);
      d.values.push_back(v);
      pos = text.find_first_not_of(" \t", end);
      if (pos == std::string::npos) break;
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::string format_real(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

InterpolationMatrix read_matrix(std::istream& in) {
  const auto lines = read_data_lines(in);
  if (lines.empty()) throw InputError("matrix file has no rows");
  std::vector<std::vector<Real>> rows;
  Real lo = lines.front().values.empty() ? 0 : lines.front().values.front();
  Real hi = lo;
  for (std::size_t n = 1; n <= lines.size(); ++n) {
    const auto& d = lines[n - 1];
    if (d.values.size() != n) {
      throw InputError("row " + std::to_string(n) + " must hold " + std::to_string(n) +
                           " nodes, found " + std::to_string(d.values.size()),
                       d.line);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (d.values[i] == d.values[j]) {
          throw InputError("row " + std::to_string(n) + " repeats a node at positions " +
                               std::to_string(i + 1) + " and " + std::to_string(j + 1),
                           d.line);
        }
      }
      lo = std::min(lo, d.values[i]);
      hi = std::max(hi, d.values[i]);
    }
    rows.push_back(d.values);
  }
  return InterpolationMatrix(std::move(rows), lo, hi, NodeMatching::file_tolerance);
}

void write_matrix(std::ostream& out, const InterpolationMatrix& m) {
  for (const auto& row : m.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_real(row[i]);
    out << '\n';
  }
}

NodeSequence read_nodes(std::istream& in) {
  std::vector<Real> pts;
  for (const auto& d : read_data_lines(in)) {
    if (d.values.size() != 1) throw InputError("expected one node per line", d.line);
    if (std::find(pts.begin(), pts.end(), d.values[0]) != pts.end())
      throw InputError("node repeats an earlier line", d.line);
    pts.push_back(d.values[0]);
  }
  if (pts.empty()) throw InputError("nodes file is empty");
  return NodeSequence(std::move(pts));
}

void write_nodes(std::ostream& out, const NodeSequence& nodes) {
  for (Real x : nodes.points()) out << format_real(x) << '\n';
}

BasisCandidate read_basis(std::istream& in) {
  BasisCandidate b;
  for (auto& d : read_data_lines(in)) b.polys.emplace_back(MonomialForm(std::move(d.values)));
  if (b.polys.empty()) throw InputError("basis file is empty");
  return b;
}

void write_basis(std::ostream& out, const BasisCandidate& basis) {
  for (const auto& p : basis.polys) {
    const MonomialForm m = to_monomial(p);
    if (m.is_zero()) {
      out << "0\n";
      continue;
    }
    for (std::size_t i = 0; i < m.coeffs().size(); ++i)
      out << (i ? " " : "") << format_real(m.coeffs()[i]);
    out << '\n';
  }
}

CompactSet read_set(std::istream& in) {
  std::vector<Interval> ivs;
  int prev_line = 0;
  for (const auto& d : read_data_lines(in)) {
    if (d.values.size() != 2) throw InputError("expected an interval 'a b'", d.line);
    const Interval iv{d.values[0], d.values[1]};
    if (iv.lo > iv.hi) throw InputError("interval has a > b", d.line);
    if (!ivs.empty() && !(ivs.back().hi < iv.lo)) {
      throw InputError("intervals on lines " + std::to_string(prev_line) + " and " +
                           std::to_string(d.line) + " are not sorted and disjoint",
                       d.line);
    }
    ivs.push_back(iv);
    prev_line = d.line;
  }
  if (ivs.empty()) throw InputError("set file is empty");
  return CompactSet(std::move(ivs));
}

void write_set(std::ostream& out, const CompactSet& x_set) {
  for (const auto& iv : x_set.intervals()) out << format_real(iv.lo) << ' ' << format_real(iv.hi) << '\n';
}

}  // namespace lebesgue_lab

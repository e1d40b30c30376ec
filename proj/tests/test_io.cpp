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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lebesgue_lab/io.hpp"

using namespace lebesgue_lab;

namespace {

std::size_t error_line(const std::string& text, auto reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const InputError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("matrix round trip") {
  const auto m = chebyshev_matrix(6);
  std::stringstream buf;
  write_matrix(buf, m);
  const auto back = read_matrix(buf);
  CHECK(back.rows() == m.rows());
  CHECK(back.matching() == NodeMatching::file_tolerance);
}

TEST_CASE("matrix parse errors carry line numbers") {
  auto rd = [](std::istream& in) { read_matrix(in); };
  CHECK(error_line("0\n0 1\n0 1\n", rd) == 3);
  CHECK(error_line("# header\n0\n\n0 x\n", rd) == 4);
  CHECK(error_line("0.5\n1 1\n", rd) == 2);
  CHECK(error_line("", rd) == 0);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_matrix(empty), InputError);
}

TEST_CASE("nodes") {
  std::istringstream in("# seq\n0\n1\n-1\n");
  const auto n = read_nodes(in);
  REQUIRE(n.size() == 3);
  CHECK(n[2] == -1);
  CHECK(error_line("0\n1\n0\n", [](std::istream& s) { read_nodes(s); }) == 3);
  CHECK(error_line("0\n1 2\n", [](std::istream& s) { read_nodes(s); }) == 2);
  std::stringstream buf;
  write_nodes(buf, NodeSequence({0.1, 1.0 / 3}));
  const auto back = read_nodes(buf);
  CHECK(back[1] == 1.0 / 3);
}

TEST_CASE("basis") {
  std::istringstream in("1\n-0.5 1\n0 -1 0 1\n");
  const auto b = read_basis(in);
  REQUIRE(b.polys.size() == 3);
  CHECK(degree(b.polys[2]) == 3);
  std::stringstream buf;
  write_basis(buf, b);
  CHECK(read_basis(buf).polys.size() == 3);
  CHECK(error_line("1\n\n2 nan?\n", [](std::istream& s) { read_basis(s); }) == 3);
}

TEST_CASE("sets") {
  std::istringstream in("-1 -0.5\n0 0\n0.25 1\n");
  const auto x = read_set(in);
  CHECK(x.intervals().size() == 3);
  CHECK(error_line("0 1\n0.5 2\n", [](std::istream& s) { read_set(s); }) == 2);
  CHECK(error_line("0 1\n3 2\n", [](std::istream& s) { read_set(s); }) == 2);
  CHECK(error_line("0 1 2\n", [](std::istream& s) { read_set(s); }) == 1);
  std::stringstream buf;
  write_set(buf, x);
  CHECK(read_set(buf).intervals().size() == 3);
}

TEST_CASE("format_real round trips") {
  for (Real v : {0.1, 1.0 / 3, -2.5e-300, 6.02e23, 0.0}) CHECK(std::stod(format_real(v)) == v);
}

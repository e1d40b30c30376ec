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

#include <algorithm>
#include <cmath>

#include "lebesgue_lab/poly.hpp"
#include "oracles.hpp"

using namespace lebesgue_lab;

TEST_CASE("Newton form evaluation") {
  CHECK(evaluate(NewtonForm({0.3}, {1}), 7.5) == 1);
  CHECK(evaluate(NewtonForm({0, 1}, {0, 1}), 3) == 3);
  // 2 + 3(x - 1) - (x - 1)(x - 2) at x = 4: 2 + 9 - 6
  CHECK(evaluate(NewtonForm({1, 2, 5}, {2, 3, -1}), 4) == doctest::Approx(5));
}

TEST_CASE("barycentric form") {
  const BarycentricForm p({-1, 0, 1}, {1, 0, 0});
  // l_1(x) = x(x - 1)/2
  CHECK(evaluate(p, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(evaluate(p, -1.0) == 1);
  CHECK(evaluate(p, 0.0) == 0);

  SUBCASE("weights") {
    const auto w = p.weights();
    CHECK(w[0] == doctest::Approx(0.5));
    CHECK(w[1] == doctest::Approx(-1));
    CHECK(w[2] == doctest::Approx(0.5));
  }
  SUBCASE("duplicate nodes rejected") {
    CHECK_THROWS_AS(BarycentricForm({0, 1, 0}, {1, 2, 3}), DomainError);
  }
  SUBCASE("non-finite evaluation point") {
    CHECK_THROWS_AS(evaluate(p, std::nan("")), DomainError);
    CHECK_THROWS_AS(evaluate(p, INFINITY), DomainError);
  }
}

TEST_CASE("barycentric evaluation is exact at nodes") {
  oracle::Uniform u(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = u.integer(1, 25);
    auto nodes = u.separated(m, -1, 1, 1e-3);
    std::vector<Real> values(nodes.size());
    for (Real& v : values) v = u(-10, 10);
    const BarycentricForm p(nodes, values);
    for (std::size_t k = 0; k < nodes.size(); ++k) CHECK(evaluate(p, nodes[k]) == values[k]);
  }
}

TEST_CASE("cardinal barycentric form matches the product formula") {
  oracle::Uniform u(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = u.integer(1, 21);
    auto nodes = u.separated(m, -1, 1, 1e-2);
    const std::size_t k0 = static_cast<std::size_t>(u.integer(0, m - 1));
    std::vector<Real> values(nodes.size(), 0.0);
    values[k0] = 1;
    const BarycentricForm p(nodes, values);
    const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end());
    const Real x = u(*lo, *hi);
    const Real expect = oracle::product_cardinal(nodes, k0, x);
    // forward error of the second form scales with the Lebesgue constant of the nodes
    const Real lam = oracle::scan_lebesgue_max(nodes, -1, 1, 4000);
    const Real bound = 1e-13 * (nodes.size() + 1) * (lam + oracle::product_lebesgue(nodes, x));
    CHECK(std::abs(evaluate(p, x) - expect) <= bound);
  }
}

TEST_CASE("to_monomial") {
  const MonomialForm lin = to_monomial(NewtonForm({1, 2}, {1, 1}));
  CHECK(std::vector<Real>(lin.coeffs().begin(), lin.coeffs().end()) == std::vector<Real>{0, 1});
  const MonomialForm m = to_monomial(NewtonForm({0, 1, 2}, {0, 0, 1}));
  REQUIRE(m.coeffs().size() == 3);
  CHECK(m.coeffs()[0] == 0);
  CHECK(m.coeffs()[1] == -1);
  CHECK(m.coeffs()[2] == 1);

  SUBCASE("round trip on random forms") {
    oracle::Uniform u(13);
    for (int trial = 0; trial < 40; ++trial) {
      const int m_nodes = trial < 20 ? 6 : u.integer(1, 10);
      auto nodes = u.separated(m_nodes, -1, 1, 0.05);
      std::vector<Real> c(nodes.size());
      for (Real& v : c) v = u(-2, 2);
      const NewtonForm nf(nodes, c);
      const MonomialForm mf = to_monomial(nf);
      for (int i = 0; i < 100; ++i) {
        const Real x = u(-1, 1);
        const Real a = evaluate(nf, x);
        CHECK(std::abs(a - evaluate(mf, x)) <= 1e-9 * (1 + std::abs(a)));
      }
    }
  }
}

TEST_CASE("degree with trimming") {
  CHECK(degree(MonomialForm({5})) == 0);
  CHECK(degree(MonomialForm({0, 0, 3})) == 2);
  CHECK_FALSE(degree(MonomialForm({0, 0})).has_value());
  CHECK(MonomialForm({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(degree(NewtonForm({0, 1, 2}, {1, 1, 0})) == 1);
  CHECK(degree(MonomialForm({1, 1, 1e-14})) == 1);
  CHECK(degree(MonomialForm({1, 1, 1e-11})) == 2);

  // Interpolating a cubic at 8 nodes yields degree 3 despite rounding.
  std::vector<Real> nodes{-1, -0.7, -0.2, 0.1, 0.3, 0.6, 0.8, 1};
  std::vector<Real> values;
  for (Real x : nodes) values.push_back(2 * x * x * x - x + 0.5);
  CHECK(degree(BarycentricForm(nodes, values)) == 3);
}

TEST_CASE("scaled keeps representation") {
  const PolynomialForm p = NewtonForm({0, 1}, {1, 2});
  const PolynomialForm q = scaled(p, -3);
  CHECK(std::holds_alternative<NewtonForm>(q));
  CHECK(evaluate(q, 0.7) == doctest::Approx(-3 * evaluate(p, 0.7)));
  CHECK(max_coeff_magnitude(q) == doctest::Approx(6));
}

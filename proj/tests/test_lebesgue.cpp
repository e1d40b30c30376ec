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

#include <cmath>
#include <numbers>

#include "lebesgue_lab/lebesgue.hpp"
#include "oracles.hpp"

using namespace lebesgue_lab;

namespace {

const std::vector<Real> kThree{-1, 0, 1};

Real runge(Real x) { return 1 / (1 + 25 * x * x); }

}  // namespace

TEST_CASE("fundamental_values") {
  CHECK(fundamental_values(kThree, 0) == std::vector<Real>{0, 1, 0});
  const auto v = fundamental_values(kThree, 0.5);
  CHECK(v[0] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(v[1] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(v[2] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK_THROWS_AS(fundamental_values(std::vector<Real>{0, 1, 0}, 0.5), DomainError);

  oracle::Uniform u(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto row = u.separated(u.integer(1, 12), -1, 1, 0.05);
    const Real x = u(-1, 1);
    const auto got = fundamental_values(row, x);
    Real sum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Real expect = oracle::product_cardinal(row, k, x);
      CHECK(std::abs(got[k] - expect) <= 1e-12 * (1 + std::abs(expect)));
      sum += got[k];
    }
    CHECK(sum == doctest::Approx(1).epsilon(1e-9));
  }
}

TEST_CASE("lagrange_interpolant") {
  SUBCASE("reproduces polynomials") {
    const auto f = SampledFunction::polynomial({0.3, -1, 0, 2, 0.5});
    oracle::Uniform u(32);
    const auto row = chebyshev_row(7);
    const auto p = lagrange_interpolant(f, row);
    for (int i = 0; i < 50; ++i) {
      const Real x = u(-1, 1);
      CHECK(std::abs(evaluate(p, x) - f(x)) <= 1e-9 * (1 + std::abs(f(x))));
    }
  }
  SUBCASE("abs on three nodes") {
    const auto p = lagrange_interpolant(registry_function("abs"), kThree);
    CHECK(evaluate(p, -1.0) == 1);
    CHECK(evaluate(p, 0.0) == 0);
    CHECK(evaluate(p, 1.0) == 1);
    CHECK(evaluate(p, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("function undefined at a node") {
    const auto f = SampledFunction::tabulated("t", {{-1, 0}, {1, 2}});
    CHECK_THROWS_AS(lagrange_interpolant(f, kThree), DomainError);
  }
  SUBCASE("runge pointwise error on eleven equispaced nodes") {
    const auto p = lagrange_interpolant(registry_function("runge"), equispaced_row(11, -1, 1));
    // high-precision reference for |f - L f|(0.95)
    CHECK(std::abs(runge(0.95) - evaluate(p, 0.95)) == doctest::Approx(1.8811908314168165).epsilon(1e-10));
  }
}

TEST_CASE("lebesgue_function") {
  CHECK(lebesgue_function(kThree, 0) == 1);
  CHECK(lebesgue_function(kThree, 0.5) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK_THROWS_AS(lebesgue_function(kThree, std::nan("")), DomainError);

  SUBCASE("agrees with the product formula") {
    oracle::Uniform u(33);
    for (int trial = 0; trial < 200; ++trial) {
      const auto row = u.separated(u.integer(1, 15), -1, 1, 0.03);
      const Real x = u(-1.2, 1.2);
      const Real expect = oracle::product_lebesgue(row, x);
      CHECK(std::abs(lebesgue_function(row, x) - expect) <= 1e-12 * expect);
    }
  }
  SUBCASE("one at every node of built-in matrices") {
    for (int n = 1; n <= 40; ++n) {
      for (const auto& row : {chebyshev_row(n), equispaced_row(n, -1, 1)})
        for (Real x : row) CHECK(lebesgue_function(row, x) == 1);
    }
  }
  SUBCASE("nested rows keep value one at earlier nodes") {
    const NodeSequence seq(leja_order(equispaced_row(25, -1, 1)));
    const auto m = nested_matrix(seq, 25);
    for (std::size_t j = 0; j < seq.size(); ++j)
      for (std::size_t n = j + 1; n <= m.size(); ++n) CHECK(lebesgue_function(m.row(n), seq[j]) == 1);
  }
}

TEST_CASE("lebesgue_sup_oracle") {
  const auto o = lebesgue_sup_oracle(kThree, 0.5);
  CHECK(o.value == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(o.signs == std::vector<int>{-1, 1, 1});
  CHECK(lebesgue_sup_oracle(kThree, 1).value == 1);
  CHECK_THROWS_AS(lebesgue_sup_oracle(equispaced_row(21, -1, 1), 0.1), DomainError);

  oracle::Uniform u(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto row = u.separated(u.integer(1, 9), -1, 1, 0.0);
    const Real x = u(-1, 1);
    const Real a = lebesgue_sup_oracle(row, x).value;
    CHECK(std::abs(a - lebesgue_function(row, x)) <= 1e-10 * std::max<Real>(1, a));
  }
}

TEST_CASE("lebesgue_constant") {
  const auto X = CompactSet::interval(-1, 1);
  const auto m = lebesgue_constant(kThree, X);
  CHECK(m.value == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(m.argmax == doctest::Approx(-0.5).epsilon(1e-6));

  CHECK(lebesgue_constant(std::vector<Real>{-1, 1}, X).value == doctest::Approx(1).epsilon(1e-15));
  const auto row = chebyshev_row(6);
  CHECK(lebesgue_constant(row, CompactSet::points(row)).value == 1);

  SUBCASE("dominates a dense scan and stays close to it") {
    oracle::Uniform u(35);
    for (int trial = 0; trial < 30; ++trial) {
      const auto r = u.separated(u.integer(2, 10), -1, 1, 0.05);
      const Real lam = lebesgue_constant(r, X).value;
      const Real scan = oracle::scan_lebesgue_max(r, -1, 1, 200000);
      CHECK(lam >= scan * (1 - 1e-12));
      CHECK(lam <= scan * (1 + 1e-6));
    }
  }
  SUBCASE("monotone in the set") {
    const auto r = equispaced_row(9, -1, 1);
    const Real big = lebesgue_constant(r, X).value;
    const Real small = lebesgue_constant(r, CompactSet({{-1, -0.5}, {0.2, 0.4}})).value;
    CHECK(small <= big + 1e-12);
  }
  SUBCASE("chebyshev closed forms") {
    CHECK(lebesgue_constant(chebyshev_row(2), X).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(lebesgue_constant(chebyshev_row(3), X).value == doctest::Approx(5.0 / 3).epsilon(1e-12));
  }
}

TEST_CASE("operator_norm_probe") {
  const auto X = CompactSet::interval(-1, 1);
  const std::vector<std::vector<int>> one{{1, 1, 1}};
  CHECK(operator_norm_probe(kThree, X, one) == doctest::Approx(1).epsilon(1e-12));
  CHECK(operator_norm_probe(kThree, X, 8, 1) == doctest::Approx(1.25).epsilon(1e-10));

  const auto row = chebyshev_row(12);
  const Real lam = lebesgue_constant(row, X).value;
  const Real probe = operator_norm_probe(row, X, 50, 7);
  CHECK(probe <= lam + 1e-12);
  CHECK(probe >= 1 - 1e-12);
  CHECK(operator_norm_probe(row, X, 4096, 7) == doctest::Approx(lam).epsilon(1e-9));
}

TEST_CASE("uniform_error") {
  const auto X = CompactSet::interval(-1, 1);
  const auto cubic = SampledFunction::polynomial({1, -2, 0, 3});
  CHECK(uniform_error(cubic, chebyshev_matrix(8), 5, X) <= 1e-9 * 6);

  const auto f = registry_function("runge");
  const auto cheb = chebyshev_matrix(41);
  const Real c10 = uniform_error(f, cheb, 10, X);
  const Real c20 = uniform_error(f, cheb, 20, X);
  const Real c40 = uniform_error(f, cheb, 40, X);
  CHECK(c10 > c20);
  CHECK(c20 > c40);

  const auto eq = equispaced_matrix(41);
  const Real e20 = uniform_error(f, eq, 20, X);
  const Real e40 = uniform_error(f, eq, 40, X);
  CHECK(e40 > e20);
  CHECK(e20 > uniform_error(f, eq, 10, X));
}

TEST_CASE("best_approx_upper_bound") {
  const auto X = CompactSet::interval(-1, 1);
  CHECK(best_approx_upper_bound(SampledFunction::polynomial({2, 0, -1}), 3, X) <= 1e-9);

  // The constant 1/2 equioscillates against |x| at -1, 0, 1, so E_1(|x|) = 1/2.
  const auto f = registry_function("abs");
  const std::vector<Real> alt{-1, 0, 1};
  for (std::size_t i = 0; i < alt.size(); ++i)
    CHECK(std::abs(alt[i]) - 0.5 == doctest::Approx(i % 2 == 0 ? 0.5 : -0.5));
  const Real e1 = 0.5;
  const Real bound = best_approx_upper_bound(f, 1, X);
  CHECK(bound >= e1 - 1e-12);
  CHECK(bound == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
}

TEST_CASE("lebesgue_lemma_check") {
  const auto X = CompactSet::interval(-1, 1);
  const auto cheb = chebyshev_matrix(41);
  const auto runge_f = registry_function("runge");
  for (int n = 5; n <= 40; n += 5) CHECK(lebesgue_lemma_check(runge_f, cheb, n, X).pass);

  const auto eq = equispaced_matrix(21);
  const auto abs_f = registry_function("abs");
  for (int n = 5; n <= 20; ++n) {
    const auto c = lebesgue_lemma_check(abs_f, eq, n, X);
    CHECK(c.pass);
    CHECK(c.slack == doctest::Approx((1 + c.lambda) * c.best_bound - c.error));
  }
  const auto lin = lebesgue_lemma_check(SampledFunction::polynomial({1, 1}), cheb, 4, X);
  CHECK(lin.pass);
  CHECK(lin.error <= 1e-12);
}

TEST_CASE("convergence_profile") {
  const auto X = CompactSet::interval(-1, 1);
  const std::vector<SampledFunction> fs{registry_function("abs")};
  const auto rows = convergence_profile(fs, chebyshev_matrix(61), X, 60);
  REQUIRE(rows.size() == 60);
  for (const auto& r : rows) {
    CHECK(r.lambda <= 2 / std::numbers::pi * std::log(r.n + 1.0) + 1);
    CHECK(r.ratio_log == doctest::Approx(r.lambda / std::log(r.n + 1.0)));
    CHECK(r.lambda_at_nodes_max == doctest::Approx(1));
  }
  CHECK(rows.back().errors[0] < rows[9].errors[0]);
  CHECK(rows.back().errors[0] < 0.02);

  SUBCASE("nested nodes on their own point set") {
    const NodeSequence seq({0, 1, -1, 0.5, -0.5, 0.25});
    const auto m = nested_matrix(seq, 6);
    const auto pts = CompactSet::points({0, 1, -1, 0.5, -0.5, 0.25});
    const auto prof = convergence_profile(fs, m, pts, 5, seq.points());
    CHECK(prof.back().lambda == 1);
    CHECK(prof.front().lambda > 1);
    for (const auto& r : prof) {
      for (std::size_t j = 0; j <= static_cast<std::size_t>(r.n); ++j) CHECK(r.lambda_at_probes[j] == 1);
    }
  }
  SUBCASE("equispaced growth") {
    const auto eq = convergence_profile(fs, equispaced_matrix(31), X, 30);
    CHECK(eq.back().ratio_log > 100);
  }
}

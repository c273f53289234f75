// Copyright 2026 The isofiber Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "isofiber/complex_roots.hpp"
#include "isofiber/errors.hpp"
#include "isofiber/factor.hpp"
#include "isofiber/poly.hpp"
#include "isofiber/rational.hpp"

using namespace isofiber;

namespace {

ZPoly z(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

ZPoly expand(const std::vector<ZFactor>& fs) {
  ZPoly out = z({1});
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) out = multiply(out, f.poly);
  return out;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK_THROWS_AS(parse_rational("6/-4"), Error);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+0/5") == Rational(0));
  CHECK(parse_rational("123456789012345678901234567890").get_num() ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("log_abs of big integers") {
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(log_abs(big) == doctest::Approx(400 * std::log(10.0)).epsilon(1e-14));
  CHECK(log_abs(BigInt(-7)) == doctest::Approx(std::log(7.0)));
}

TEST_CASE("polynomial arithmetic and gcd") {
  PolynomialQ x = PolynomialQ::variable();
  PolynomialQ one = PolynomialQ::constant(Rational(1));
  PolynomialQ a = (x - one) * (x + one) * (x + one);
  PolynomialQ b = (x + one) * (x * x + one);
  CHECK(gcd(a, b) == x + one);
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(a.derivative() == PolynomialQ(std::vector<Rational>{Rational(-1), Rational(2), Rational(3)}));
}

TEST_CASE("rational functions stay reduced") {
  PolynomialQ x = PolynomialQ::variable();
  PolynomialQ one = PolynomialQ::constant(Rational(1));
  RationalFunctionQ r((x * x - one) * Rational(6), (x - one) * Rational(4));
  CHECK(r.numerator().degree() == 1);
  CHECK(r.denominator().degree() == 0);
  CHECK(r(Rational(3)) == Rational(6));
  CHECK(r.map_degree() == 1);
}

TEST_CASE("factor recovers a known factorization") {
  ZPoly f = multiply(multiply(multiply(z({1, 0, 1}), z({-2, 1})), multiply(z({-2, 1}), z({1, 3}))), z({1, 1, 0, 0, 1}));
  auto fs = factor(f);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0] == ZFactor{z({-2, 1}), 2});
  CHECK(fs[1] == ZFactor{z({1, 3}), 1});
  CHECK(fs[2] == ZFactor{z({1, 0, 1}), 1});
  CHECK(fs[3] == ZFactor{z({1, 1, 0, 0, 1}), 1});
  CHECK(expand(fs) == primitive_part(f));
}

TEST_CASE("factor keeps a Swinnerton-Dyer polynomial irreducible") {
  // minimal polynomial of sqrt2 + sqrt3 + sqrt5: every reduction splits
  // into pieces of degree <= 2, so recombination does all the work
  ZPoly s = z({576, 0, -960, 0, 352, 0, -40, 0, 1});
  auto fs = factor(s);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].poly == s);
  auto prod = factor(multiply(s, z({-5, 0, 1})));
  CHECK(prod.size() == 2);
}

TEST_CASE("factor round-trips random products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly f = z({1});
    int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) {
      ZPoly g;
      int deg = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k <= deg; ++k) g.emplace_back(coef(rng));
      if (g.back() == 0) g.back() = 1;
      strip(g);
      if (degree(g) < 1) continue;
      f = multiply(f, g);
    }
    if (degree(f) < 1) continue;
    auto fs = factor(f);
    ZPoly back = expand(fs);
    ZPoly target = primitive_part(f);
    CHECK(back == target);
  }
}

TEST_CASE("rational roots") {
  ZPoly f = multiply(multiply(z({-2, 3}), z({5, 1})), z({1, 0, 1}));
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-5));
  CHECK(roots[1] == Rational(2, 3));
  CHECK(rational_roots(z({-2, 0, 1})).empty());
}

TEST_CASE("complex roots and Mahler measure") {
  auto r = complex_roots(z({1, 0, 0, 0, 1}));
  REQUIRE(r.values.size() == 4);
  for (auto v : r.values) CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
  CHECK(r.max_relative_residual < 1e-12);
  CHECK(log_mahler_measure(z({-2, 0, 1})) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(log_mahler_measure(z({-2, 3})) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  auto rep = complex_roots(multiply(z({-1, 1}), z({-1, 1})));
  REQUIRE(rep.values.size() == 2);
  CHECK(std::abs(rep.values[0] - 1.0) < 1e-10);
}

TEST_CASE("complex roots with widely spread magnitudes") {
  // (x - 10^-8)(x - 1)(x - 10^9) scaled to integers
  ZPoly f = multiply(multiply(z({-1, 100000000}), z({-1, 1})), z({-1000000000, 1}));
  auto r = complex_roots(f);
  REQUIRE(r.values.size() == 3);
  CHECK(r.values[0].real() == doctest::Approx(1e-8).epsilon(1e-9));
  CHECK(r.values[1].real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.values[2].real() == doctest::Approx(1e9).epsilon(1e-12));
}

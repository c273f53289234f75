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

#include <algorithm>
#include <cmath>
#include <random>

#include "isofiber/errors.hpp"
#include "isofiber/heights.hpp"
#include "oracles.hpp"

using namespace isofiber;

namespace {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("height_rational") {
  CHECK(height_rational(Rational(0)) == 1);
  CHECK(height_rational(Rational(2, 3)) == 3);
  CHECK(height_rational(Rational(-7, 2)) == 7);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng, 100000);
    CHECK(height_rational(a) == oracle::brute_height(a));
    if (a != 0) CHECK(height_rational(a) == height_rational(1 / a));
  }
}

TEST_CASE("projective_height") {
  auto h = [](std::vector<Rational> v) { return projective_height(ProjectivePoint(std::move(v))); };
  CHECK(h({1, 1}) == 1);
  CHECK(h({Rational(10, 3), Rational(2, 3), 5, 1}) == 15);
  CHECK(h({2, 4, 6}) == 3);
  CHECK_THROWS_AS(ProjectivePoint(std::vector<Rational>{0, 0}), Error);
  CHECK_THROWS_AS(ProjectivePoint(std::vector<Rational>{}), Error);
}

TEST_CASE("projective_height is scale invariant") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Rational> v;
    int n = 2 + static_cast<int>(rng() % 4);
    for (int k = 0; k < n; ++k) v.push_back(random_rational(rng, 1000));
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
    Rational lambda = random_rational(rng, 1000);
    if (lambda == 0) continue;
    std::vector<Rational> w;
    for (const auto& x : v) w.push_back(x * lambda);
    BigInt hv = projective_height(ProjectivePoint(v));
    REQUIRE(hv == projective_height(ProjectivePoint(w)));
    REQUIRE(hv == oracle::brute_projective_height(v));
  }
}

TEST_CASE("segre_embed ordering and height") {
  ProjectivePoint p = segre_embed({{3, 1}, {5, 1}});
  CHECK(p.coordinates() == std::vector<Rational>{15, 3, 5, 1});
  CHECK(projective_height(p) == 15);
  ProjectivePoint zero = segre_embed({{0, 1}, {0, 1}});
  CHECK(zero.coordinates() == std::vector<Rational>{0, 0, 0, 1});
  CHECK(projective_height(zero) == 1);
  CHECK_THROWS_AS(segre_embed({}), Error);
  ProjectivePoint three = segre_embed({{2, 1}, {3, 1}, {5, 1}});
  CHECK(three.coordinates() == std::vector<Rational>{30, 6, 10, 2, 15, 3, 5, 1});
}

TEST_CASE("segre height is the product of heights") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::pair<Rational, Rational>> pts;
    BigInt product = 1;
    for (int k = 0; k < n; ++k) {
      Rational x = random_rational(rng, 500);
      pts.emplace_back(x, 1);
      product *= oracle::brute_height(x);
    }
    REQUIRE(projective_height(segre_embed(pts)) == product);
  }
}

TEST_CASE("algebraic_height_from_minpoly") {
  auto zp = [](std::initializer_list<long> c) {
    ZPoly p;
    for (long v : c) p.emplace_back(v);
    return p;
  };
  CHECK(algebraic_height_from_minpoly(zp({-2, 1})) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(algebraic_height_from_minpoly(zp({-2, 3})) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(algebraic_height_from_minpoly(zp({-2, 0, 1})) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(algebraic_height_from_minpoly(zp({5})), Error);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng, 1000000);
    ZPoly mp{-BigInt(a.get_num()), BigInt(a.get_den())};
    double h = algebraic_height_from_minpoly(mp);
    CHECK(std::abs(h - std::log(height_rational(a).get_d())) < 1e-9);
  }
}

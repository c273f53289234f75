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

#include "isofiber/enumeration.hpp"
#include "isofiber/heights.hpp"
#include "oracles.hpp"

using namespace isofiber;

namespace {

RationalFunctionQ c(long n) { return RationalFunctionQ::constant(Rational(n)); }
RationalFunctionQ t() { return RationalFunctionQ::variable(); }

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(enumerate_rationals(0).empty());
  CHECK(enumerate_rationals(1) == std::vector<Rational>{0, 1, -1});
  CHECK(enumerate_rationals(2) ==
        std::vector<Rational>{0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2});
  CHECK(enumerate_rationals(3).size() == 15);
  CHECK(count_rationals(0) == 0);
  CHECK(count_rationals(1) == 3);
  CHECK(count_rationals(2) == 7);
  CHECK(count_rationals(3) == 15);
}

TEST_CASE("enumeration matches the brute-force double loop") {
  for (std::int64_t B = 1; B <= 50; ++B) {
    auto got = enumerate_rationals(static_cast<std::uint64_t>(B));
    REQUIRE(got.size() == count_rationals(static_cast<std::uint64_t>(B)));
    REQUIRE(sorted(got) == sorted(oracle::brute_rationals(B)));
  }
}

TEST_CASE("enumeration order is canonical and heights never decrease") {
  auto v = enumerate_rationals(40);
  for (std::size_t i = 1; i < v.size(); ++i) {
    REQUIRE(canonical_less(v[i - 1], v[i]));
    REQUIRE(height_rational(v[i - 1]) <= height_rational(v[i]));
  }
  RationalEnumerator e(40);
  std::size_t k = 0;
  while (auto x = e.next()) REQUIRE(*x == v[k++]);
  CHECK(k == v.size());
}

TEST_CASE("count_rationals envelope") {
  std::uint64_t prev = 0;
  for (std::uint64_t B = 1; B <= 1000; ++B) {
    std::uint64_t n = count_rationals(B);
    REQUIRE(n >= prev);
    REQUIRE(n <= 4 * B * B + 1);
    prev = n;
  }
}

TEST_CASE("segre height scan") {
  WeierstrassFamily fam(t(), c(1), c(1), t());
  SegreScan small = enumerate_by_segre_height(fam, BigInt(1000000), 10);
  SegreScan large = enumerate_by_segre_height(fam, BigInt(1000000), 100);
  CHECK_FALSE(small.certified);
  CHECK(small.scanned == count_rationals(10));
  for (const auto& e : small.entries) {
    bool found = std::any_of(large.entries.begin(), large.entries.end(),
                             [&](const SegreScanEntry& x) { return x.t == e.t; });
    CHECK(found);
  }
  REQUIRE(small.entries.size() == 1);
  CHECK(small.entries[0].t == 0);
  CHECK(small.entries[0].fiber_height == 1728);

  // independent filter over the plain enumeration
  for (std::uint64_t S : {5u, 20u}) {
    BigInt bound(100000000);
    std::vector<Rational> expect;
    for (const Rational& x : oracle::brute_rationals(static_cast<std::int64_t>(S))) {
      FiberPair p = specialize(fam, x);
      if (!p.smooth()) continue;
      if (oracle::brute_height(p.first->j) * oracle::brute_height(p.second->j) <= bound) expect.push_back(x);
    }
    std::vector<Rational> got;
    for (const auto& e : enumerate_by_segre_height(fam, bound, S).entries) got.push_back(e.t);
    CHECK(sorted(got) == sorted(expect));
  }
}

TEST_CASE("identical family at B = 1 keeps only unit-height j") {
  WeierstrassFamily fam(t(), c(1), t(), c(1));
  SegreScan scan = enumerate_by_segre_height(fam, BigInt(1), 30);
  for (const auto& e : scan.entries) {
    FiberPair p = specialize(fam, e.t);
    CHECK(height_rational(p.first->j) == 1);
    CHECK(height_rational(p.second->j) == 1);
  }
}

TEST_CASE("segre scan certification") {
  WeierstrassFamily fam(t(), c(1), c(1), t());
  // deg j = 3: C (S + 1)^3 > B certifies
  CHECK(segre_scan_certified(fam, BigInt(1000), 10, 1.0));
  CHECK_FALSE(segre_scan_certified(fam, BigInt(2000), 10, 1.0));
  CHECK_FALSE(segre_scan_certified(fam, BigInt(1000), 10, std::nullopt));
  CHECK(enumerate_by_segre_height(fam, BigInt(1000), 10, 1.0).certified);
}

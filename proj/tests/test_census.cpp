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
#include <set>

#include "isofiber/census.hpp"
#include "isofiber/errors.hpp"
#include "isofiber/heights.hpp"
#include "oracles.hpp"

using namespace isofiber;

namespace {

const std::string kDir = ISOFIBER_TEST_MODPOLY_DIR;
const std::string kFamilies = ISOFIBER_TEST_FAMILY_DIR;

const ModularDatabase& db() {
  static const ModularDatabase d = ModularDatabase::load(kDir, 30);
  return d;
}

CensusConfig config(const std::string& family, long B) {
  CensusConfig c;
  c.family_path = kFamilies + "/" + family;
  c.modpoly_dir = kDir;
  c.height_bound = B;
  return c;
}

CensusReport run(const CensusConfig& c) { return run_census(c, load_family(c.family_path), db()); }

// Phi_n(x, y) with per-call power tables, straight from the stored terms.
bool naive_zero(const ModularPolynomial& phi, const Rational& x, const Rational& y) {
  int deg = static_cast<int>(psi(phi.level));
  std::vector<Rational> xp(deg + 1, Rational(1)), yp(deg + 1, Rational(1));
  for (int i = 1; i <= deg; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  Rational total = 0;
  for (const auto& [ik, c] : phi.terms) {
    auto [i, k] = ik;
    total += Rational(c) * xp[i] * yp[k];
    if (i != k) total += Rational(phi.antisymmetric ? BigInt(-c) : c) * xp[k] * yp[i];
  }
  return total == 0;
}

}  // namespace

TEST_CASE("identical family: every smooth fiber has degree 1") {
  CensusReport r = run(config("identical.txt", 3));
  CHECK(r.totals.scanned == 15);
  CHECK(r.totals.isogenous == r.totals.smooth);
  for (const auto& f : r.records)
    if (f.smooth()) CHECK(f.min_isogeny_degree == 1);
}

TEST_CASE("Velu family: degree 2 once isomorphism is excluded") {
  CensusConfig c = config("velu.txt", 10);
  c.min_isogeny_degree = 2;
  CensusReport r = run(c);
  CHECK(r.totals.smooth > 0);
  for (const auto& f : r.records)
    if (f.smooth()) CHECK(f.min_isogeny_degree == 2);
}

TEST_CASE("generic family matches an independent recount") {
  CensusReport r = run(config("generic.txt", 10));
  std::set<std::string> expect;
  std::uint64_t smooth = 0;
  for (const Rational& t : oracle::brute_rationals(10)) {
    Rational d1 = 4 * t * t * t + 27, d2 = 4 + 27 * t * t;
    if (d1 == 0 || d2 == 0) continue;
    ++smooth;
    Rational j = 6912 * t * t * t / d1, jp = Rational(6912) / d2;
    for (int n = 1; n <= 30; ++n) {
      if (naive_zero(db().at(n).polynomial(), j, jp)) {
        expect.insert(to_string(t) + ":" + std::to_string(n));
        break;
      }
    }
  }
  std::set<std::string> got;
  for (const auto& f : r.records)
    if (f.min_isogeny_degree) got.insert(to_string(f.t) + ":" + std::to_string(*f.min_isogeny_degree));
  CHECK(got == expect);
  CHECK(r.totals.isogenous == expect.size());
  CHECK(r.totals.smooth == smooth);
}

TEST_CASE("records are consistent") {
  CensusReport r = run(config("generic.txt", 12));
  std::uint64_t iso = 0;
  for (const auto& f : r.records) {
    CHECK(f.height_t == height_rational(f.t));
    if (f.min_isogeny_degree) {
      ++iso;
      CHECK(f.smooth());
    }
    if (f.smooth()) CHECK(*f.fiber_height == height_rational(*f.j) * height_rational(*f.jp));
  }
  CHECK(iso == r.totals.isogenous);
  CHECK(r.totals.isogenous <= r.totals.scanned);
  CHECK(r.totals.recorded == r.records.size());
}

TEST_CASE("monotone in B and sparse for the generic family") {
  std::set<std::string> prev;
  for (long B : {1, 2, 3, 5, 10}) {
    CensusReport r = run(config("generic.txt", B));
    std::set<std::string> now;
    for (const auto& f : r.records)
      if (f.min_isogeny_degree) now.insert(to_string(f.t));
    CHECK(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
    if (B >= 5) CHECK(r.totals.isogenous < r.totals.smooth);
    prev = now;
  }
}

TEST_CASE("JSON is deterministic and round-trips") {
  CensusConfig c = config("generic.txt", 6);
  std::string one = emit_json(run(c));
  c.threads = 4;
  CensusReport r4 = run(c);
  CHECK(emit_json(r4) == one);
  CHECK(parse_json(one) == r4);
  CHECK(emit_json(parse_json(one)) == one);
  std::string csv = emit_csv(r4);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r4.records.size() + 1);
}

TEST_CASE("empty census") {
  CensusConfig c = config("generic.txt", 1);
  c.height_mode = HeightMode::kSegre;
  c.search_bound = 5;
  CensusReport r = run(c);
  CHECK(r.records.empty());
  CHECK(r.totals.isogenous == 0);
  CHECK(r.completeness.segre_certified == false);
  CHECK(parse_json(emit_json(r)) == r);
  CHECK(emit_csv(r).find('\n') == emit_csv(r).size() - 1);
}

TEST_CASE("CM handling") {
  CensusConfig c = config("generic.txt", 5);
  c.cm = CMHandling::kInclude;
  CensusReport inc = run(c);
  c.cm = CMHandling::kFlag;
  CensusReport flag = run(c);
  c.cm = CMHandling::kExclude;
  CensusReport exc = run(c);
  CHECK(inc.totals.cm_flagged == 0);
  CHECK(flag.totals.cm_flagged > 0);  // t = 0 gives j = 0, j' = 1728
  CHECK(flag.totals.isogenous == inc.totals.isogenous);
  CHECK(exc.totals.cm_excluded == flag.totals.cm_flagged);
  CHECK(exc.totals.isogenous == flag.totals.isogenous - flag.totals.isogenous_cm);
}

TEST_CASE("bound section") {
  CensusReport r = run(config("generic.txt", 3));
  CHECK_FALSE(r.bound_report.has_value());
  REQUIRE(r.bound_error.has_value());
  CHECK(std::find(r.flags.begin(), r.flags.end(), "bound report omitted: level window infeasible") != r.flags.end());
  CensusConfig big = config("identical.txt", 2);
  big.height_mode = HeightMode::kSegre;
  big.search_bound = 3;
  big.height_bound = BigInt("100000000000000000000000000000000000000000");
  CensusReport s = run(big);
  REQUIRE(s.bound_report.has_value());
  CHECK(s.bound_report->inputs.mode == BoundMode::kUniform);
  CHECK(parse_json(emit_json(s)) == s);
}

TEST_CASE("config errors") {
  CensusConfig c = config("generic.txt", 0);
  CHECK_THROWS_AS(run_census(c), Error);
  c = config("generic.txt", 5);
  c.height_mode = HeightMode::kSegre;
  CHECK_THROWS_AS(run_census(c), Error);
  c = config("missing.txt", 5);
  CHECK_THROWS_AS(run_census(c), Error);
  CHECK_THROWS_AS(parse_cm_handling("sometimes"), Error);
  CHECK(parse_height_mode("segre") == HeightMode::kSegre);
  c = config("generic.txt", 5);
  c.max_isogeny_degree = 31;
  try {
    run_census(c);
    FAIL("expected missing level");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMissingLevel);
  }
}

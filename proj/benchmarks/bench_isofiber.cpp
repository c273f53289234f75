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

#include <benchmark/benchmark.h>

#include <random>

#include "isofiber/census.hpp"
#include "isofiber/enumeration.hpp"
#include "isofiber/factor.hpp"
#include "isofiber/heights.hpp"
#include "isofiber/modpoly.hpp"

using namespace isofiber;

namespace {

const std::string kDir = ISOFIBER_BENCH_MODPOLY_DIR;
const std::string kFamilies = ISOFIBER_BENCH_FAMILY_DIR;

const ModularDatabase& db() {
  static const ModularDatabase d = ModularDatabase::load(kDir, 30);
  return d;
}

void BM_EnumerateRationals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rationals(static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * count_rationals(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateRationals)->Arg(50)->Arg(200);

void BM_SegreHeight(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int i = 0; i < 4; ++i) {
    Rational q(static_cast<long>(rng() % 2000000) - 1000000, 1 + rng() % 1000000);
    q.canonicalize();
    pts.emplace_back(q, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(projective_height(segre_embed(pts)));
}
BENCHMARK(BM_SegreHeight);

void BM_FactorSwinnertonDyer(benchmark::State& state) {
  ZPoly s;
  for (long c : {576, 0, -960, 0, 352, 0, -40, 0, 1}) s.emplace_back(c);
  for (auto _ : state) benchmark::DoNotOptimize(factor(s));
}
BENCHMARK(BM_FactorSwinnertonDyer);

void BM_LoadDatabase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ModularDatabase::load(kDir, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LoadDatabase)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

// Screening a nonzero value (the common case) versus exact evaluation.
void BM_Vanishes(benchmark::State& state) {
  const auto& phi = db().at(static_cast<int>(state.range(0)));
  Rational a(123457, 991), b(-77, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(phi.vanishes(a, b));
}
BENCHMARK(BM_Vanishes)->Arg(2)->Arg(11)->Arg(30);

void BM_ExactEvaluate(benchmark::State& state) {
  const auto& phi = db().at(static_cast<int>(state.range(0)));
  Rational a(123457, 991), b(-77, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(phi.evaluate(a, b));
}
BENCHMARK(BM_ExactEvaluate)->Arg(2)->Arg(11)->Arg(30);

void BM_IsogenousFactors(benchmark::State& state) {
  Rational j(987654, 321);
  for (auto _ : state) benchmark::DoNotOptimize(isogenous_factors(db(), j, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IsogenousFactors)->Arg(5)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_CensusGeneric(benchmark::State& state) {
  CensusConfig c;
  c.family_path = kFamilies + "/generic.txt";
  c.modpoly_dir = kDir;
  c.height_bound = state.range(0);
  WeierstrassFamily fam = load_family(c.family_path);
  for (auto _ : state) benchmark::DoNotOptimize(run_census(c, fam, db()));
}
BENCHMARK(BM_CensusGeneric)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isofiber/cover_bounds.hpp"
#include "isofiber/family.hpp"
#include "isofiber/modpoly.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

// kParameter counts t with H(t) <= B; kSegre counts t with H(P_t) <= B.
enum class HeightMode { kParameter, kSegre };

// kInclude: no CM screening. kFlag: CM fibers are recorded and counted
// separately but stay in the census. kExclude: CM fibers are recorded but
// never tested for isogeny.
enum class CMHandling { kInclude, kFlag, kExclude };

enum class OutputFormat { kJson, kCsv };

const char* to_string(HeightMode m);
const char* to_string(CMHandling c);
const char* to_string(OutputFormat f);

// Throw Error(kConfig) on unknown names.
HeightMode parse_height_mode(std::string_view s);
CMHandling parse_cm_handling(std::string_view s);
OutputFormat parse_output_format(std::string_view s);
IndexConvention parse_index_convention(std::string_view s);
BoundMode parse_bound_mode(std::string_view s);
IotaConvention parse_iota_convention(std::string_view s);

struct CensusConfig {
  std::filesystem::path family_path;
  BigInt height_bound = 1;
  HeightMode height_mode = HeightMode::kParameter;
  std::uint64_t search_bound = 0;               // segre mode only
  std::optional<double> segre_lower_constant;  // C in C * H(t)^{deg j} <= H(j(t))
  int max_isogeny_degree = 30;
  int min_isogeny_degree = 1;  // 2 drops geometric isomorphism
  std::filesystem::path modpoly_dir;
  CMHandling cm = CMHandling::kFlag;
  unsigned threads = 1;
  OutputFormat output = OutputFormat::kJson;
  IotaConvention iota = IotaConvention::kJoint;
  IndexConvention index = IndexConvention::kStated;
  std::optional<BoundMode> bound_mode;  // default: standard (parameter), uniform (segre)
  int d_K = 1;
  int m_floor = 17;
};

// Throws Error(kConfig) on inconsistent settings.
void check_config(const CensusConfig& config);

struct FiberRecord {
  Rational t;
  BigInt height_t;
  std::optional<Rational> j, jp;  // per smooth side
  std::optional<BigInt> fiber_height;  // H(j) H(j') when both sides are smooth
  bool singular_first = false;
  bool singular_second = false;
  std::optional<int> cm_first, cm_second;
  bool cm_excluded = false;
  std::optional<int> min_isogeny_degree;

  bool smooth() const { return !singular_first && !singular_second; }
  bool is_cm() const { return cm_first.has_value() || cm_second.has_value(); }

  friend bool operator==(const FiberRecord&, const FiberRecord&) = default;
};

// Everything needed to rerun: settings plus a description of the family.
// The thread count is left out so output does not depend on it.
struct ConfigEcho {
  std::string family_path;
  std::string height_bound;
  std::string height_mode;
  std::uint64_t search_bound = 0;
  std::optional<double> segre_lower_constant;
  int max_isogeny_degree = 30;
  int min_isogeny_degree = 1;
  std::string modpoly_dir;
  std::string cm;
  std::string iota_convention;
  std::string index_convention;
  std::string bound_mode;
  int d_K = 1;
  int m_floor = 17;
  std::string f, g, fp, gp, j, jp;
  int degree = 0;
  std::string iota_height;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct CensusTotals {
  std::uint64_t scanned = 0;     // parameters examined
  std::uint64_t recorded = 0;    // records emitted
  std::uint64_t smooth = 0;
  std::uint64_t singular = 0;
  std::uint64_t cm_flagged = 0;  // smooth records with a CM side
  std::uint64_t cm_excluded = 0;
  std::uint64_t isogenous = 0;   // |S(B)| or |S'(B)| up to the degree cap
  std::uint64_t isogenous_cm = 0;

  friend bool operator==(const CensusTotals&, const CensusTotals&) = default;
};

struct Completeness {
  int max_isogeny_degree = 30;
  std::string truncation_notice;
  std::optional<bool> segre_certified;  // segre mode only
  std::uint64_t segre_search_bound = 0;

  friend bool operator==(const Completeness&, const Completeness&) = default;
};

struct CensusReport {
  ConfigEcho config;
  CensusTotals totals;
  std::vector<FiberRecord> records;  // canonical order of t
  std::optional<BoundReport> bound_report;
  std::optional<std::string> bound_error;  // set when the level window is empty
  Completeness completeness;
  std::vector<std::string> flags;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// Loads the family and Phi_1 .. Phi_{max_isogeny_degree}, then scans.
CensusReport run_census(const CensusConfig& config);
CensusReport run_census(const CensusConfig& config, const WeierstrassFamily& family, const ModularDatabase& db);

// One fiber, exactly as the census computes it.
FiberRecord census_fiber(const WeierstrassFamily& family, const ModularDatabase& db, const Rational& t,
                         int max_isogeny_degree, int min_isogeny_degree, CMHandling cm);

// Keys: config, totals, records, bound_report, bound_error, completeness,
// flags. Rationals and integers are strings; output is byte-deterministic.
std::string emit_json(const CensusReport& report);
CensusReport parse_json(std::string_view text);

// The bound section alone, same layout as inside emit_json.
std::string emit_bound_json(const BoundReport& report);

// Header plus one row per record.
std::string emit_csv(const CensusReport& report);

}  // namespace isofiber

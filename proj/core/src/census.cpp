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

#include "isofiber/census.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "isofiber/enumeration.hpp"
#include "isofiber/errors.hpp"
#include "isofiber/heights.hpp"
#include "json.hpp"

namespace isofiber {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kChunk = 32;

template <typename E, std::size_t N>
E lookup(std::string_view s, const std::pair<const char*, E> (&table)[N], const char* what) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  std::string options;
  for (const auto& [name, value] : table) options += (options.empty() ? "" : "|") + std::string(name);
  throw Error(ErrorKind::kConfig, "unknown " + std::string(what) + " '" + std::string(s) + "' (expected " + options + ")");
}

}  // namespace

const char* to_string(HeightMode m) { return m == HeightMode::kParameter ? "parameter" : "segre"; }

const char* to_string(CMHandling c) {
  switch (c) {
    case CMHandling::kInclude: return "include";
    case CMHandling::kFlag: return "flag";
    case CMHandling::kExclude: return "exclude";
  }
  return "flag";
}

const char* to_string(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "csv"; }

HeightMode parse_height_mode(std::string_view s) {
  static const std::pair<const char*, HeightMode> t[] = {{"parameter", HeightMode::kParameter},
                                                         {"segre", HeightMode::kSegre}};
  return lookup(s, t, "height mode");
}

CMHandling parse_cm_handling(std::string_view s) {
  static const std::pair<const char*, CMHandling> t[] = {
      {"include", CMHandling::kInclude}, {"flag", CMHandling::kFlag}, {"exclude", CMHandling::kExclude}};
  return lookup(s, t, "cm handling");
}

OutputFormat parse_output_format(std::string_view s) {
  static const std::pair<const char*, OutputFormat> t[] = {{"json", OutputFormat::kJson},
                                                           {"csv", OutputFormat::kCsv}};
  return lookup(s, t, "output format");
}

IndexConvention parse_index_convention(std::string_view s) {
  static const std::pair<const char*, IndexConvention> t[] = {{"stated", IndexConvention::kStated},
                                                              {"alternative", IndexConvention::kAlternative}};
  return lookup(s, t, "index convention");
}

BoundMode parse_bound_mode(std::string_view s) {
  static const std::pair<const char*, BoundMode> t[] = {{"standard", BoundMode::kStandard},
                                                        {"uniform", BoundMode::kUniform}};
  return lookup(s, t, "bound mode");
}

IotaConvention parse_iota_convention(std::string_view s) {
  static const std::pair<const char*, IotaConvention> t[] = {{"joint", IotaConvention::kJoint},
                                                             {"product", IotaConvention::kProduct}};
  return lookup(s, t, "iota convention");
}

void check_config(const CensusConfig& c) {
  if (c.height_bound < 1) throw Error(ErrorKind::kConfig, "height bound B must be >= 1");
  if (c.height_mode == HeightMode::kParameter && !c.height_bound.fits_ulong_p())
    throw Error(ErrorKind::kConfig, "height bound too large for parameter mode");
  if (c.height_mode == HeightMode::kSegre && c.search_bound == 0)
    throw Error(ErrorKind::kConfig, "segre mode needs a search bound >= 1");
  if (c.max_isogeny_degree < 1) throw Error(ErrorKind::kConfig, "maximum isogeny degree must be >= 1");
  if (c.min_isogeny_degree < 1 || c.min_isogeny_degree > c.max_isogeny_degree)
    throw Error(ErrorKind::kConfig, "minimum isogeny degree must lie in [1, maximum]");
  if (c.threads < 1) throw Error(ErrorKind::kConfig, "thread count must be >= 1");
  if (c.d_K < 1) throw Error(ErrorKind::kConfig, "d_K must be >= 1");
  if (c.segre_lower_constant && !(*c.segre_lower_constant > 0.0))
    throw Error(ErrorKind::kConfig, "segre lower height constant must be positive");
}

FiberRecord census_fiber(const WeierstrassFamily& family, const ModularDatabase& db, const Rational& t,
                         int max_isogeny_degree, int min_isogeny_degree, CMHandling cm) {
  FiberRecord r;
  r.t = t;
  r.height_t = height_rational(t);
  FiberPair pair = specialize(family, t);
  r.singular_first = !pair.first.has_value();
  r.singular_second = !pair.second.has_value();
  if (pair.first) r.j = pair.first->j;
  if (pair.second) r.jp = pair.second->j;
  if (!pair.smooth()) return r;
  r.fiber_height = height_rational(*r.j) * height_rational(*r.jp);
  if (cm != CMHandling::kInclude) {
    r.cm_first = is_cm_j(*r.j);
    r.cm_second = is_cm_j(*r.jp);
  }
  if (cm == CMHandling::kExclude && r.is_cm()) {
    r.cm_excluded = true;
    return r;
  }
  r.min_isogeny_degree = minimal_isogeny_degree(db, *r.j, *r.jp, max_isogeny_degree, min_isogeny_degree);
  return r;
}

CensusReport run_census(const CensusConfig& config) {
  check_config(config);
  WeierstrassFamily family = load_family(config.family_path);
  ModularDatabase db = ModularDatabase::load(config.modpoly_dir, config.max_isogeny_degree);
  return run_census(config, family, db);
}

CensusReport run_census(const CensusConfig& config, const WeierstrassFamily& family, const ModularDatabase& db) {
  check_config(config);
  for (int n = 1; n <= config.max_isogeny_degree; ++n) db.at(n);

  CensusReport report;
  const BoundMode bound_mode = config.bound_mode.value_or(
      config.height_mode == HeightMode::kParameter ? BoundMode::kStandard : BoundMode::kUniform);
  const BigInt h_iota = iota_height(family, config.iota);
  const int d = family_degree(family);

  ConfigEcho& e = report.config;
  e.family_path = config.family_path.generic_string();
  e.height_bound = to_string(config.height_bound);
  e.height_mode = to_string(config.height_mode);
  e.search_bound = config.height_mode == HeightMode::kSegre ? config.search_bound : 0;
  e.segre_lower_constant = config.segre_lower_constant;
  e.max_isogeny_degree = config.max_isogeny_degree;
  e.min_isogeny_degree = config.min_isogeny_degree;
  e.modpoly_dir = config.modpoly_dir.generic_string();
  e.cm = to_string(config.cm);
  e.iota_convention = to_string(config.iota);
  e.index_convention = to_string(config.index);
  e.bound_mode = to_string(bound_mode);
  e.d_K = config.d_K;
  e.m_floor = config.m_floor;
  e.f = family.f().to_string();
  e.g = family.g().to_string();
  e.fp = family.fp().to_string();
  e.gp = family.gp().to_string();
  e.j = family.j().to_string();
  e.jp = family.jp().to_string();
  e.degree = d;
  e.iota_height = to_string(h_iota);

  std::vector<Rational> ts;
  if (config.height_mode == HeightMode::kParameter) {
    ts = enumerate_rationals(config.height_bound.get_ui());
    report.totals.scanned = ts.size();
  } else {
    SegreScan scan = enumerate_by_segre_height(family, config.height_bound, config.search_bound,
                                               config.segre_lower_constant);
    for (auto& entry : scan.entries) ts.push_back(entry.t);
    report.totals.scanned = scan.scanned;
    report.totals.singular = scan.singular;
    report.completeness.segre_certified = scan.certified;
    report.completeness.segre_search_bound = scan.search_bound;
  }

  report.records.resize(ts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        std::size_t begin = next.fetch_add(kChunk);
        if (begin >= ts.size()) return;
        std::size_t end = std::min(ts.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i)
          report.records[i] = census_fiber(family, db, ts[i], config.max_isogeny_degree,
                                           config.min_isogeny_degree, config.cm);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(ts.size());
    }
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(ts.size() / kChunk + 1)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusTotals& tot = report.totals;
  tot.recorded = report.records.size();
  for (const auto& r : report.records) {
    if (!r.smooth()) {
      if (config.height_mode == HeightMode::kParameter) ++tot.singular;
      continue;
    }
    ++tot.smooth;
    if (r.is_cm()) ++tot.cm_flagged;
    if (r.cm_excluded) ++tot.cm_excluded;
    if (r.min_isogeny_degree) {
      ++tot.isogenous;
      if (r.is_cm()) ++tot.isogenous_cm;
    }
  }

  report.completeness.max_isogeny_degree = config.max_isogeny_degree;
  report.completeness.truncation_notice =
      "isogeny detection stops at degree " + std::to_string(config.max_isogeny_degree) +
      "; isogenous counts are lower bounds";

  report.flags.push_back("affine parameters only (t = infinity not scanned)");
  report.flags.push_back("isogeny degree truncated at " + std::to_string(config.max_isogeny_degree));
  if (config.min_isogeny_degree > 1) report.flags.push_back("degree-1 isogenies (j = j') not counted");
  if (config.cm == CMHandling::kFlag) report.flags.push_back("CM fibers counted and flagged");
  if (config.cm == CMHandling::kExclude) report.flags.push_back("CM fibers excluded");
  if (config.height_mode == HeightMode::kSegre && !*report.completeness.segre_certified)
    report.flags.push_back("segre scan not certified complete beyond search bound");

  BoundInputs in;
  in.log_B = log_abs(config.height_bound);
  in.d = static_cast<std::uint64_t>(d);
  in.log_h_iota = log_abs(h_iota);
  in.d_K = config.d_K;
  in.mode = bound_mode;
  in.m_floor = config.m_floor;
  in.convention = config.index;
  try {
    report.bound_report = theorem_bound(in);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kInfeasibleLevel) throw;
    report.bound_error = err.what();
    report.flags.push_back("bound report omitted: level window infeasible");
  }
  return report;
}

namespace {

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt_q(const std::optional<Rational>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json bound_to_json(const BoundReport& b) {
  Json j;
  j["inputs"] = {{"log_B", b.inputs.log_B},
                 {"d", b.inputs.d},
                 {"log_h_iota", b.inputs.log_h_iota},
                 {"d_K", b.inputs.d_K},
                 {"mode", to_string(b.inputs.mode)},
                 {"m_floor", b.inputs.m_floor},
                 {"index_convention", to_string(b.inputs.convention)}};
  j["L"] = b.L;
  j["level"] = {{"m", b.level.m},
                {"L", b.level.L},
                {"window_low", b.level.window_low},
                {"window_high", b.level.window_high},
                {"floor", b.level.floor}};
  j["alpha"] = b.alpha;
  j["beta"] = b.beta;
  j["degree_lower"] = b.degree_lower;
  j["degree_upper"] = b.degree_upper;
  j["degree_parabolic"] = b.degree_parabolic;
  j["log_height_diagonal"] = b.log_height_diagonal;
  j["log_height_parabolic"] = b.log_height_parabolic;
  j["log_count_diagonal"] = b.log_count_diagonal;
  j["log_count_diagonal_upper"] = b.log_count_diagonal_upper;
  j["log_count_parabolic"] = b.log_count_parabolic;
  j["log_headline"] = b.log_headline;
  j["closed_form_L6"] = b.closed_form_L6;
  j["closed_form_logB6"] = b.closed_form_logB6;
  j["flags"] = b.flags;
  return j;
}

BoundReport bound_from_json(const Json& j) {
  BoundReport b;
  const Json& in = j.at("inputs");
  b.inputs.log_B = in.at("log_B").get<double>();
  b.inputs.d = in.at("d").get<std::uint64_t>();
  b.inputs.log_h_iota = in.at("log_h_iota").get<double>();
  b.inputs.d_K = in.at("d_K").get<int>();
  b.inputs.mode = parse_bound_mode(in.at("mode").get<std::string>());
  b.inputs.m_floor = in.at("m_floor").get<int>();
  b.inputs.convention = parse_index_convention(in.at("index_convention").get<std::string>());
  b.L = j.at("L").get<double>();
  const Json& lv = j.at("level");
  b.level.m = lv.at("m").get<std::uint64_t>();
  b.level.L = lv.at("L").get<double>();
  b.level.window_low = lv.at("window_low").get<double>();
  b.level.window_high = lv.at("window_high").get<double>();
  b.level.floor = lv.at("floor").get<int>();
  b.alpha = j.at("alpha").get<std::uint64_t>();
  b.beta = j.at("beta").get<std::uint64_t>();
  b.degree_lower = j.at("degree_lower").get<std::uint64_t>();
  b.degree_upper = j.at("degree_upper").get<std::uint64_t>();
  b.degree_parabolic = j.at("degree_parabolic").get<std::uint64_t>();
  b.log_height_diagonal = j.at("log_height_diagonal").get<double>();
  b.log_height_parabolic = j.at("log_height_parabolic").get<double>();
  b.log_count_diagonal = j.at("log_count_diagonal").get<double>();
  b.log_count_diagonal_upper = j.at("log_count_diagonal_upper").get<double>();
  b.log_count_parabolic = j.at("log_count_parabolic").get<double>();
  b.log_headline = j.at("log_headline").get<double>();
  b.closed_form_L6 = j.at("closed_form_L6").get<double>();
  b.closed_form_logB6 = j.at("closed_form_logB6").get<double>();
  b.flags = j.at("flags").get<std::vector<std::string>>();
  return b;
}

std::optional<int> get_opt_int(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

std::optional<Rational> get_opt_q(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rational(j.get<std::string>());
}

BigInt parse_bigint(const std::string& s) {
  Rational q = parse_rational(s);
  if (q.get_den() != 1) throw Error(ErrorKind::kParse, "expected an integer, got " + s);
  return q.get_num();
}

}  // namespace

std::string emit_json(const CensusReport& r) {
  Json root;
  const ConfigEcho& e = r.config;
  root["config"] = {{"family_path", e.family_path},
                    {"height_bound", e.height_bound},
                    {"height_mode", e.height_mode},
                    {"search_bound", e.search_bound},
                    {"segre_lower_constant",
                     e.segre_lower_constant ? Json(*e.segre_lower_constant) : Json(nullptr)},
                    {"max_isogeny_degree", e.max_isogeny_degree},
                    {"min_isogeny_degree", e.min_isogeny_degree},
                    {"modpoly_dir", e.modpoly_dir},
                    {"cm", e.cm},
                    {"iota_convention", e.iota_convention},
                    {"index_convention", e.index_convention},
                    {"bound_mode", e.bound_mode},
                    {"d_K", e.d_K},
                    {"m_floor", e.m_floor},
                    {"family",
                     {{"f", e.f},
                      {"g", e.g},
                      {"fp", e.fp},
                      {"gp", e.gp},
                      {"j", e.j},
                      {"jp", e.jp},
                      {"degree", e.degree},
                      {"iota_height", e.iota_height}}}};
  const CensusTotals& t = r.totals;
  root["totals"] = {{"scanned", t.scanned},       {"recorded", t.recorded},
                    {"smooth", t.smooth},         {"singular", t.singular},
                    {"cm_flagged", t.cm_flagged}, {"cm_excluded", t.cm_excluded},
                    {"isogenous", t.isogenous},   {"isogenous_cm", t.isogenous_cm}};
  Json records = Json::array();
  for (const auto& f : r.records) {
    records.push_back({{"t", to_string(f.t)},
                       {"height_t", to_string(f.height_t)},
                       {"j", opt_q(f.j)},
                       {"jp", opt_q(f.jp)},
                       {"fiber_height", f.fiber_height ? Json(to_string(*f.fiber_height)) : Json(nullptr)},
                       {"singular_first", f.singular_first},
                       {"singular_second", f.singular_second},
                       {"cm_first", opt_int(f.cm_first)},
                       {"cm_second", opt_int(f.cm_second)},
                       {"cm_excluded", f.cm_excluded},
                       {"min_isogeny_degree", opt_int(f.min_isogeny_degree)}});
  }
  root["records"] = std::move(records);
  root["bound_report"] = r.bound_report ? bound_to_json(*r.bound_report) : Json(nullptr);
  root["bound_error"] = r.bound_error ? Json(*r.bound_error) : Json(nullptr);
  const Completeness& c = r.completeness;
  root["completeness"] = {{"max_isogeny_degree", c.max_isogeny_degree},
                          {"truncation_notice", c.truncation_notice},
                          {"segre_certified", c.segre_certified ? Json(*c.segre_certified) : Json(nullptr)},
                          {"segre_search_bound", c.segre_search_bound}};
  root["flags"] = r.flags;
  return root.dump(2) + "\n";
}

CensusReport parse_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::kParse, std::string("invalid report JSON: ") + ex.what());
  }
  CensusReport r;
  try {
    const Json& c = root.at("config");
    ConfigEcho& e = r.config;
    e.family_path = c.at("family_path").get<std::string>();
    e.height_bound = c.at("height_bound").get<std::string>();
    e.height_mode = c.at("height_mode").get<std::string>();
    e.search_bound = c.at("search_bound").get<std::uint64_t>();
    if (!c.at("segre_lower_constant").is_null()) e.segre_lower_constant = c.at("segre_lower_constant").get<double>();
    e.max_isogeny_degree = c.at("max_isogeny_degree").get<int>();
    e.min_isogeny_degree = c.at("min_isogeny_degree").get<int>();
    e.modpoly_dir = c.at("modpoly_dir").get<std::string>();
    e.cm = c.at("cm").get<std::string>();
    e.iota_convention = c.at("iota_convention").get<std::string>();
    e.index_convention = c.at("index_convention").get<std::string>();
    e.bound_mode = c.at("bound_mode").get<std::string>();
    e.d_K = c.at("d_K").get<int>();
    e.m_floor = c.at("m_floor").get<int>();
    const Json& fam = c.at("family");
    e.f = fam.at("f").get<std::string>();
    e.g = fam.at("g").get<std::string>();
    e.fp = fam.at("fp").get<std::string>();
    e.gp = fam.at("gp").get<std::string>();
    e.j = fam.at("j").get<std::string>();
    e.jp = fam.at("jp").get<std::string>();
    e.degree = fam.at("degree").get<int>();
    e.iota_height = fam.at("iota_height").get<std::string>();

    const Json& t = root.at("totals");
    r.totals.scanned = t.at("scanned").get<std::uint64_t>();
    r.totals.recorded = t.at("recorded").get<std::uint64_t>();
    r.totals.smooth = t.at("smooth").get<std::uint64_t>();
    r.totals.singular = t.at("singular").get<std::uint64_t>();
    r.totals.cm_flagged = t.at("cm_flagged").get<std::uint64_t>();
    r.totals.cm_excluded = t.at("cm_excluded").get<std::uint64_t>();
    r.totals.isogenous = t.at("isogenous").get<std::uint64_t>();
    r.totals.isogenous_cm = t.at("isogenous_cm").get<std::uint64_t>();

    for (const Json& j : root.at("records")) {
      FiberRecord f;
      f.t = parse_rational(j.at("t").get<std::string>());
      f.height_t = parse_bigint(j.at("height_t").get<std::string>());
      f.j = get_opt_q(j.at("j"));
      f.jp = get_opt_q(j.at("jp"));
      if (!j.at("fiber_height").is_null()) f.fiber_height = parse_bigint(j.at("fiber_height").get<std::string>());
      f.singular_first = j.at("singular_first").get<bool>();
      f.singular_second = j.at("singular_second").get<bool>();
      f.cm_first = get_opt_int(j.at("cm_first"));
      f.cm_second = get_opt_int(j.at("cm_second"));
      f.cm_excluded = j.at("cm_excluded").get<bool>();
      f.min_isogeny_degree = get_opt_int(j.at("min_isogeny_degree"));
      r.records.push_back(std::move(f));
    }
    if (!root.at("bound_report").is_null()) r.bound_report = bound_from_json(root.at("bound_report"));
    if (!root.at("bound_error").is_null()) r.bound_error = root.at("bound_error").get<std::string>();
    const Json& cp = root.at("completeness");
    r.completeness.max_isogeny_degree = cp.at("max_isogeny_degree").get<int>();
    r.completeness.truncation_notice = cp.at("truncation_notice").get<std::string>();
    if (!cp.at("segre_certified").is_null()) r.completeness.segre_certified = cp.at("segre_certified").get<bool>();
    r.completeness.segre_search_bound = cp.at("segre_search_bound").get<std::uint64_t>();
    r.flags = root.at("flags").get<std::vector<std::string>>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::kParse, std::string("malformed report JSON: ") + ex.what());
  }
  return r;
}

std::string emit_bound_json(const BoundReport& report) { return bound_to_json(report).dump(2) + "\n"; }

std::string emit_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "t,height_t,j,jp,fiber_height,singular_first,singular_second,cm_first,cm_second,cm_excluded,"
        "min_isogeny_degree\n";
  auto q = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
  auto i = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& f : r.records) {
    os << to_string(f.t) << ',' << to_string(f.height_t) << ',' << q(f.j) << ',' << q(f.jp) << ','
       << (f.fiber_height ? to_string(*f.fiber_height) : std::string()) << ',' << f.singular_first << ','
       << f.singular_second << ',' << i(f.cm_first) << ',' << i(f.cm_second) << ',' << f.cm_excluded << ','
       << i(f.min_isogeny_degree) << '\n';
  }
  return os.str();
}

}  // namespace isofiber

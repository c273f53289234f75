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

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "isofiber/census.hpp"
#include "isofiber/cover_bounds.hpp"
#include "isofiber/errors.hpp"
#include "isofiber/family.hpp"
#include "isofiber/heights.hpp"
#include "isofiber/modpoly.hpp"

using namespace isofiber;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitInfeasible = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kMissingLevel: return kExitData;
    case ErrorKind::kInfeasibleLevel: return kExitInfeasible;
    case ErrorKind::kRootFinding: return 1;
    default: return kExitConfig;
  }
}

std::string default_modpoly_dir() {
  if (const char* env = std::getenv("ISOFIBER_MODPOLY_DIR")) return env;
  return ISOFIBER_DEFAULT_MODPOLY_DIR;
}

// Natural log of a positive quantity written as an integer, a decimal or
// "e^x".
double parse_log(const std::string& text, const char* what) {
  if (text.rfind("e^", 0) == 0) {
    try {
      std::size_t used = 0;
      double x = std::stod(text.substr(2), &used);
      if (used == text.size() - 2 && std::isfinite(x)) return x;
    } catch (const std::exception&) {
    }
  } else {
    try {
      Rational q = parse_rational(text);
      if (q > 0) return log_abs(q.get_num()) - log_abs(q.get_den());
    } catch (const Error&) {
    }
    try {
      std::size_t used = 0;
      double x = std::stod(text, &used);
      if (used == text.size() && x > 0 && std::isfinite(x)) return std::log(x);
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::kConfig, std::string("cannot read ") + what + " '" + text + "'");
}

BigInt parse_positive_integer(const std::string& text, const char* what) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorKind::kConfig, std::string(what) + " must be an integer, got '" + text + "'");
  }
  if (q.get_den() != 1 || q < 1) throw Error(ErrorKind::kConfig, std::string(what) + " must be a positive integer");
  return q.get_num();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kConfig, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isogeny census for one-parameter families of elliptic curve pairs"};
  app.require_subcommand(1);

  // census
  auto* census = app.add_subcommand("census", "Scan fibers and count isogenous pairs");
  std::string family_path, height_bound = "1", height_mode = "parameter", modpoly_dir = default_modpoly_dir();
  std::string cm = "flag", output = "json", out_path, iota = "joint", index = "stated", bound_mode;
  std::uint64_t search_bound = 0;
  double segre_constant = 0.0;
  int max_degree = 30, min_degree = 1, d_K = 1, m_floor = 17;
  unsigned threads = 1;
  census->add_option("--family", family_path, "Family file")->required();
  census->add_option("--height-bound", height_bound, "Height bound B (integer)")->required();
  census->add_option("--height-mode", height_mode, "parameter: H(t) <= B; segre: H(P_t) <= B")
      ->check(CLI::IsMember({"parameter", "segre"}));
  census->add_option("--search-bound", search_bound, "Largest H(t) scanned in segre mode");
  census->add_option("--segre-constant", segre_constant,
                     "C with C H(t)^deg(j) <= H(j(t)); certifies the segre scan when given");
  census->add_option("--max-isogeny-degree", max_degree, "Largest isogeny degree tested (N_max)");
  census->add_option("--min-isogeny-degree", min_degree, "Smallest degree tested; 2 ignores j = j'");
  census->add_option("--modpoly-dir", modpoly_dir, "Directory with phi_j_<n>.txt");
  census->add_option("--cm", cm, "CM fibers: include, flag or exclude")
      ->check(CLI::IsMember({"include", "flag", "exclude"}));
  census->add_option("--threads", threads, "Worker threads");
  census->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  census->add_option("--out", out_path, "Output file (default stdout)");
  census->add_option("--iota", iota, "H(iota): joint or product")->check(CLI::IsMember({"joint", "product"}));
  census->add_option("--index", index, "Cover indices: stated or alternative")
      ->check(CLI::IsMember({"stated", "alternative"}));
  census->add_option("--bound-mode", bound_mode, "standard or uniform (default by height mode)")
      ->check(CLI::IsMember({"standard", "uniform"}));
  census->add_option("--dk", d_K, "Degree of the base field");
  census->add_option("--m-floor", m_floor, "Smallest admissible level M'");

  // bound
  auto* bound = app.add_subcommand("bound", "Print the bound report");
  std::string b_text, h_text = "1", mode = "standard", b_index = "stated";
  std::uint64_t b_d = 1;
  int b_dk = 1, b_floor = 17;
  bound->add_option("--B", b_text, "B as a number or e^x")->required();
  bound->add_option("--d", b_d, "Family degree d")->required();
  bound->add_option("--h-iota", h_text, "H(iota) as a number or e^x");
  bound->add_option("--dk", b_dk, "Degree of the base field");
  bound->add_option("--mode", mode, "standard or uniform")->check(CLI::IsMember({"standard", "uniform"}));
  bound->add_option("--index", b_index, "stated or alternative")->check(CLI::IsMember({"stated", "alternative"}));
  bound->add_option("--m-floor", b_floor, "Smallest admissible level M'");

  // check-isogeny
  auto* check = app.add_subcommand("check-isogeny", "Smallest cyclic isogeny degree between two j-invariants");
  std::string j1_text, j2_text, c_dir = default_modpoly_dir();
  int c_max = 30, c_min = 1;
  check->add_option("--j1", j1_text, "First j-invariant")->required();
  check->add_option("--j2", j2_text, "Second j-invariant")->required();
  check->add_option("--max-degree", c_max, "Largest degree tested");
  check->add_option("--min-degree", c_min, "Smallest degree tested");
  check->add_option("--modpoly-dir", c_dir, "Directory with phi_j_<n>.txt");

  // heights
  auto* heights = app.add_subcommand("heights", "Heights of one fiber");
  std::string t_text, h_family, h_iota = "joint";
  heights->add_option("--t", t_text, "Parameter t")->required();
  heights->add_option("--family", h_family, "Family file")->required();
  heights->add_option("--iota", h_iota, "joint or product")->check(CLI::IsMember({"joint", "product"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*census) {
      CensusConfig c;
      c.family_path = family_path;
      c.height_bound = parse_positive_integer(height_bound, "height bound");
      c.height_mode = parse_height_mode(height_mode);
      c.search_bound = search_bound;
      if (census->count("--segre-constant")) c.segre_lower_constant = segre_constant;
      c.max_isogeny_degree = max_degree;
      c.min_isogeny_degree = min_degree;
      c.modpoly_dir = modpoly_dir;
      c.cm = parse_cm_handling(cm);
      c.threads = threads;
      c.output = parse_output_format(output);
      c.iota = parse_iota_convention(iota);
      c.index = parse_index_convention(index);
      if (!bound_mode.empty()) c.bound_mode = parse_bound_mode(bound_mode);
      c.d_K = d_K;
      c.m_floor = m_floor;
      CensusReport r = run_census(c);
      write_output(c.output == OutputFormat::kJson ? emit_json(r) : emit_csv(r), out_path);
      if (r.bound_error) std::cerr << "note: " << *r.bound_error << "\n";
    } else if (*bound) {
      BoundInputs in;
      in.log_B = parse_log(b_text, "B");
      in.d = b_d;
      in.log_h_iota = parse_log(h_text, "H(iota)");
      in.d_K = b_dk;
      in.mode = parse_bound_mode(mode);
      in.m_floor = b_floor;
      in.convention = parse_index_convention(b_index);
      std::cout << emit_bound_json(theorem_bound(in));
    } else if (*check) {
      Rational j1 = parse_rational(j1_text), j2 = parse_rational(j2_text);
      ModularDatabase db = ModularDatabase::load(c_dir, c_max);
      auto n = minimal_isogeny_degree(db, j1, j2, c_max, c_min);
      std::cout << "j1 = " << to_string(j1) << "\n"
                << "j2 = " << to_string(j2) << "\n"
                << "degrees tested = " << std::max(1, c_min) << ".." << c_max << "\n"
                << "minimal isogeny degree = " << (n ? std::to_string(*n) : std::string("none")) << "\n";
    } else if (*heights) {
      WeierstrassFamily fam = load_family(h_family);
      Rational t = parse_rational(t_text);
      FiberPair p = specialize(fam, t);
      std::cout << "t = " << to_string(t) << "\n"
                << "H(t) = " << to_string(height_rational(t)) << "\n"
                << "d = " << family_degree(fam) << "\n"
                << "H(iota) = " << to_string(iota_height(fam, parse_iota_convention(h_iota))) << "\n";
      std::cout << "j = " << (p.first ? to_string(p.first->j) : std::string("singular")) << "\n"
                << "j' = " << (p.second ? to_string(p.second->j) : std::string("singular")) << "\n";
      if (p.smooth())
        std::cout << "H(P_t) = " << to_string(BigInt(height_rational(p.first->j) * height_rational(p.second->j))) << "\n";
      else
        std::cout << "H(P_t) = undefined (singular fiber)\n";
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

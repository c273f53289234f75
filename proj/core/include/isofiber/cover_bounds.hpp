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
#include <string>
#include <utility>
#include <vector>

#include "isofiber/rational.hpp"

namespace isofiber {

// Which index values to use for the two covers. kStated: alpha = m(m+1)(m-1)
// and beta = (m+1)^2 / 4. kAlternative: alpha / 2 and (m+1)^2.
enum class IndexConvention { kStated, kAlternative };

// kStandard: L = log(d+1) + log H(iota) + log B. kUniform: L = log B and
// the height bounds drop the (d+1) H(iota) factors.
enum class BoundMode { kStandard, kUniform };

const char* to_string(IndexConvention c);
const char* to_string(BoundMode m);

bool is_prime(std::uint64_t n);
// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

std::uint64_t alpha_index(std::uint64_t m, IndexConvention conv = IndexConvention::kStated);
std::uint64_t beta_index(std::uint64_t m, IndexConvention conv = IndexConvention::kStated);

// (m - (6 + 3 e2 + 4 e3)) / 12; e2, e3 in {0, 1}.
Rational genus_floor(std::uint64_t m, int e2 = 1, int e3 = 1);

struct LevelChoice {
  std::uint64_t m = 0;
  double L = 0.0;
  double window_low = 0.0;   // 2 sqrt(L)
  double window_high = 0.0;  // 4 sqrt(L)
  int floor = 17;            // M'

  friend bool operator==(const LevelChoice&, const LevelChoice&) = default;
};

// Smallest L with a feasible window: (p / 4)^2 for p the least prime >= M'.
double minimal_feasible_L(int m_floor = 17);

// Smallest prime m in [2 sqrt L, 4 sqrt L] with m >= M'. Throws
// Error(kInfeasibleLevel) with the minimal admissible L otherwise.
LevelChoice choose_level(double L, int m_floor = 17);

// (alpha d, (alpha + (m+1)^2) d); the second term uses the stated (m+1)^2.
std::pair<std::uint64_t, std::uint64_t> degree_bounds_diagonal(std::uint64_t m, std::uint64_t d,
                                                               IndexConvention conv = IndexConvention::kStated);
std::uint64_t degree_parabolic(std::uint64_t m, std::uint64_t d, IndexConvention conv = IndexConvention::kStated);

// Log of the lifted-point height bound on each cover. log_A = 9.204.
double height_bound_diagonal(std::uint64_t m, std::uint64_t d, double log_h_iota, double log_B, BoundMode mode);
double height_bound_parabolic(std::uint64_t m, std::uint64_t d, double log_h_iota, double log_B, BoundMode mode);

// 4 log(deg) + (2 d_K / deg) log_height_bound; implied constant 1.
double point_count_bound(std::uint64_t deg, int d_K, double log_height_bound);

// The three exponent pieces that stay bounded once m is chosen from L:
// 2 log(m+1) / (m(m-1)(m+1) d), 48 / (m(m-1) d), 2 (m+2) L / (m(m-1)(m+1)).
struct ExponentTerms {
  double log_term = 0.0;
  double level_term = 0.0;
  double height_term = 0.0;
};
ExponentTerms exponent_terms(std::uint64_t m, std::uint64_t d, double L);

struct BoundInputs {
  double log_B = 0.0;
  std::uint64_t d = 1;
  double log_h_iota = 0.0;
  int d_K = 1;
  BoundMode mode = BoundMode::kStandard;
  int m_floor = 17;
  IndexConvention convention = IndexConvention::kStated;

  friend bool operator==(const BoundInputs&, const BoundInputs&) = default;
};

struct BoundReport {
  BoundInputs inputs;
  double L = 0.0;
  LevelChoice level;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t degree_lower = 0;
  std::uint64_t degree_upper = 0;
  std::uint64_t degree_parabolic = 0;
  double log_height_diagonal = 0.0;
  double log_height_parabolic = 0.0;
  double log_count_diagonal = 0.0;        // with the lower degree
  double log_count_diagonal_upper = 0.0;  // same bound, upper degree
  double log_count_parabolic = 0.0;
  double log_headline = 0.0;               // log(sum of both contributions)
  double closed_form_L6 = 0.0;             // d^4 L^6
  double closed_form_logB6 = 0.0;          // d^4 (log B)^6
  std::vector<std::string> flags;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport theorem_bound(const BoundInputs& in);

}  // namespace isofiber

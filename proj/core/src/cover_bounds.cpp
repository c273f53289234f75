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

#include "isofiber/cover_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "isofiber/errors.hpp"
#include "isofiber/modpoly.hpp"

namespace isofiber {

const char* to_string(IndexConvention c) {
  return c == IndexConvention::kStated ? "stated" : "alternative";
}

const char* to_string(BoundMode m) { return m == BoundMode::kStandard ? "standard" : "uniform"; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::uint64_t alpha_index(std::uint64_t m, IndexConvention conv) {
  std::uint64_t a = m * (m + 1) * (m - 1);
  return conv == IndexConvention::kStated ? a : a / 2;
}

std::uint64_t beta_index(std::uint64_t m, IndexConvention conv) {
  std::uint64_t sq = (m + 1) * (m + 1);
  if (conv == IndexConvention::kAlternative) return sq;
  if (sq % 4 != 0) throw Error(ErrorKind::kInvalidInput, "beta_index needs odd m");
  return sq / 4;
}

Rational genus_floor(std::uint64_t m, int e2, int e3) {
  if ((e2 != 0 && e2 != 1) || (e3 != 0 && e3 != 1)) throw Error(ErrorKind::kInvalidInput, "e2, e3 must be 0 or 1");
  Rational r(BigInt(static_cast<unsigned long>(m)) - (6 + 3 * e2 + 4 * e3), 12);
  r.canonicalize();
  return r;
}

double minimal_feasible_L(int m_floor) {
  double p = static_cast<double>(next_prime(static_cast<std::uint64_t>(std::max(m_floor, 2))));
  return (p / 4.0) * (p / 4.0);
}

LevelChoice choose_level(double L, int m_floor) {
  if (!(L > 0.0) || !std::isfinite(L)) throw Error(ErrorKind::kInvalidInput, "level choice needs finite L > 0");
  LevelChoice out;
  out.L = L;
  out.floor = m_floor;
  out.window_low = 2.0 * std::sqrt(L);
  out.window_high = 4.0 * std::sqrt(L);
  std::uint64_t lo = static_cast<std::uint64_t>(std::ceil(out.window_low));
  lo = std::max<std::uint64_t>(lo, static_cast<std::uint64_t>(std::max(m_floor, 2)));
  for (std::uint64_t m = lo; static_cast<double>(m) <= out.window_high; ++m) {
    if (is_prime(m)) {
      out.m = m;
      return out;
    }
  }
  double min_L = minimal_feasible_L(m_floor);
  std::ostringstream os;
  os.precision(10);
  os << "no prime m >= " << m_floor << " in [" << out.window_low << ", " << out.window_high << "] for L = " << L
     << "; minimal admissible L = " << min_L << " (B >= e^" << min_L
     << " in uniform mode, the floor M = e^{(M'/4)^2} up to rounding M' to a prime)";
  throw Error(ErrorKind::kInfeasibleLevel, os.str());
}

std::pair<std::uint64_t, std::uint64_t> degree_bounds_diagonal(std::uint64_t m, std::uint64_t d,
                                                               IndexConvention conv) {
  std::uint64_t a = alpha_index(m, conv);
  return {a * d, (a + (m + 1) * (m + 1)) * d};
}

std::uint64_t degree_parabolic(std::uint64_t m, std::uint64_t d, IndexConvention conv) {
  return beta_index(m, conv) * d;
}

double height_bound_diagonal(std::uint64_t m, std::uint64_t d, double log_h_iota, double log_B, BoundMode mode) {
  const double mm = static_cast<double>(m), dd = static_cast<double>(d);
  double v = std::log(mm + 1.0) + 24.0 * (mm + 1.0) * std::log(mm) + 2.0 * (mm + 1.0) * kPazukiLogA;
  if (mode == BoundMode::kUniform) return v + (mm + 2.0) * log_B;
  return v + (mm + 2.0) * (std::log(dd + 1.0) + log_h_iota) + dd * (mm + 2.0) * log_B;
}

double height_bound_parabolic(std::uint64_t m, std::uint64_t d, double log_h_iota, double log_B, BoundMode mode) {
  const double mm = static_cast<double>(m), dd = static_cast<double>(d);
  if (mode == BoundMode::kUniform) return 24.0 * std::log(mm) + 2.0 * log_B;
  return 24.0 * std::log(mm) + 2.0 * std::log(dd + 1.0) + 2.0 * log_h_iota + 2.0 * dd * log_B;
}

double point_count_bound(std::uint64_t deg, int d_K, double log_height_bound) {
  if (deg == 0) throw Error(ErrorKind::kInvalidInput, "point count bound needs positive degree");
  const double g = static_cast<double>(deg);
  return 4.0 * std::log(g) + (2.0 * d_K / g) * log_height_bound;
}

ExponentTerms exponent_terms(std::uint64_t m, std::uint64_t d, double L) {
  const double mm = static_cast<double>(m), dd = static_cast<double>(d);
  const double a = mm * (mm - 1.0) * (mm + 1.0);
  return {2.0 * std::log(mm + 1.0) / (a * dd), 48.0 / (mm * (mm - 1.0) * dd), 2.0 * (mm + 2.0) * L / a};
}

BoundReport theorem_bound(const BoundInputs& in) {
  if (in.log_B < 0.0) throw Error(ErrorKind::kInvalidInput, "B must be >= 1");
  if (in.d < 1) throw Error(ErrorKind::kInvalidInput, "d must be >= 1");
  if (in.log_h_iota < 0.0) throw Error(ErrorKind::kInvalidInput, "H(iota) must be >= 1");
  if (in.d_K < 1) throw Error(ErrorKind::kInvalidInput, "d_K must be >= 1");
  BoundReport r;
  r.inputs = in;
  const double dd = static_cast<double>(in.d);
  r.L = in.mode == BoundMode::kStandard ? std::log(dd + 1.0) + in.log_h_iota + in.log_B : in.log_B;
  try {
    r.level = choose_level(r.L, in.m_floor);
  } catch (const Error& e) {
    const double offset = in.mode == BoundMode::kStandard ? std::log(dd + 1.0) + in.log_h_iota : 0.0;
    const double min_log_B = std::max(0.0, minimal_feasible_L(in.m_floor) - offset);
    std::ostringstream os;
    os.precision(10);
    os << e.what() << "; for these inputs the smallest admissible B is e^" << min_log_B;
    throw Error(ErrorKind::kInfeasibleLevel, os.str());
  }
  const std::uint64_t m = r.level.m;
  r.alpha = alpha_index(m, in.convention);
  r.beta = beta_index(m, in.convention);
  std::tie(r.degree_lower, r.degree_upper) = degree_bounds_diagonal(m, in.d, in.convention);
  r.degree_parabolic = degree_parabolic(m, in.d, in.convention);
  r.log_height_diagonal = height_bound_diagonal(m, in.d, in.log_h_iota, in.log_B, in.mode);
  r.log_height_parabolic = height_bound_parabolic(m, in.d, in.log_h_iota, in.log_B, in.mode);
  r.log_count_diagonal = point_count_bound(r.degree_lower, in.d_K, r.log_height_diagonal);
  r.log_count_diagonal_upper = point_count_bound(r.degree_upper, in.d_K, r.log_height_diagonal);
  r.log_count_parabolic = point_count_bound(r.degree_parabolic, in.d_K, r.log_height_parabolic);
  const double hi = std::max(r.log_count_diagonal, r.log_count_parabolic);
  const double lo = std::min(r.log_count_diagonal, r.log_count_parabolic);
  r.log_headline = hi + std::log1p(std::exp(lo - hi));
  const double d4 = dd * dd * dd * dd;
  r.closed_form_L6 = d4 * std::pow(r.L, 6);
  r.closed_form_logB6 = d4 * std::pow(in.log_B, 6);
  r.flags = {
      "point-count implied constant set to 1",
      "M1 replaced by M' = " + std::to_string(in.m_floor),
      "A0 set to 1",
      "M set to the feasibility floor",
      std::string("index convention: ") + to_string(in.convention),
  };
  return r;
}

}  // namespace isofiber

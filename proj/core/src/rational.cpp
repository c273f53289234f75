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

#include "isofiber/rational.hpp"

#include <cmath>

#include "isofiber/errors.hpp"

namespace isofiber {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidPoint: return "invalid-point";
    case ErrorKind::kSingularFamily: return "singular-family";
    case ErrorKind::kIsotrivialFamily: return "isotrivial-family";
    case ErrorKind::kSingularFiber: return "singular-fiber";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kMissingLevel: return "missing-level";
    case ErrorKind::kRootFinding: return "root-finding";
    case ErrorKind::kInfeasibleLevel: return "infeasible-level";
    case ErrorKind::kConfig: return "config";
  }
  return "unknown";
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_decimal(num) || !is_decimal(den)) {
    throw Error(ErrorKind::kInvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::kInvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

std::string to_string(const BigInt& z) {
  return z.get_str(10);
}

double log_abs(const BigInt& z) {
  if (z == 0) throw Error(ErrorKind::kInvalidInput, "log of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

BigInt gcd_of(const std::vector<BigInt>& values) {
  BigInt g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::uint64_t mod_u64(const BigInt& z, std::uint64_t p) {
  BigInt r;
  BigInt m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  if (r != 0) mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace isofiber

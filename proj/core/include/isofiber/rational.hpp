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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isofiber {

using BigInt = mpz_class;

// Always kept canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

// Parses "p", "-p/q" or "+p/q" (decimal integers, no spaces inside).
// Throws Error(kInvalidInput) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Natural logarithm of |z|, z != 0, accurate for arbitrarily large z.
double log_abs(const BigInt& z);

BigInt gcd_of(const std::vector<BigInt>& values);
BigInt lcm_of_denominators(const std::vector<Rational>& values);

// Residue of z modulo a word-size prime, in [0, p).
std::uint64_t mod_u64(const BigInt& z, std::uint64_t p);

}  // namespace isofiber

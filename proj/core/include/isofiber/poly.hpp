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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "isofiber/rational.hpp"

namespace isofiber {

// Dense univariate polynomial over Q, ascending degree, trailing zeros
// stripped. The zero polynomial has no coefficients and degree -1.
class PolynomialQ {
 public:
  PolynomialQ() = default;
  explicit PolynomialQ(std::vector<Rational> coeffs);
  static PolynomialQ constant(const Rational& c);
  static PolynomialQ monomial(const Rational& c, std::size_t degree);
  static PolynomialQ variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  PolynomialQ derivative() const;
  PolynomialQ monic() const;

  PolynomialQ& operator+=(const PolynomialQ& rhs);
  PolynomialQ& operator-=(const PolynomialQ& rhs);
  PolynomialQ& operator*=(const PolynomialQ& rhs);
  PolynomialQ& operator*=(const Rational& c);

  friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
  friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
  friend PolynomialQ operator*(PolynomialQ a, const PolynomialQ& b) { return a *= b; }
  friend PolynomialQ operator*(PolynomialQ a, const Rational& c) { return a *= c; }
  friend PolynomialQ operator-(PolynomialQ a) { return a *= Rational(-1); }
  friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b);

// Monic gcd (zero if both inputs are zero).
PolynomialQ gcd(PolynomialQ a, PolynomialQ b);

PolynomialQ pow(const PolynomialQ& p, unsigned e);

// Integer polynomial, ascending degree, trailing zeros stripped.
using ZPoly = std::vector<BigInt>;

void strip(ZPoly& p);
int degree(const ZPoly& p);
BigInt content(const ZPoly& p);
// Content 1 and positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
ZPoly derivative(const ZPoly& p);
ZPoly multiply(const ZPoly& a, const ZPoly& b);
// Exact division in Z[x]; returns false (and leaves q unspecified) when b
// does not divide a.
bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly& q);

// Clears denominators: returns the primitive integer polynomial with the
// same roots and the same sign of leading coefficient.
ZPoly to_primitive_zpoly(const PolynomialQ& p);
PolynomialQ to_polynomial_q(const ZPoly& p);

// Joint scaling of a pair (num, den) to coprime integer coefficients with
// overall content 1 and positive leading coefficient of den.
std::pair<ZPoly, ZPoly> joint_primitive(const PolynomialQ& num, const PolynomialQ& den);

// Rational function over Q kept reduced: numerator and denominator
// coprime, integer coefficients with joint content 1, denominator with
// positive leading coefficient.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : RationalFunctionQ(PolynomialQ(), PolynomialQ::constant(Rational(1))) {}
  RationalFunctionQ(PolynomialQ num, PolynomialQ den);
  static RationalFunctionQ constant(const Rational& c);
  static RationalFunctionQ variable();

  const PolynomialQ& numerator() const { return num_; }
  const PolynomialQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // Degree of the map P^1 -> P^1: max(deg num, deg den).
  int map_degree() const;

  // False when the denominator vanishes at x.
  bool defined_at(const Rational& x) const;
  Rational operator()(const Rational& x) const;

  RationalFunctionQ& operator+=(const RationalFunctionQ& rhs);
  RationalFunctionQ& operator-=(const RationalFunctionQ& rhs);
  RationalFunctionQ& operator*=(const RationalFunctionQ& rhs);
  RationalFunctionQ& operator/=(const RationalFunctionQ& rhs);

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  friend bool operator==(const RationalFunctionQ&, const RationalFunctionQ&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  PolynomialQ num_;
  PolynomialQ den_;
};

}  // namespace isofiber

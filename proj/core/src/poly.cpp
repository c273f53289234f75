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

#include "isofiber/poly.hpp"

#include <algorithm>
#include <sstream>

#include "isofiber/errors.hpp"

namespace isofiber {

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  strip();
}

PolynomialQ PolynomialQ::constant(const Rational& c) {
  return PolynomialQ(std::vector<Rational>{c});
}

PolynomialQ PolynomialQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return PolynomialQ(std::move(v));
}

void PolynomialQ::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolynomialQ::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational PolynomialQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

PolynomialQ PolynomialQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolynomialQ(std::move(d));
}

PolynomialQ PolynomialQ::monic() const {
  if (is_zero()) return {};
  PolynomialQ out = *this;
  Rational inv = 1 / leading();
  return out *= inv;
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  strip();
  return *this;
}

PolynomialQ& PolynomialQ::operator*=(const PolynomialQ& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  strip();
  return *this;
}

PolynomialQ& PolynomialQ::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  strip();
  return *this;
}

std::string PolynomialQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << (a != 1 ? "*" : "") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidInput, "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {PolynomialQ(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolynomialQ(std::move(q)), PolynomialQ(std::move(r))};
}

PolynomialQ gcd(PolynomialQ a, PolynomialQ b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    // Keep remainders monic so coefficient growth stays moderate.
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

PolynomialQ pow(const PolynomialQ& p, unsigned e) {
  PolynomialQ result = PolynomialQ::constant(Rational(1));
  PolynomialQ base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

void strip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const ZPoly& p) { return gcd_of(p); }

ZPoly primitive_part(const ZPoly& p) {
  ZPoly out = p;
  strip(out);
  if (out.empty()) return out;
  BigInt c = content(out);
  if (out.back() < 0) c = -c;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  strip(d);
  return d;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  strip(out);
  return out;
}

bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw Error(ErrorKind::kInvalidInput, "polynomial division by zero");
  q.clear();
  if (a.empty()) return true;
  const int da = degree(a), db = degree(b);
  if (da < db) return false;
  ZPoly r = a;
  q.assign(static_cast<std::size_t>(da - db + 1), BigInt(0));
  const BigInt& lb = b.back();
  for (int i = da; i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return false;
  }
  strip(q);
  return true;
}

ZPoly to_primitive_zpoly(const PolynomialQ& p) {
  if (p.is_zero()) return {};
  BigInt l = lcm_of_denominators(p.coefficients());
  ZPoly z;
  z.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    BigInt v = c.get_num() * (l / c.get_den());
    z.push_back(v);
  }
  BigInt g = content(z);
  for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return z;
}

PolynomialQ to_polynomial_q(const ZPoly& p) {
  std::vector<Rational> v(p.begin(), p.end());
  return PolynomialQ(std::move(v));
}

std::pair<ZPoly, ZPoly> joint_primitive(const PolynomialQ& num, const PolynomialQ& den) {
  std::vector<Rational> all = num.coefficients();
  all.insert(all.end(), den.coefficients().begin(), den.coefficients().end());
  BigInt l = lcm_of_denominators(all);
  auto scale = [&](const PolynomialQ& p) {
    ZPoly z;
    for (const auto& c : p.coefficients()) z.push_back(c.get_num() * (l / c.get_den()));
    return z;
  };
  ZPoly zn = scale(num), zd = scale(den);
  std::vector<BigInt> joined = zn;
  joined.insert(joined.end(), zd.begin(), zd.end());
  BigInt g = gcd_of(joined);
  if (!zd.empty() && zd.back() < 0) g = -g;
  if (g != 0) {
    for (auto& x : zn) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& x : zd) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return {zn, zd};
}

RationalFunctionQ::RationalFunctionQ(PolynomialQ num, PolynomialQ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::kInvalidInput, "rational function with zero denominator");
  normalize();
}

RationalFunctionQ RationalFunctionQ::constant(const Rational& c) {
  return RationalFunctionQ(PolynomialQ::constant(c), PolynomialQ::constant(Rational(1)));
}

RationalFunctionQ RationalFunctionQ::variable() {
  return RationalFunctionQ(PolynomialQ::variable(), PolynomialQ::constant(Rational(1)));
}

void RationalFunctionQ::normalize() {
  if (num_.is_zero()) {
    den_ = PolynomialQ::constant(Rational(1));
    return;
  }
  PolynomialQ g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  auto [zn, zd] = joint_primitive(num_, den_);
  num_ = to_polynomial_q(zn);
  den_ = to_polynomial_q(zd);
}

int RationalFunctionQ::map_degree() const {
  return std::max(num_.degree(), den_.degree());
}

bool RationalFunctionQ::defined_at(const Rational& x) const { return den_(x) != 0; }

Rational RationalFunctionQ::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw Error(ErrorKind::kInvalidInput, "rational function has a pole at " + isofiber::to_string(x));
  return num_(x) / d;
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& rhs) {
  *this = RationalFunctionQ(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& rhs) {
  *this = RationalFunctionQ(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& rhs) {
  *this = RationalFunctionQ(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::kInvalidInput, "division by the zero rational function");
  *this = RationalFunctionQ(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
  if (den_.is_constant() && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace isofiber

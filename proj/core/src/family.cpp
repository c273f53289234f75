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

#include "isofiber/family.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "isofiber/errors.hpp"
#include "isofiber/heights.hpp"

namespace isofiber {

const char* to_string(IotaConvention c) {
  return c == IotaConvention::kJoint ? "joint" : "product";
}

RationalFunctionQ j_function(const RationalFunctionQ& f, const RationalFunctionQ& g) {
  RationalFunctionQ f3 = f * f * f;
  RationalFunctionQ disc = RationalFunctionQ::constant(Rational(4)) * f3 +
                           RationalFunctionQ::constant(Rational(27)) * g * g;
  if (disc.is_zero()) {
    throw Error(ErrorKind::kSingularFamily, "4f^3 + 27g^2 vanishes identically");
  }
  return RationalFunctionQ::constant(Rational(6912)) * f3 / disc;
}

WeierstrassFamily::WeierstrassFamily(RationalFunctionQ f, RationalFunctionQ g, RationalFunctionQ fp,
                                     RationalFunctionQ gp)
    : f_(std::move(f)), g_(std::move(g)), fp_(std::move(fp)), gp_(std::move(gp)) {
  j_ = j_function(f_, g_);
  jp_ = j_function(fp_, gp_);
  if (j_.is_constant()) {
    throw Error(ErrorKind::kIsotrivialFamily, "j(E_t) is constant (" + j_.to_string() + ")");
  }
  if (jp_.is_constant()) {
    throw Error(ErrorKind::kIsotrivialFamily, "j(E'_t) is constant (" + jp_.to_string() + ")");
  }
}

int family_degree(const RationalFunctionQ& j, const RationalFunctionQ& jp) {
  if (j.is_constant() || jp.is_constant()) {
    throw Error(ErrorKind::kIsotrivialFamily, "family degree is undefined for a constant j-map");
  }
  return j.map_degree() + jp.map_degree();
}

int family_degree(const WeierstrassFamily& fam) { return family_degree(fam.j(), fam.jp()); }

namespace {

std::vector<Rational> coefficient_vector(const RationalFunctionQ& r) {
  std::vector<Rational> v = r.numerator().coefficients();
  const auto& d = r.denominator().coefficients();
  v.insert(v.end(), d.begin(), d.end());
  return v;
}

}  // namespace

BigInt iota_height(const RationalFunctionQ& j, const RationalFunctionQ& jp, IotaConvention convention) {
  std::vector<Rational> a = coefficient_vector(j);
  std::vector<Rational> b = coefficient_vector(jp);
  if (convention == IotaConvention::kProduct) {
    return projective_height(a) * projective_height(b);
  }
  a.insert(a.end(), b.begin(), b.end());
  return projective_height(a);
}

BigInt iota_height(const WeierstrassFamily& fam, IotaConvention convention) {
  return iota_height(fam.j(), fam.jp(), convention);
}

Rational j_invariant(const Rational& a, const Rational& b) {
  Rational a3 = a * a * a;
  Rational disc = 4 * a3 + 27 * b * b;
  if (disc == 0) throw Error(ErrorKind::kSingularFiber, "singular curve: 4a^3 + 27b^2 = 0");
  Rational j = 6912 * a3 / disc;
  j.canonicalize();
  return j;
}

namespace {

std::optional<FiberCurve> specialize_side(const RationalFunctionQ& f, const RationalFunctionQ& g,
                                          const Rational& t) {
  if (!f.defined_at(t) || !g.defined_at(t)) return std::nullopt;
  Rational a = f(t), b = g(t);
  Rational disc = 4 * a * a * a + 27 * b * b;
  if (disc == 0) return std::nullopt;
  return FiberCurve{a, b, j_invariant(a, b)};
}

}  // namespace

FiberPair specialize(const WeierstrassFamily& fam, const Rational& t) {
  return {specialize_side(fam.f(), fam.g(), t), specialize_side(fam.fp(), fam.gp(), t)};
}

BigInt segre_fiber_height(const WeierstrassFamily& fam, const Rational& t) {
  FiberPair pair = specialize(fam, t);
  if (!pair.smooth()) {
    throw Error(ErrorKind::kSingularFiber, "singular fiber at t = " + to_string(t));
  }
  return height_rational(pair.first->j) * height_rational(pair.second->j);
}

double log_fiber_height_bound(int d, const BigInt& h_iota, double log_B) {
  if (d < 1 || h_iota < 1 || log_B < 0) {
    throw Error(ErrorKind::kInvalidInput, "fiber height bound needs d >= 1, H(iota) >= 1, B >= 1");
  }
  return std::log(static_cast<double>(d) + 1.0) + log_abs(h_iota) + d * log_B;
}

double fiber_height_bound(int d, const BigInt& h_iota, double B) {
  return std::exp(log_fiber_height_bound(d, h_iota, std::log(B)));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

PolynomialQ parse_coefficients(const std::string& value, int line) {
  std::vector<Rational> coeffs;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    try {
      coeffs.push_back(parse_rational(t));
    } catch (const Error& e) {
      throw Error(ErrorKind::kConfig, "family file line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (coeffs.empty()) {
    throw Error(ErrorKind::kConfig, "family file line " + std::to_string(line) + ": empty coefficient list");
  }
  return PolynomialQ(std::move(coeffs));
}

}  // namespace

WeierstrassFamily parse_family(std::string_view text) {
  static const char* kKeys[] = {"f.num", "f.den", "g.num", "g.den", "fp.num", "fp.den", "gp.num", "gp.den"};
  std::map<std::string, PolynomialQ> values;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kConfig, "family file line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw Error(ErrorKind::kConfig, "family file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (values.count(key)) {
      throw Error(ErrorKind::kConfig, "family file line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    values.emplace(key, parse_coefficients(line.substr(eq + 1), line_no));
  }
  auto side = [&](const std::string& name) {
    auto num = values.find(name + ".num");
    if (num == values.end()) throw Error(ErrorKind::kConfig, "family file is missing '" + name + ".num'");
    auto den = values.find(name + ".den");
    PolynomialQ d = den == values.end() ? PolynomialQ::constant(Rational(1)) : den->second;
    if (d.is_zero()) throw Error(ErrorKind::kConfig, "family file: '" + name + ".den' is zero");
    return RationalFunctionQ(num->second, d);
  };
  return WeierstrassFamily(side("f"), side("g"), side("fp"), side("gp"));
}

WeierstrassFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot open family file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

}  // namespace isofiber

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

#include "isofiber/heights.hpp"

#include <algorithm>

#include "isofiber/complex_roots.hpp"
#include "isofiber/errors.hpp"

namespace isofiber {

BigInt height_rational(const Rational& a) {
  BigInt n = abs(a.get_num());
  const BigInt& d = a.get_den();
  return n > d ? n : d;
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorKind::kInvalidPoint, "projective point with no coordinates");
  for (auto& c : coords_) c.canonicalize();
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; })) {
    throw Error(ErrorKind::kInvalidPoint, "projective point with all coordinates zero");
  }
}

std::vector<BigInt> ProjectivePoint::normalized() const {
  BigInt l = lcm_of_denominators(coords_);
  std::vector<BigInt> ints;
  ints.reserve(coords_.size());
  for (const auto& c : coords_) ints.push_back(c.get_num() * (l / c.get_den()));
  BigInt g = gcd_of(ints);
  auto first = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0) g = -g;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ints;
}

BigInt projective_height(const ProjectivePoint& p) {
  BigInt best = 0;
  for (const auto& v : p.normalized()) {
    if (abs(v) > best) best = abs(v);
  }
  return best;
}

BigInt projective_height(const std::vector<Rational>& coords) {
  return projective_height(ProjectivePoint(coords));
}

ProjectivePoint segre_embed(const std::vector<std::pair<Rational, Rational>>& factors) {
  if (factors.empty()) throw Error(ErrorKind::kInvalidInput, "Segre embedding of an empty product");
  if (factors.size() > 20) throw Error(ErrorKind::kInvalidInput, "Segre embedding limited to 20 factors");
  for (const auto& [x, y] : factors) {
    if (x == 0 && y == 0) throw Error(ErrorKind::kInvalidPoint, "factor (0 : 0) is not a point of P^1");
  }
  const std::size_t n = factors.size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> coords(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t mask = count - 1 - k;
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      bool take_first = (mask >> (n - 1 - i)) & 1u;
      prod *= take_first ? factors[i].first : factors[i].second;
    }
    coords[k] = prod;
  }
  return ProjectivePoint(std::move(coords));
}

double algebraic_height_from_minpoly(const ZPoly& p) {
  ZPoly f = p;
  strip(f);
  if (degree(f) < 1) throw Error(ErrorKind::kInvalidInput, "minimal polynomial must be nonconstant");
  f = primitive_part(f);
  return log_mahler_measure(f) / degree(f);
}

double algebraic_height_from_minpoly(const PolynomialQ& p) {
  if (p.degree() < 1) throw Error(ErrorKind::kInvalidInput, "minimal polynomial must be nonconstant");
  return algebraic_height_from_minpoly(to_primitive_zpoly(p));
}

}  // namespace isofiber

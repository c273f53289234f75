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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "isofiber/poly.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

// How the height of the embedding is read off the two j-maps.
//   kJoint:   one projective height of the concatenated coefficient
//             vectors (num j, den j, num j', den j').
//   kProduct: product of the two separate projective heights.
enum class IotaConvention { kJoint, kProduct };

const char* to_string(IotaConvention c);

// j = 6912 f^3 / (4 f^3 + 27 g^2) for y^2 = x^3 + f x + g, reduced.
// Throws Error(kSingularFamily) when 4f^3 + 27g^2 vanishes identically.
RationalFunctionQ j_function(const RationalFunctionQ& f, const RationalFunctionQ& g);

// Pair family E_t: y^2 = x^3 + f(t) x + g(t), E'_t: y^2 = x^3 + f'(t) x + g'(t).
// Immutable; construction rejects generically singular and isotrivial sides.
class WeierstrassFamily {
 public:
  WeierstrassFamily(RationalFunctionQ f, RationalFunctionQ g, RationalFunctionQ fp, RationalFunctionQ gp);

  const RationalFunctionQ& f() const { return f_; }
  const RationalFunctionQ& g() const { return g_; }
  const RationalFunctionQ& fp() const { return fp_; }
  const RationalFunctionQ& gp() const { return gp_; }
  const RationalFunctionQ& j() const { return j_; }
  const RationalFunctionQ& jp() const { return jp_; }

 private:
  RationalFunctionQ f_, g_, fp_, gp_;
  RationalFunctionQ j_, jp_;
};

// d = deg j + deg j', degrees of the reduced maps P^1 -> P^1. Throws
// Error(kIsotrivialFamily) if either map is constant.
int family_degree(const RationalFunctionQ& j, const RationalFunctionQ& jp);
int family_degree(const WeierstrassFamily& fam);

BigInt iota_height(const RationalFunctionQ& j, const RationalFunctionQ& jp,
                   IotaConvention convention = IotaConvention::kJoint);
BigInt iota_height(const WeierstrassFamily& fam, IotaConvention convention = IotaConvention::kJoint);

// Smooth fiber y^2 = x^3 + a x + b.
struct FiberCurve {
  Rational a, b, j;
  friend bool operator==(const FiberCurve&, const FiberCurve&) = default;
};

// j-invariant of y^2 = x^3 + a x + b; throws Error(kSingularFiber) when
// 4a^3 + 27b^2 = 0.
Rational j_invariant(const Rational& a, const Rational& b);

// Empty optional marks a singular side (zero discriminant or a pole of a
// defining function at t).
struct FiberPair {
  std::optional<FiberCurve> first, second;
  bool smooth() const { return first.has_value() && second.has_value(); }
};

FiberPair specialize(const WeierstrassFamily& fam, const Rational& t);

// H(j(E_t)) * H(j(E'_t)); throws Error(kSingularFiber) on a singular side.
BigInt segre_fiber_height(const WeierstrassFamily& fam, const Rational& t);

// log of (d + 1) * H(iota) * B^d, the envelope for H(P_t) over H(t) <= B.
double log_fiber_height_bound(int d, const BigInt& h_iota, double log_B);
double fiber_height_bound(int d, const BigInt& h_iota, double B);

// Family file: "key = value" lines, '#' comments, keys f.num, f.den, g.num,
// g.den, fp.num, fp.den, gp.num, gp.den; values are comma-separated
// rationals in ascending degree; .den defaults to 1.
WeierstrassFamily parse_family(std::string_view text);
WeierstrassFamily load_family(const std::filesystem::path& path);

}  // namespace isofiber

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

#include <utility>
#include <vector>

#include "isofiber/poly.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

// Multiplicative height of a rational: max(|p|, q) for p/q reduced.
BigInt height_rational(const Rational& a);

// Point of projective space over Q; at least one coordinate nonzero.
class ProjectivePoint {
 public:
  // Throws Error(kInvalidPoint) for an empty or all-zero vector.
  explicit ProjectivePoint(std::vector<Rational> coords);

  const std::vector<Rational>& coordinates() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }

  // Coprime integer representative (sign of the first nonzero coordinate
  // made positive).
  std::vector<BigInt> normalized() const;

 private:
  std::vector<Rational> coords_;
};

BigInt projective_height(const ProjectivePoint& p);

// Projective height of a raw coordinate vector; throws on all-zero input.
BigInt projective_height(const std::vector<Rational>& coords);

// Segre image of n points of P^1 given as (x : y) pairs. Coordinate k of
// the image (k = 0 .. 2^n - 1) takes, for factor i, the first entry when
// bit (n - 1 - i) of (2^n - 1 - k) is set and the second entry otherwise:
// the full product x_1...x_n comes first, y_1...y_n last, and for affine
// inputs (x_i : 1) the order is x1*x2, x1, x2, 1 when n = 2.
ProjectivePoint segre_embed(const std::vector<std::pair<Rational, Rational>>& factors);

// Absolute logarithmic height of any root of an irreducible polynomial:
// (log|lc| + sum log max(1, |root|)) / deg. Rational coefficients are
// cleared to a primitive integer polynomial first.
double algebraic_height_from_minpoly(const ZPoly& p);
double algebraic_height_from_minpoly(const PolynomialQ& p);

}  // namespace isofiber

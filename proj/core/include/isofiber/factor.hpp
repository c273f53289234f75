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

#include <vector>

#include "isofiber/poly.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

struct ZFactor {
  ZPoly poly;  // primitive, irreducible over Q, positive leading coefficient
  int multiplicity = 1;
  friend bool operator==(const ZFactor&, const ZFactor&) = default;
};

// True when f has no repeated factor over Q. f must be nonzero.
bool is_squarefree(const ZPoly& f);

// Squarefree decomposition (Yun) of a primitive polynomial: pairs of
// pairwise coprime squarefree primitive parts and their multiplicities.
std::vector<ZFactor> squarefree_decomposition(const ZPoly& f);

// Irreducible factors over Q of a squarefree nonconstant polynomial, via
// factorization modulo a small prime, Hensel lifting and exhaustive
// recombination. Output sorted by (degree, coefficients).
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// Full factorization of a nonzero polynomial into irreducibles with
// multiplicity (content and units dropped).
std::vector<ZFactor> factor(const ZPoly& f);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const ZPoly& f);

}  // namespace isofiber

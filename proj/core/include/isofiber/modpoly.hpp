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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isofiber/complex_roots.hpp"
#include "isofiber/poly.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

// psi(n) = n * prod_{p | n} (1 + 1/p), the degree of Phi_n in each variable.
std::uint64_t psi(std::uint64_t n);

// Classical modular polynomial Phi_n(X, Y). Terms are stored for i >= k
// only; the monomial X^k Y^i is implied with the same coefficient
// (or the negated one when antisymmetric, which only Phi_1 = X - Y is).
struct ModularPolynomial {
  int level = 0;
  std::map<std::pair<int, int>, BigInt> terms;
  bool antisymmetric = false;

  friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;
};

ModularPolynomial phi_one();

// Text format: one "[i,k] c" per line, i >= k >= 0, '#' comments, lines
// unordered. Throws Error(kParse) naming the offending line; the declared
// level must match the top X-degree.
ModularPolynomial parse_modpoly_file(std::string_view text, int declared_level);
std::string format_modpoly(const ModularPolynomial& phi);

enum class ViolationKind { kDegreeX, kDegreeY, kSymmetry, kLeadingCoefficient };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const ModularPolynomial& phi);

// Exact Phi_n(x, y).
Rational evaluate(const ModularPolynomial& phi, const Rational& x, const Rational& y);

// Dense precomputed form used for repeated evaluation.
class CompiledModularPolynomial {
 public:
  explicit CompiledModularPolynomial(ModularPolynomial phi);

  int level() const { return phi_.level; }
  int degree() const { return degree_; }
  const ModularPolynomial& polynomial() const { return phi_; }

  Rational evaluate(const Rational& x, const Rational& y) const;

  // Phi_n(x, y) == 0. Screens modulo 2^61 - 1 first (a nonzero residue
  // proves a nonzero value) and confirms zeros exactly.
  bool vanishes(const Rational& x, const Rational& y) const;

  // Primitive integer polynomial in X proportional to Phi_n(X, y).
  ZPoly specialize_y(const Rational& y) const;

 private:
  // Integer value of Phi_n(x, y) * den(x)^deg * den(y)^deg.
  BigInt homogenized(const Rational& x, const Rational& y) const;

  ModularPolynomial phi_;
  int degree_ = 0;
  std::vector<BigInt> dense_;          // (deg+1)^2, row i = X-power
  std::vector<std::uint64_t> dense_mod_;
};

class ModularDatabase {
 public:
  ModularDatabase() = default;

  // Loads Phi_1 .. Phi_max_level from dir/phi_j_<n>.txt (Phi_1 is built
  // in). Throws Error(kMissingLevel) listing the available levels when a
  // file is absent, Error(kParse) on malformed or invalid data.
  static ModularDatabase load(const std::filesystem::path& dir, int max_level);
  static ModularDatabase from_polynomials(std::vector<ModularPolynomial> polys);

  // Levels with a phi_j_<n>.txt file in dir, plus 1.
  static std::vector<int> available_levels(const std::filesystem::path& dir);

  std::vector<int> levels() const;
  bool has_level(int n) const { return polys_.count(n) != 0; }
  int max_contiguous_level() const;
  const CompiledModularPolynomial& at(int n) const;

 private:
  std::map<int, std::shared_ptr<const CompiledModularPolynomial>> polys_;
};

bool is_cyclically_n_isogenous(const ModularDatabase& db, const Rational& j1, const Rational& j2, int n);

// Smallest n <= max_degree with Phi_n(j1, j2) = 0. Levels below
// min_degree are skipped (min_degree = 2 excludes geometric isomorphism).
std::optional<int> minimal_isogeny_degree(const ModularDatabase& db, const Rational& j1, const Rational& j2,
                                          int max_degree, int min_degree = 1);

struct CMEntry {
  int discriminant;
  long long j;
};

// The 13 rational j-invariants with complex multiplication.
const std::array<CMEntry, 13>& cm_table();
std::optional<int> is_cm_j(const Rational& j);

// Complex roots (with multiplicity) of X -> Phi_n(X, j): the j-invariants
// of the psi(n) curves cyclically n-isogenous to one with invariant j.
ComplexRoots isogenous_j_multiset(const ModularDatabase& db, const Rational& j, int n,
                                  double tolerance = 1e-8);

// Irreducible factors of Phi_n(X, j) over Q together with the absolute
// logarithmic height of their roots.
struct IsogenousFactor {
  ZPoly minpoly;
  int multiplicity = 1;
  double log_height = 0.0;
};

std::vector<IsogenousFactor> isogenous_factors(const ModularDatabase& db, const Rational& j, int n);

// Rational roots of Phi_n(X, j), exact.
std::vector<Rational> rational_isogenous_j(const ModularDatabase& db, const Rational& j, int n);

// Height-change bound for a cyclic isogeny of degree n:
// |h(j1) - h(j2)| <= 9.204 + 12 log n.
inline constexpr double kPazukiLogA = 9.204;
double pazuki_gap_bound(int n);
// A = e^{9.204}, so that H(j1) < A n^12 H(j2).
double pazuki_A();

}  // namespace isofiber

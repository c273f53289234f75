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

#include <complex>
#include <vector>

#include "isofiber/poly.hpp"

namespace isofiber {

struct ComplexRoots {
  // Roots with multiplicity, ordered by (|z|, arg z). Components overflow
  // to infinity for roots beyond double range; log_abs stays exact.
  std::vector<std::complex<double>> values;
  std::vector<double> log_abs;
  // max_i |f(z_i)| / sum_k |a_k| |z_i|^k
  double max_relative_residual = 0.0;
  int iterations = 0;
};

// All complex roots of a nonconstant integer polynomial, by Aberth-Ehrlich
// iteration in 160-digit MPFR arithmetic started from Newton-polygon
// radii. Repeated roots are handled by splitting off the squarefree
// decomposition first. tolerance bounds the relative correction size at
// convergence; throws Error(kRootFinding) with the residual otherwise.
ComplexRoots complex_roots(const ZPoly& f, double tolerance = 1e-12);

// log M(f) = log|lc| + sum log max(1, |root|).
double log_mahler_measure(const ZPoly& f);

}  // namespace isofiber

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

#include "isofiber/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/mpfr.hpp>

#include "isofiber/errors.hpp"
#include "isofiber/factor.hpp"

namespace isofiber {
namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<160>, mp::et_off>;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real norm(const Cx& a) { return mp::sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// Value, derivative and absolute evaluation sum_k |a_k| |z|^k.
void horner(const std::vector<Real>& a, const Cx& z, Cx& p, Cx& dp, Real& scale) {
  p = {a.back(), Real(0)};
  dp = {Real(0), Real(0)};
  const Real az = norm(z);
  scale = mp::abs(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + Cx{a[i], Real(0)};
    scale = scale * az + mp::abs(a[i]);
  }
}

// Start points on circles whose radii come from the upper convex hull of
// (k, log|a_k|).
std::vector<Cx> initial_points(const ZPoly& f) {
  const int n = degree(f);
  std::vector<int> idx;
  std::vector<double> lg;
  for (int k = 0; k <= n; ++k) {
    if (f[static_cast<std::size_t>(k)] == 0) continue;
    idx.push_back(k);
    lg.push_back(log_abs(f[static_cast<std::size_t>(k)]));
  }
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull.back();
      double cross = (idx[b] - idx[a]) * (lg[i] - lg[a]) - (lg[b] - lg[a]) * (idx[i] - idx[a]);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  std::vector<Cx> pts;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    std::size_t a = hull[h], b = hull[h + 1];
    int count = idx[b] - idx[a];
    Real log_r = Real((lg[a] - lg[b]) / count);
    Real r = mp::exp(log_r);
    for (int k = 0; k < count; ++k) {
      double ang = two_pi * k / count + two_pi * static_cast<double>(h) / n + 0.4;
      pts.push_back({r * Real(std::cos(ang)), r * Real(std::sin(ang))});
    }
  }
  if (idx.front() > 0) {
    for (int k = 0; k < idx.front(); ++k) pts.push_back({Real(0), Real(0)});
  }
  return pts;
}

struct Solved {
  std::vector<Cx> roots;
  double residual = 0.0;
  int iterations = 0;
};

Solved aberth(const ZPoly& f, double tolerance) {
  const int n = degree(f);
  std::vector<Real> a;
  a.reserve(f.size());
  for (const auto& c : f) a.push_back(to_real(c));

  // Zero roots are exact; iterate on the deflated polynomial.
  int zeros = 0;
  while (a[static_cast<std::size_t>(zeros)] == 0) ++zeros;
  std::vector<Real> b(a.begin() + zeros, a.end());
  ZPoly fb(f.begin() + zeros, f.end());
  const int m = n - zeros;

  Solved out;
  std::vector<Cx> z = m > 0 ? initial_points(fb) : std::vector<Cx>{};
  z.resize(static_cast<std::size_t>(m));
  std::vector<bool> done(static_cast<std::size_t>(m), false);
  const Real tol(tolerance * 1e-30);
  const int max_iter = 5000;
  int it = 0;
  for (; it < max_iter && m > 0; ++it) {
    bool all = true;
    for (int i = 0; i < m; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      Cx p, dp;
      Real scale;
      horner(b, z[ui], p, dp, scale);
      if (norm(p) == 0) {
        done[ui] = true;
        continue;
      }
      Cx ratio = p / dp;
      Cx sum{Real(0), Real(0)};
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        sum = sum + Cx{Real(1), Real(0)} / (z[ui] - z[static_cast<std::size_t>(j)]);
      }
      Cx w = ratio / (Cx{Real(1), Real(0)} - ratio * sum);
      z[ui] = z[ui] - w;
      Real mag = norm(z[ui]);
      if (norm(w) <= tol * (mag > 1 ? mag : Real(1))) {
        done[ui] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
  out.iterations = it;
  double worst = 0.0;
  for (const auto& r : z) {
    Cx p, dp;
    Real scale;
    horner(b, r, p, dp, scale);
    double rel = scale == 0 ? 0.0 : static_cast<double>(norm(p) / scale);
    worst = std::max(worst, rel);
  }
  out.residual = worst;
  bool converged = std::all_of(done.begin(), done.end(), [](bool d) { return d; });
  if (!converged && worst > tolerance) {
    std::ostringstream os;
    os << "Aberth iteration did not converge for degree " << n << " after " << it
       << " sweeps; max relative residual " << worst;
    throw Error(ErrorKind::kRootFinding, os.str());
  }
  for (int k = 0; k < zeros; ++k) z.push_back({Real(0), Real(0)});
  out.roots = std::move(z);
  return out;
}

}  // namespace

ComplexRoots complex_roots(const ZPoly& f_in, double tolerance) {
  ZPoly f = f_in;
  strip(f);
  if (degree(f) < 1) throw Error(ErrorKind::kInvalidInput, "root finding needs a nonconstant polynomial");
  f = primitive_part(f);

  std::vector<std::pair<ZPoly, int>> parts;
  if (is_squarefree(f)) {
    parts.emplace_back(f, 1);
  } else {
    for (auto& sf : squarefree_decomposition(f)) parts.emplace_back(sf.poly, sf.multiplicity);
  }

  std::vector<Cx> all;
  ComplexRoots out;
  for (const auto& [part, mult] : parts) {
    Solved s = aberth(part, tolerance);
    out.max_relative_residual = std::max(out.max_relative_residual, s.residual);
    out.iterations = std::max(out.iterations, s.iterations);
    for (int k = 0; k < mult; ++k) all.insert(all.end(), s.roots.begin(), s.roots.end());
  }

  std::vector<std::pair<Real, Real>> keyed;
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    order[i] = i;
    keyed.emplace_back(norm(all[i]), mp::atan2(all[i].im, all[i].re));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (keyed[x].first != keyed[y].first) return keyed[x].first < keyed[y].first;
    return keyed[x].second < keyed[y].second;
  });
  for (std::size_t i : order) {
    out.values.emplace_back(static_cast<double>(all[i].re), static_cast<double>(all[i].im));
    const Real& mag = keyed[i].first;
    out.log_abs.push_back(mag == 0 ? -INFINITY : static_cast<double>(mp::log(mag)));
  }
  return out;
}

double log_mahler_measure(const ZPoly& f) {
  ComplexRoots r = complex_roots(f);
  ZPoly g = f;
  strip(g);
  double acc = log_abs(g.back());
  for (double la : r.log_abs) acc += std::max(0.0, la);
  return acc;
}

}  // namespace isofiber

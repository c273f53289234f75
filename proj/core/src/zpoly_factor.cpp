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

#include "isofiber/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

#include "isofiber/errors.hpp"

namespace isofiber {
namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;  // coefficients mod p, ascending, stripped

// Arithmetic in F_p for p < 2^32.
struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void mstrip(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly reduce(const ZPoly& f, const Field& F) {
  MPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mod_u64(f[i], F.p);
  mstrip(out);
  return out;
}

MPoly msub(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    out[i] = F.sub(x, y);
  }
  mstrip(out);
  return out;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  MPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  mstrip(out);
  return out;
}

MPoly mscale(MPoly a, u64 c, const Field& F) {
  for (auto& x : a) x = F.mul(x, c);
  mstrip(a);
  return a;
}

MPoly mmonic(const MPoly& a, const Field& F) {
  if (a.empty()) return a;
  return mscale(a, F.inv(a.back()), F);
}

void mdivmod(const MPoly& a, const MPoly& b, const Field& F, MPoly* q, MPoly& r) {
  r = a;
  const int db = mdeg(b);
  if (q) q->clear();
  if (mdeg(a) < db) return;
  if (q) q->assign(static_cast<std::size_t>(mdeg(a) - db + 1), 0);
  const u64 inv = F.inv(b.back());
  for (int i = mdeg(a); i >= db; --i) {
    u64 c = F.mul(r[static_cast<std::size_t>(i)], inv);
    if (q) (*q)[static_cast<std::size_t>(i - db)] = c;
    if (!c) continue;
    for (int j = 0; j <= db; ++j) {
      auto k = static_cast<std::size_t>(i - db + j);
      r[k] = F.sub(r[k], F.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  mstrip(r);
  if (q) mstrip(*q);
}

MPoly mrem(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly r;
  mdivmod(a, b, F, nullptr, r);
  return r;
}

MPoly mquo(const MPoly& a, const MPoly& b, const Field& F) {
  MPoly q, r;
  mdivmod(a, b, F, &q, r);
  return q;
}

MPoly mgcd(MPoly a, MPoly b, const Field& F) {
  while (!b.empty()) {
    MPoly r = mrem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, F);
}

// s*a + t*b = 1 for coprime a, b.
void mext_gcd(const MPoly& a, const MPoly& b, const Field& F, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    MPoly q, r;
    mdivmod(r0, r1, F, &q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    MPoly s2 = msub(s0, mmul(q, s1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    MPoly t2 = msub(t0, mmul(q, t1, F), F);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (mdeg(r0) != 0) throw Error(ErrorKind::kInvalidInput, "Hensel factors are not coprime");
  u64 c = F.inv(r0[0]);
  s = mscale(s0, c, F);
  t = mscale(t0, c, F);
}

MPoly mpowmod(MPoly base, const BigInt& e, const MPoly& mod, const Field& F) {
  MPoly result{1};
  base = mrem(base, mod, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mrem(mmul(result, result, F), mod, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mrem(mmul(result, base, F), mod, F);
  }
  return mrem(result, mod, F);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MPoly, int>> distinct_degree(MPoly f, const Field& F) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = mrem(x, f, F);
  int i = 0;
  while (mdeg(f) >= 2 * (i + 1)) {
    ++i;
    h = mpowmod(h, BigInt(static_cast<unsigned long>(F.p)), f, F);
    MPoly g = mgcd(msub(h, x, F), f, F);
    if (mdeg(g) > 0) {
      out.emplace_back(g, i);
      f = mquo(f, g, F);
      h = mrem(h, f, F);
    }
  }
  if (mdeg(f) > 0) out.emplace_back(f, mdeg(f));
  return out;
}

// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
void equal_degree(const MPoly& g, int d, const Field& F, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (mdeg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    MPoly a(static_cast<std::size_t>(mdeg(g)));
    for (auto& c : a) c = coef(rng);
    mstrip(a);
    if (mdeg(a) < 1) continue;
    MPoly b = msub(mpowmod(a, e, g, F), MPoly{1}, F);
    MPoly h = mgcd(b, g, F);
    if (mdeg(h) > 0 && mdeg(h) < mdeg(g)) {
      equal_degree(h, d, F, rng, out);
      equal_degree(mquo(g, h, F), d, F, rng, out);
      return;
    }
  }
}

std::vector<MPoly> factor_mod_p(const MPoly& f, const Field& F) {
  std::mt19937_64 rng(0x15f1be7ULL ^ F.p);
  std::vector<MPoly> out;
  for (auto& [g, d] : distinct_degree(mmonic(f, F), F)) equal_degree(g, d, F, rng, out);
  return out;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const std::vector<u64>& candidate_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> v;
    for (u64 n = 10007; v.size() < 400; n += 2) {
      if (is_prime_u64(n)) v.push_back(n);
    }
    return v;
  }();
  return primes;
}

// ---- arithmetic in (Z / M)[x], coefficients kept in [0, M) ----

void zreduce(ZPoly& a, const BigInt& M) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  strip(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const BigInt& M) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  zreduce(out, M);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const BigInt& M) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  zreduce(out, M);
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const BigInt& M) {
  ZPoly out = multiply(a, b);
  zreduce(out, M);
  return out;
}

// Division by a monic polynomial modulo M.
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& M, ZPoly& q, ZPoly& r) {
  r = a;
  q.clear();
  const int db = degree(b);
  if (degree(a) < db) return;
  q.assign(static_cast<std::size_t>(degree(a) - db + 1), BigInt(0));
  for (int i = degree(a); i >= db; --i) {
    BigInt c = r[static_cast<std::size_t>(i)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(db));
  zreduce(r, M);
  zreduce(q, M);
}

ZPoly lift_mpoly(const MPoly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// Lifts f = g*h (mod p), h monic, to f = g*h (mod target) where target is
// p^(2^k). Quadratic Hensel step with simultaneous Bezout lifting.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, const Field& F, const BigInt& target) {
  MPoly sm, tm;
  mext_gcd(reduce(g, F), reduce(h, F), F, sm, tm);
  ZPoly s = lift_mpoly(sm), t = lift_mpoly(tm);
  BigInt m(static_cast<unsigned long>(F.p));
  while (m < target) {
    BigInt M = m * m;
    ZPoly fm = f;
    zreduce(fm, M);
    ZPoly e = zsub(fm, zmul(g, h, M), M);
    ZPoly q, r;
    zdivmod_monic(zmul(s, e, M), h, M, q, r);
    ZPoly g2 = zadd(zadd(g, zmul(t, e, M), M), zmul(q, g, M), M);
    ZPoly h2 = zadd(h, r, M);
    ZPoly b = zsub(zadd(zmul(s, g2, M), zmul(t, h2, M), M), ZPoly{BigInt(1)}, M);
    ZPoly c, d;
    zdivmod_monic(zmul(s, b, M), h2, M, c, d);
    s = zsub(s, d, M);
    t = zsub(zsub(t, zmul(t, b, M), M), zmul(c, g2, M), M);
    g = std::move(g2);
    h = std::move(h2);
    m = std::move(M);
  }
}

void symmetric(ZPoly& a, const BigInt& M) {
  BigInt half = M / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  strip(a);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

bool is_squarefree(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (f.empty()) throw Error(ErrorKind::kInvalidInput, "squarefree test of the zero polynomial");
  if (degree(f) <= 1) return true;
  int tried = 0;
  for (u64 p : candidate_primes()) {
    if (mod_u64(f.back(), p) == 0) continue;
    Field F{p};
    MPoly fm = reduce(f, F);
    if (mdeg(mgcd(fm, reduce(derivative(f), F), F)) == 0) return true;
    if (++tried == 24) break;
  }
  PolynomialQ fq = to_polynomial_q(f);
  return gcd(fq, fq.derivative()).degree() == 0;
}

std::vector<ZFactor> squarefree_decomposition(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (f.empty()) throw Error(ErrorKind::kInvalidInput, "squarefree decomposition of the zero polynomial");
  std::vector<ZFactor> out;
  if (degree(f) == 0) return out;
  PolynomialQ a = to_polynomial_q(f);
  PolynomialQ da = a.derivative();
  PolynomialQ b = gcd(a, da);
  PolynomialQ c = divmod(a, b).first;
  PolynomialQ d = divmod(da, b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    PolynomialQ g = gcd(c, d);
    if (g.degree() > 0) out.push_back({to_primitive_zpoly(g), i});
    c = divmod(c, g).first;
    d = divmod(d, g).first - c.derivative();
    ++i;
  }
  for (auto& fac : out) fac.poly = primitive_part(fac.poly);
  return out;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (degree(f) < 1) throw Error(ErrorKind::kInvalidInput, "factorization of a constant polynomial");
  if (degree(f) == 1) return {f};

  // Pick the good prime (among a few) giving the fewest modular factors.
  Field best{0};
  std::vector<MPoly> best_factors;
  int good = 0;
  for (u64 p : candidate_primes()) {
    if (mod_u64(f.back(), p) == 0) continue;
    Field F{p};
    MPoly fm = reduce(f, F);
    if (mdeg(mgcd(fm, reduce(derivative(f), F), F)) != 0) continue;
    auto facs = factor_mod_p(fm, F);
    if (best.p == 0 || facs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1 || ++good == 4) break;
  }
  if (best.p == 0) throw Error(ErrorKind::kInvalidInput, "polynomial is not squarefree");
  if (best_factors.size() == 1) return {f};

  // Landau-Mignotte: any factor g of f has |coeff| <= 2^deg * ||f||_2, so
  // lc(f) * g / lc(g) is recovered exactly modulo P > 2 |lc| 2^deg ||f||_2.
  BigInt norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  BigInt bound = abs(f.back()) * norm * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
  BigInt P(static_cast<unsigned long>(best.p));
  while (P <= bound) P *= P;

  // Lift one monic factor at a time off the remaining cofactor.
  std::vector<ZPoly> lifted;
  ZPoly current = f;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    MPoly rest{mod_u64(current.back(), best.p)};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) rest = mmul(rest, best_factors[j], best);
    ZPoly g = lift_mpoly(rest), h = lift_mpoly(best_factors[i]);
    hensel_lift(current, g, h, best, P);
    zreduce(h, P);
    zreduce(g, P);
    lifted.push_back(std::move(h));
    current = std::move(g);
  }
  {
    BigInt lc_inv, lc = current.back();
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    for (auto& c : current) c *= lc_inv;
    zreduce(current, P);
    lifted.push_back(std::move(current));
  }

  std::vector<ZPoly> found;
  ZPoly rem = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly cand{rem.back()};
      for (std::size_t k : idx) cand = zmul(cand, lifted[k], P);
      symmetric(cand, P);
      if (!cand.empty() && rem.front() != 0 && cand.front() != 0) {
        BigInt lead_const = rem.back() * rem.front();
        if (!mpz_divisible_p(lead_const.get_mpz_t(), cand.front().get_mpz_t())) continue;
      }
      ZPoly g = primitive_part(cand);
      ZPoly q;
      if (degree(g) < 1 || !divides_exactly(rem, g, q)) continue;
      found.push_back(g);
      rem = primitive_part(q);
      for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
      hit = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++s;
  }
  if (degree(rem) > 0) found.push_back(rem);
  std::sort(found.begin(), found.end(), poly_less);
  return found;
}

std::vector<ZFactor> factor(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (f.empty()) throw Error(ErrorKind::kInvalidInput, "factorization of the zero polynomial");
  std::vector<ZFactor> out;
  if (degree(f) == 0) return out;
  std::vector<ZFactor> parts;
  if (is_squarefree(f)) {
    parts.push_back({f, 1});
  } else {
    parts = squarefree_decomposition(f);
  }
  for (const auto& part : parts) {
    for (auto& g : factor_squarefree(part.poly)) out.push_back({std::move(g), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const ZFactor& a, const ZFactor& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<Rational> rational_roots(const ZPoly& f) {
  std::vector<Rational> roots;
  for (const auto& fac : factor(f)) {
    if (degree(fac.poly) == 1) roots.push_back(make_rational(-fac.poly[0], fac.poly[1]));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace isofiber

#!/usr/bin/env python3
# Copyright 2026 The isofiber Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/modpoly/phi_j_<n>.txt for 2 <= n <= N.

Level 1 (X - Y) is antisymmetric and cannot be written in the symmetric
storage format; the library synthesizes it.

Prime levels come from PARI's polmodular. Prime powers use
  Res_Z(Phi_{p^k}(X,Z), Phi_p(Z,Y)) = Phi_{p^{k+1}} * Phi_{p^{k-1}}^{e},
with e = p+1 for k = 1 and e = p otherwise; coprime levels compose by a
plain resultant. Both are computed multimodularly: the resultant is taken
at Y = 0..psi modulo 62-bit primes, interpolated in Y, and combined by CRT
until the symmetric lift stops changing. Every output is checked against the q-expansion
Phi_n(j(q), j(q^n)) = 0 modulo a large prime before it is written.

Requires cypari2 (pip install cypari2). Development tool only; the C++
library reads the text files and never calls this.
"""

import argparse
import pathlib
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(4 * 10**9, silent=True)

CHECK_PRIME = 2**61 - 1


def psi(n):
    r = n
    for p in pari.factor(n)[0]:
        p = int(p)
        r = r // p * (p + 1)
    return r


# Res_Z(A(X,Z), B(Z,Y)) / D(X,Y)^e modulo p, made monic in X at each
# sample Y = y0 and interpolated in Y.
pari(
    "compose_mod(A, B, D, e, N, p) = "
    "my(Az = subst(A, y, z) * Mod(1, p), Bp = B * Mod(1, p), Dp = D * Mod(1, p),"
    " ys = vector(N + 1, i, Mod(i - 1, p)), vals = vector(N + 1), R, qr);"
    "for(i = 1, N + 1,"
    " R = polresultant(Az, subst(subst(Bp, y, ys[i]), x, z), z);"
    " if(e, qr = divrem(R, subst(Dp, y, ys[i])^e); if(qr[2], error(\"inexact division\")); R = qr[1]);"
    " vals[i] = R / pollead(R));"
    "polinterpolate(ys, vals, y)"
)
COMPOSE_MOD = pari("compose_mod")


def compose(a, b, n, divisor=None, power=0):
    d = divisor if divisor is not None else pari(1)
    p = pari(2) ** 62
    acc = prev = None
    while True:
        p = pari.precprime(p - 1)
        r = COMPOSE_MOD(a, b, d, power, psi(n), p)
        acc = r if acc is None else pari.chinese(acc, r)
        lift = pari.centerlift(acc)
        if lift == prev:
            return lift
        prev = lift


def build(n, cache):
    if n in cache:
        return cache[n]
    fac = pari.factor(n)
    primes = [int(p) for p in fac[0]]
    exps = [int(e) for e in fac[1]]
    if n == 1:
        phi = pari("x - y")
    elif len(primes) == 1 and exps[0] == 1:
        phi = pari(f"polmodular({n})")
    elif len(primes) == 1:
        p, k = primes[0], exps[0] - 1
        lower = build(p ** (k - 1), cache)
        power = p + 1 if k == 1 else p
        phi = compose(build(p**k, cache), build(p, cache), n, lower, power)
    else:
        head = primes[0] ** exps[0]
        phi = compose(build(head, cache), build(n // head, cache), n)
    cache[n] = phi
    return phi


def check(n, phi):
    deg = psi(n)
    if pari.poldegree(phi, "x") != deg or pari.poldegree(phi, "y") != deg:
        raise RuntimeError(f"level {n}: degree mismatch")
    if phi != pari.substvec(phi, ["x", "y"], ["y", "x"]):
        raise RuntimeError(f"level {n}: not symmetric")
    prec = deg * (n + 1) + 8
    q = pari(f"Mod(1,{CHECK_PRIME})*q + O(q^{prec + 1})")
    jq = pari.ellj(q)
    jqn = pari.subst(jq, "q", pari(f"q^{n}"))
    # Phi(j(q), j(q^n)) = sum_i j(q)^i * sum_k a_ik j(q^n)^k, with both power
    # tables computed once.
    xpow, ypow = [pari(1)], [pari(1)]
    for _ in range(deg):
        xpow.append(xpow[-1] * jq)
        ypow.append(ypow[-1] * jqn)
    val = 0
    for i in range(deg + 1):
        cx = pari.polcoef(phi, i, "x")
        inner = 0
        for k in range(deg + 1):
            c = pari.polcoef(cx, k, "y")
            if c != 0:
                inner += c * ypow[k]
        val += inner * xpow[i]
    if val != 0 and pari.valuation(val, "q") < 8:
        raise RuntimeError(f"level {n}: q-expansion check failed")


def emit(n, phi, out):
    lines = [f"# classical modular polynomial Phi_{n}(X,Y), psi = {psi(n)}"]
    deg = psi(n)
    for i in range(deg, -1, -1):
        cx = pari.polcoef(phi, i, "x")
        for k in range(min(i, deg), -1, -1):
            c = pari.polcoef(cx, k, "y")
            if c != 0:
                lines.append(f"[{i},{k}] {c}")
    (out / f"phi_j_{n}.txt").write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-level", type=int, default=30)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data/modpoly"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    cache = {}
    for n in range(2, args.max_level + 1):
        phi = build(n, cache)
        check(n, phi)
        emit(n, phi, args.out)
        print(f"phi_j_{n}.txt ok", file=sys.stderr)


if __name__ == "__main__":
    main()

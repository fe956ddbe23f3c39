"""Slow reference implementations that share no code with the package."""

import math
from fractions import Fraction

import numpy as np


def trial_factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_phi(n):
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def brute_lambda(n):
    """Least e >= 1 with a**e == 1 mod n for every unit a."""
    units = [a for a in range(1, n + 1) if math.gcd(a, n) == 1]
    e = 1
    while True:
        if all(pow(a, e, n) == 1 % n for a in units):
            return e
        e += 1


def bernoulli_at(k):
    """B_k with the B_1 = -1/2 convention."""
    b = akiyama_tanigawa(k)
    return -b if k == 1 else b


def akiyama_tanigawa(k):
    """B_k via the Akiyama-Tanigawa triangle (gives B_1 = +1/2)."""
    a = [Fraction(0)] * (k + 1)
    for m in range(k + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def leibniz_derivative(n):
    """n' from p' = 1 and (ab)' = a'b + ab', splitting off one prime at a time."""
    if n <= 1:
        return 0
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            m = n // d
            return leibniz_derivative(d) * m + d * leibniz_derivative(m)
    return 1


def primes_upto(x):
    s = np.ones(x + 1, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(x) + 1):
        if s[p]:
            s[p * p :: p] = False
    return np.flatnonzero(s)


def korselt_carmichaels(x):
    """Composite, square-free, p-1 | n-1 for all p | n; sieved prime by prime."""
    ok = np.ones(x + 1, dtype=bool)
    ok[:2] = False
    n = np.arange(x + 1)
    for p in primes_upto(x):
        p = int(p)
        ok[p] = False
        mult = n[p::p]
        ok[p::p] &= (mult % (p * p) != 0) & ((mult - 1) % (p - 1) == 0)
    return [int(v) for v in np.flatnonzero(ok)]


def k_carmichael_counts(x, ks, include_primes=False):
    """For each prime power p^e exactly dividing n, require lambda(p^e) | k(n-1)."""
    n = np.arange(x + 1, dtype=np.int64)
    good = {k: np.ones(x + 1, dtype=bool) for k in ks}
    prime = np.zeros(x + 1, dtype=bool)
    prime[primes_upto(x)] = True
    for p in primes_upto(x):
        p = int(p)
        q, e = p, 1
        while q <= x:
            lam = (1 if e == 1 else 2 if e == 2 else q // 4) if p == 2 else q // p * (p - 1)
            exact = n[q::q]
            exact = exact[exact % (q * p) != 0]
            for k in ks:
                good[k][exact] &= (k * (exact - 1)) % lam == 0
            q *= p
            e += 1
    out = {}
    for k in ks:
        g = good[k]
        g[:2] = False
        if not include_primes:
            g &= ~prime
        out[k] = int(np.count_nonzero(g))
    return out

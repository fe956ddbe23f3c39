"""Derive the bundled factor cache for the known Giuga numbers.

Pollard-Brent handles everything up to g_12. The 66-digit semiprime left
inside g_13 is split using the Giuga property: if ``n = m * C`` with
``C = p * q`` and ``sum 1/p - 1/n`` an integer I, then
``p + q = C * (I - sum_{p | m} 1/p + 1/n)`` fixes p and q by a quadratic.
Output is re-verified on load, so this script is not trusted.
"""

import argparse
import math
import sys
from fractions import Fraction

from giuga import GIUGA_NUMBERS, FactorCache, Factorization, GaveUp, cache_store, factor


def split_by_reciprocals(n, found, cofactor, max_excess=8):
    known = sum((Fraction(1, p) for p in found), Fraction(0))
    for excess in range(1, max_excess + 1):
        s = (excess - known + Fraction(1, n)) * cofactor
        if s.denominator != 1:
            continue
        s = int(s)
        disc = s * s - 4 * cofactor
        if disc < 0:
            continue
        r = math.isqrt(disc)
        if r * r == disc and (s - r) % 2 == 0:
            p, q = (s - r) // 2, (s + r) // 2
            if p * q == cofactor:
                return p, q
    return None


def factor_giuga(n, budget_ms):
    try:
        return factor(n, budget_ms=budget_ms)
    except GaveUp as exc:
        found = dict(exc.found)
        for c in exc.cofactors:
            pq = split_by_reciprocals(n, found, c)
            if pq is None:
                raise
            for p in pq:
                found[p] = found.get(p, 0) + 1
        return Factorization.from_dict(n, found)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("output", nargs="?", default="src/giuga/data/giuga_factors.txt")
    ap.add_argument("--budget", type=float, default=60_000, help="rho budget per number, ms")
    args = ap.parse_args(argv)
    cache = FactorCache()
    for i, g in enumerate(GIUGA_NUMBERS, 1):
        f = factor_giuga(g, args.budget)
        cache.add(f)
        print(f"g_{i} = {f}", file=sys.stderr)
    cache_store(cache, args.output)
    with open(args.output, "r+", encoding="utf-8") as fh:
        body = fh.read()
        fh.seek(0)
        fh.write("# Factorizations of the 13 known Giuga numbers (OEIS A007850).\n"
                 "# Regenerate with scripts/build_factor_cache.py.\n" + body)


if __name__ == "__main__":
    main()

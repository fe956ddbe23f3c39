"""Sieve-based survey of the k-Carmichael counting functions C_k(X)."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

MAX_LIMIT = 10**8
DEFAULT_SEGMENT = 1 << 20
_K_MAX = 1 << 62
# bytes needed per table entry while building (spf, cofactor, prime power, lambda, flags)
_BUILD_BYTES_PER_ENTRY = 24


@dataclass(frozen=True)
class LambdaTable:
    """``lam[n]`` for ``0 <= n <= limit``; entries 0 and 1 are set to 1."""

    limit: int
    lam: np.ndarray
    spf: np.ndarray

    def __getitem__(self, n: int) -> int:
        if not 2 <= n <= self.limit:
            raise IndexError(n)
        return int(self.lam[n])

    def is_prime(self, lo: int = 0, hi: int | None = None) -> np.ndarray:
        hi = self.limit + 1 if hi is None else hi
        n = np.arange(lo, hi)
        return (self.spf[lo:hi] == n) & (n >= 2)


def _check_limit(limit: int) -> None:
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > MAX_LIMIT:
        raise MemoryError(
            f"limit {limit} above {MAX_LIMIT} (needs ~{limit * _BUILD_BYTES_PER_ENTRY >> 20} MiB);"
            " lower X"
        )


def smallest_prime_factor(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    n = np.arange(limit + 1, dtype=np.int32)
    unset = spf == 0
    spf[unset] = n[unset]
    spf[:2] = 1
    return spf


def build_lambda_table(limit: int) -> LambdaTable:
    """Carmichael's function for every n <= limit.

    Each ``n = p**e * m`` with ``p`` its least prime factor gets
    ``lcm(lambda(p**e), lambda(m))``; a round resolves every n whose cofactor
    is already known, so the number of rounds is the largest omega(n).
    """
    _check_limit(limit)
    spf = smallest_prime_factor(limit)
    n = np.arange(limit + 1, dtype=np.int64)
    p = spf.astype(np.int64)
    pe = p.copy()
    m = n // p
    more = (m % p == 0) & (n >= 2)
    while more.any():
        idx = np.flatnonzero(more)
        pe[idx] *= p[idx]
        m[idx] //= p[idx]
        more[idx] = m[idx] % p[idx] == 0

    # lambda of the leading prime power
    lpp = pe // p * (p - 1)
    two = p == 2
    lpp[two & (pe == 2)] = 1
    lpp[two & (pe >= 8)] = pe[two & (pe >= 8)] // 4
    lpp[:2] = 1

    lam = np.zeros(limit + 1, dtype=np.int64)
    lam[:2] = 1
    done = np.zeros(limit + 1, dtype=bool)
    done[:2] = True
    todo = np.arange(2, limit + 1)
    while todo.size:
        ready = done[m[todo]]
        idx = todo[ready]
        lam[idx] = np.lcm(lpp[idx], lam[m[idx]])
        done[idx] = True
        todo = todo[~ready]
    if lam.max() > np.iinfo(np.int32).max:
        raise OverflowError("lambda exceeds int32 storage")
    return LambdaTable(limit, lam.astype(np.int32), spf)


def _segment_count(table: LambdaTable, k: int, lo: int, hi: int, include_primes: bool) -> int:
    n = np.arange(lo, hi, dtype=np.int64)
    lam = table.lam[lo:hi].astype(np.int64)
    # lambda | k(n-1)  <=>  lambda / gcd(lambda, k) | n - 1
    need = lam // np.gcd(lam, k)
    hit = (n - 1) % need == 0
    if not include_primes:
        hit &= table.spf[lo:hi] != n
    return int(np.count_nonzero(hit))


def k_carmichael_count(
    table: LambdaTable,
    k: int,
    include_primes: bool = False,
    segment: int = DEFAULT_SEGMENT,
    workers: int = 1,
) -> int:
    """C_k(X): n in [2, X] with ``lambda(n) | k(n-1)``, composites only by default."""
    if not 1 <= k < _K_MAX:
        raise ValueError(f"k must be in [1, 2**62), got {k}")
    if segment < 1:
        raise ValueError("segment size must be positive")
    bounds = [(lo, min(lo + segment, table.limit + 1)) for lo in range(2, table.limit + 1, segment)]
    if workers <= 1:
        parts = [_segment_count(table, k, lo, hi, include_primes) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: _segment_count(table, k, *b, include_primes), bounds))
    return sum(parts)


def _is_prime_small(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class SurveyReport:
    limit: int
    counts: dict[int, int]
    ratios: dict[tuple[int, int], Fraction | None]
    ordering_ok: bool | None
    include_primes: bool = False
    ordering_detail: dict[int, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "limit": self.limit,
            "include_primes": self.include_primes,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "ratios": {
                f"{k}/{t}": (None if r is None else f"{r.numerator}/{r.denominator}")
                for (k, t), r in sorted(self.ratios.items())
            },
            "ordering_ok": self.ordering_ok,
        }

    def to_csv(self) -> str:
        lines = ["k,limit,count"]
        lines += [f"{k},{self.limit},{c}" for k, c in self.counts.items()]
        return "\n".join(lines) + "\n"


def ordering_holds(counts: dict[int, int]) -> tuple[bool | None, dict[int, bool]]:
    """``C_5 > C_3 > C_7 > C_p`` for each other prime p present in ``counts``."""
    if not {3, 5, 7} <= counts.keys():
        return None, {}
    head = counts[5] > counts[3] > counts[7]
    detail = {
        p: counts[7] > c
        for p, c in sorted(counts.items())
        if p not in (3, 5, 7) and _is_prime_small(p)
    }
    return head and all(detail.values()), detail


def count_k_carmichael(
    table: LambdaTable,
    ks: list[int],
    include_primes: bool = False,
    segment: int = DEFAULT_SEGMENT,
    workers: int = 1,
) -> SurveyReport:
    counts = {
        k: k_carmichael_count(table, k, include_primes, segment, workers) for k in ks
    }
    ratios = {
        (k, t): (Fraction(counts[k], counts[t]) if counts[t] else None)
        for k in ks
        for t in ks
    }
    ok, detail = ordering_holds(counts)
    return SurveyReport(table.limit, counts, ratios, ok, include_primes, detail)


def density_report(table: LambdaTable, k: int, t: int, **kwargs) -> Fraction:
    """Finite-X proxy ``C_k(X) / C_t(X)`` as an exact rational."""
    ct = k_carmichael_count(table, t, **kwargs)
    if ct == 0:
        raise ZeroDivisionError(f"C_{t}({table.limit}) is zero")
    return Fraction(k_carmichael_count(table, k, **kwargs), ct)


def giuga_sweep(limit: int) -> list[int]:
    """All Giuga numbers up to ``limit`` by sieving ``(n/p) mod p == 1``."""
    _check_limit(limit)
    ok = np.ones(limit + 1, dtype=bool)
    ok[:4] = False
    spf = smallest_prime_factor(limit)
    ok[spf == np.arange(limit + 1)] = False  # primes
    root = math.isqrt(limit)
    for p in np.flatnonzero(spf[2 : limit // 2 + 1] == np.arange(2, limit // 2 + 1)) + 2:
        p = int(p)
        if p > root:
            # cofactor m < p can never be 1 mod p
            ok[2 * p :: p] = False
            continue
        cof = np.arange(2, limit // p + 1)
        ok[2 * p :: p] &= cof % p == 1
    return [int(n) for n in np.flatnonzero(ok)]

"""Giuga, Carmichael, k-Carmichael and k-strong Giuga classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from giuga.arith import rational_mod
from giuga.factor import Factorization
from giuga.powersum import power_sum_fast, power_sum_naive
from giuga.totients import carmichael_lambda, euler_phi

BERNOULLI_MAX = 2000
DEFAULT_BERNOULLI_LIMIT = 300
ORACLE_LIMIT = 10**5

_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli_exact(k: int, limit: int = BERNOULLI_MAX) -> Fraction:
    """Exact Bernoulli number ``B_k`` with ``B_1 = -1/2``.

    Built from ``sum_{j<=m} C(m+1, j) B_j = 0``; results are memoised.
    """
    if k < 0:
        raise ValueError("index must be non-negative")
    if k > limit:
        raise ValueError(f"B_{k} refused: index above limit {limit}")
    if k >= 3 and k % 2:
        return Fraction(0)
    while len(_bernoulli) <= k:
        m = len(_bernoulli)
        if m >= 3 and m % 2:
            _bernoulli.append(Fraction(0))
            continue
        acc = Fraction(0)
        binom = 1  # C(m+1, j)
        for j in range(m):
            if _bernoulli[j]:
                acc += binom * _bernoulli[j]
            binom = binom * (m + 1 - j) // (j + 1)
        _bernoulli.append(-acc / (m + 1))
    return _bernoulli[k]


def is_giuga(f: Factorization) -> bool:
    """Composite ``n`` with ``p | n/p - 1`` for every prime ``p | n``."""
    n = f.value
    if f.is_prime:
        return False
    ok = all((n // p - 1) % p == 0 for p in f.primes)
    if ok and not f.is_square_free:
        # p^2 | n gives p | n/p, so p cannot also divide n/p - 1
        raise RuntimeError(f"non-square-free {n} passed the Giuga test")
    return ok


def arithmetic_derivative(f: Factorization) -> int:
    """``n' = sum r_i * n / p_i``."""
    n = f.value
    return sum(e * (n // p) for p, e in f.factors)


def reciprocal_excess(f: Factorization) -> Fraction:
    """``sum_{p | n} 1/p - 1/n`` as an exact rational."""
    return sum((Fraction(1, p) for p in f.primes), Fraction(0)) - Fraction(1, f.value)


@dataclass(frozen=True)
class GiugaEvidence:
    """Verdicts from each Giuga characterization; ``None`` means skipped."""

    divisibility: bool
    reciprocal_sum: bool
    powersum_phi: bool
    bernoulli: bool | None
    derivative: bool
    diagnostic: str | None = None

    def verdicts(self) -> dict[str, bool | None]:
        return {
            "divisibility": self.divisibility,
            "reciprocal_sum": self.reciprocal_sum,
            "powersum_phi": self.powersum_phi,
            "bernoulli": self.bernoulli,
            "derivative": self.derivative,
        }

    @property
    def agree(self) -> bool:
        vals = {v for v in self.verdicts().values() if v is not None}
        return len(vals) == 1


def agoh_residue(f: Factorization) -> int:
    """``n * B_phi(n) mod n``; raises ValueError if the denominator shares a factor."""
    n = f.value
    return rational_mod(n * bernoulli_exact(euler_phi(f)), n)


def giuga_evidence(
    f: Factorization, bernoulli_limit: int = DEFAULT_BERNOULLI_LIMIT
) -> GiugaEvidence:
    n = f.value
    if f.is_prime:
        raise ValueError(f"{n} is prime; evidence needs a composite")
    phi = euler_phi(f)
    excess = reciprocal_excess(f)
    bern: bool | None = None
    diagnostic = None
    if phi <= bernoulli_limit:
        try:
            bern = agoh_residue(f) == n - 1
        except ValueError as exc:
            bern = False
            diagnostic = f"bernoulli: {exc}"
    return GiugaEvidence(
        divisibility=all((n // p - 1) % p == 0 for p in f.primes),
        reciprocal_sum=excess.denominator == 1 and excess > 0,
        powersum_phi=power_sum_fast(f, phi) == n - 1,
        bernoulli=bern,
        derivative=arithmetic_derivative(f) % n == 1,
        diagnostic=diagnostic,
    )


def korselt(f: Factorization) -> bool:
    n = f.value
    return f.is_square_free and all((n - 1) % (p - 1) == 0 for p in f.primes)


def is_carmichael(f: Factorization) -> bool:
    """Composite with ``lambda(n) | n - 1``; cross-checked against Korselt."""
    if f.is_prime:
        return False
    n = f.value
    by_lambda = (n - 1) % carmichael_lambda(f) == 0
    if by_lambda != korselt(f):
        raise RuntimeError(f"lambda and Korselt criteria disagree on {n}")
    return by_lambda


def is_k_carmichael(f: Factorization, k: int) -> bool:
    """``lambda(n) | k(n - 1)``. Primes qualify for every k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return k * (f.value - 1) % carmichael_lambda(f) == 0


def k_min(f: Factorization) -> int:
    """Least k with ``lambda(n) | k(n - 1)``."""
    lam = carmichael_lambda(f)
    return lam // math.gcd(lam, f.value - 1)


def prop6_verdicts(
    f: Factorization, k: int, base_limit: int = 100
) -> tuple[bool, bool, bool]:
    """Three k-Carmichael tests for a square-free composite.

    ``(lambda(n) | k(n-1), all p-1 | k(n-1), a**(kn) == a**k mod n for a <= base_limit)``
    """
    if f.is_prime or not f.is_square_free:
        raise ValueError(f"{f.value} must be square-free and composite")
    n = f.value
    t = k * (n - 1)
    by_lambda = t % carmichael_lambda(f) == 0
    by_primes = all(t % (p - 1) == 0 for p in f.primes)
    by_bases = all(
        pow(a, k * n, n) == pow(a, k, n) for a in range(base_limit + 1)
    )
    return by_lambda, by_primes, by_bases


def is_k_strong_giuga(f: Factorization, k: int) -> bool:
    """Giuga and k-Carmichael, which characterizes the k-strong Giuga numbers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if f.is_prime:
        raise ValueError(f"{f.value} is prime")
    return is_giuga(f) and is_k_carmichael(f, k)


def is_k_strong_giuga_def(n: int, k: int, limit: int | None = ORACLE_LIMIT) -> bool:
    """Direct test ``sum_{j<n} j**(k(n-1)) == -1 mod n``; caller ensures n composite."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if limit is not None and n > limit:
        raise ValueError(
            f"n = {n} above oracle limit {limit}; use is_k_strong_giuga"
        )
    return power_sum_naive(n, k * (n - 1)) == n - 1


def kset(f: Factorization, count: int) -> list[int]:
    """The first ``count`` elements of the set of k making n k-strong Giuga."""
    if f.is_prime:
        raise ValueError(f"{f.value} is prime")
    if count < 1:
        raise ValueError("count must be positive")
    if not is_giuga(f):
        return []
    base = k_min(f)
    return [t * base for t in range(1, count + 1)]


def is_strong_giuga(f: Factorization) -> bool:
    if f.is_prime:
        raise ValueError(f"{f.value} is prime")
    result = is_giuga(f) and is_carmichael(f)
    if result != (is_giuga(f) and k_min(f) == 1):
        raise RuntimeError(f"strong Giuga routes disagree on {f.value}")
    return result


@dataclass(frozen=True)
class KClass:
    n: int
    factorization: Factorization
    phi: int
    lam: int
    is_composite: bool
    is_square_free: bool
    is_giuga: bool
    is_carmichael: bool
    k_min: int


def kclass(f: Factorization) -> KClass:
    return KClass(
        n=f.value,
        factorization=f,
        phi=euler_phi(f),
        lam=carmichael_lambda(f),
        is_composite=not f.is_prime,
        is_square_free=f.is_square_free,
        is_giuga=is_giuga(f),
        is_carmichael=is_carmichael(f),
        k_min=k_min(f),
    )

"""Primality testing, factorization and the verified factor cache."""

from __future__ import annotations

import math
import random
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET_MS = 30_000

# Deterministic for every n < 2**64 (Jaeschke / Sorenson-Webster).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_ROUNDS_BIG = 40
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_trial_primes: list[int] | None = None


def _primes_below(limit: int) -> list[int]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit, p)))
    return [i for i, v in enumerate(sieve) if v]


def trial_primes() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = _primes_below(TRIAL_LIMIT + 1)
    return _trial_primes


def _strong_probable_prime(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; exact below 2**64, 40 seeded random rounds above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases: Iterable[int] = _MR_BASES_64
    else:
        # seeded by n so verdicts are reproducible
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_BIG)]
    return all(_strong_probable_prime(n, d, s, a) for a in bases)


@dataclass(frozen=True)
class Factorization:
    """A verified prime factorization ``value = prod(p**e)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 2:
            raise ValueError(f"factorization value must be >= 2, got {self.value}")
        if not self.factors:
            raise ValueError("empty factor list")
        prev = 0
        product = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive")
            if not is_probable_prime(p):
                raise ValueError(f"{p} is not prime")
            product *= p**e
            prev = p
        if product != self.value:
            raise ValueError(f"product {product} != {self.value}")

    @classmethod
    def from_dict(cls, value: int, factors: dict[int, int]) -> "Factorization":
        return cls(value, tuple(sorted(factors.items())))

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_square_free(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" for p, e in self.factors)


class GaveUp(Exception):
    """Factoring budget ran out with a composite cofactor left over."""

    def __init__(self, n: int, found: dict[int, int], cofactors: list[int]):
        self.n = n
        self.found = dict(sorted(found.items()))
        self.cofactors = sorted(cofactors)
        super().__init__(
            f"gave up factoring {n}: unfactored composite cofactor(s) "
            + ", ".join(map(str, self.cofactors))
        )


class CacheError(ValueError):
    pass


@dataclass
class FactorCache:
    entries: dict[int, Factorization] = field(default_factory=dict)

    def get(self, n: int) -> Factorization | None:
        return self.entries.get(n)

    def add(self, f: Factorization) -> None:
        self.entries[f.value] = f

    def update(self, other: "FactorCache") -> None:
        self.entries.update(other.entries)

    def __contains__(self, n: int) -> bool:
        return n in self.entries

    def __len__(self) -> int:
        return len(self.entries)


_LINE_RE = re.compile(r"([0-9]+) = ([0-9]+\^[0-9]+(?: \* [0-9]+\^[0-9]+)*)")


def parse_cache_line(line: str) -> Factorization:
    m = _LINE_RE.fullmatch(line)
    if not m:
        raise ValueError("malformed entry")
    n = int(m.group(1))
    factors = []
    for term in m.group(2).split(" * "):
        p, e = term.split("^")
        factors.append((int(p), int(e)))
    return Factorization(n, tuple(factors))


def cache_loads(text: str, source: str = "<string>") -> FactorCache:
    cache = FactorCache()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        try:
            cache.add(parse_cache_line(line))
        except ValueError as exc:
            raise CacheError(f"{source}:{lineno}: {exc}: {line!r}") from None
    return cache


def cache_load(path) -> FactorCache:
    """Load a cache file, re-verifying every entry; any bad line rejects the file."""
    path = Path(path)
    return cache_loads(path.read_text(encoding="utf-8"), str(path))


def cache_dumps(cache: FactorCache) -> str:
    return "".join(f"{n} = {cache.entries[n]}\n" for n in sorted(cache.entries))


def cache_store(cache: FactorCache, path) -> None:
    Path(path).write_text(cache_dumps(cache), encoding="utf-8")


def default_cache() -> FactorCache:
    """The bundled cache holding factorizations of the known Giuga numbers."""
    text = resources.files("giuga.data").joinpath("giuga_factors.txt").read_text("utf-8")
    return cache_loads(text, "giuga_factors.txt")


def _brent(n: int, deadline: float, rng: random.Random) -> int | None:
    """One nontrivial factor of odd composite ``n`` (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            if time.monotonic() > deadline:
                return None
        if g == n:
            # batch overshot; step back one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            return r, k
    return None


def factor(
    n: int,
    cache: FactorCache | None = None,
    budget_ms: float = DEFAULT_BUDGET_MS,
) -> Factorization:
    """Factor ``n >= 2``: cache, trial division to 10**6, then Pollard-Brent.

    Raises :class:`GaveUp` when ``budget_ms`` is spent before every cofactor
    is proven prime.
    """
    if n < 2:
        raise ValueError(f"factor() needs n >= 2, got {n}")
    if cache is not None and (hit := cache.get(n)) is not None:
        return hit

    found: dict[int, int] = {}
    m = n
    for p in trial_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        pending = [m]
        deadline = time.monotonic() + budget_ms / 1000
        rng = random.Random(n)
        stuck = []
        while pending:
            c = pending.pop()
            if cache is not None and (hit := cache.get(c)) is not None:
                for p, e in hit.factors:
                    found[p] = found.get(p, 0) + e
                continue
            if is_probable_prime(c):
                found[c] = found.get(c, 0) + 1
                continue
            pp = _perfect_power(c)
            if pp is not None:
                base, k = pp
                pending.extend([base] * k)
                continue
            d = _brent(c, deadline, rng)
            if d is None:
                stuck.append(c)
                continue
            pending.extend([d, c // d])
        if stuck:
            raise GaveUp(n, found, stuck)

    f = Factorization.from_dict(n, found)
    if cache is not None:
        cache.add(f)
    return f

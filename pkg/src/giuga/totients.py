"""Euler's totient and Carmichael's reduced totient from a factorization."""

from __future__ import annotations

import math
from typing import NamedTuple

from giuga.factor import Factorization


class TotientPair(NamedTuple):
    phi: int
    lam: int


def euler_phi(f: Factorization | None) -> int:
    if f is None:  # n = 1
        return 1
    return math.prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def prime_power_lambda(p: int, e: int) -> int:
    """Exponent of the unit group modulo ``p**e``."""
    if p == 2:
        return 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
    return p ** (e - 1) * (p - 1)


def carmichael_lambda(f: Factorization | None) -> int:
    """Carmichael's function; ``None`` stands for n = 1 and gives 1."""
    if f is None:
        return 1
    return math.lcm(*(prime_power_lambda(p, e) for p, e in f.factors))


def totients(f: Factorization | None) -> TotientPair:
    return TotientPair(euler_phi(f), carmichael_lambda(f))

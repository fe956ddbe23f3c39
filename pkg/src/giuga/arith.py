"""Exact integer and rational primitives.

Naturals are plain Python ints and rationals are :class:`fractions.Fraction`,
which is always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence

import numpy as np

_NATURAL_RE = re.compile(r"[0-9]+")
_RATIONAL_RE = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")

# n * n must stay below 2**63 for the vectorised path.
ARRAY_MODULUS_MAX = 3_037_000_499


def modpow(base: int, exponent: int, modulus: int) -> int:
    """``base**exponent mod modulus``, with ``0**0 == 1``."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if base < 0 or exponent < 0:
        raise ValueError("base and exponent must be non-negative")
    return pow(base, exponent, modulus)


def modpow_array(bases: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    """Elementwise ``bases**exponent mod modulus`` by square-and-multiply.

    Only valid for ``modulus <= ARRAY_MODULUS_MAX`` so products fit in int64.
    """
    if not 1 <= modulus <= ARRAY_MODULUS_MAX:
        raise ValueError(f"modulus {modulus} outside vectorised range")
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    b = np.asarray(bases, dtype=np.int64) % modulus
    result = np.full(b.shape, 1 % modulus, dtype=np.int64)
    e = exponent
    while e:
        if e & 1:
            result = result * b % modulus
        e >>= 1
        if e:
            b = b * b % modulus
    return result


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Combine residues modulo pairwise coprime moduli into one residue."""
    x, m = 0, 1
    for r, q in zip(residues, moduli):
        if math.gcd(m, q) != 1:
            raise ValueError(f"moduli {m} and {q} are not coprime")
        # x + m*t = r (mod q)
        t = (r - x) * pow(m, -1, q) % q
        x += m * t
        m *= q
    return x % m


def rational_mod(r: Fraction, modulus: int) -> int:
    """Reduce ``r = p/q`` to ``p * q^-1 mod modulus``.

    Raises ValueError when the denominator is not invertible.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    r = Fraction(r)
    if math.gcd(r.denominator, modulus) != 1:
        raise ValueError(
            f"denominator {r.denominator} not invertible mod {modulus}"
        )
    return r.numerator * pow(r.denominator, -1, modulus) % modulus


def parse_natural(text: str) -> int:
    text = text.strip()
    if not _NATURAL_RE.fullmatch(text):
        raise ValueError(f"not a natural number: {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.fullmatch(text.strip())
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"

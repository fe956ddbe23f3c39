"""The power sum ``S(n, e) = sum_{j=1}^{n-1} j**e mod n``.

Two independent evaluations: a direct sum over every term, and a fast path
that splits ``n`` into prime-power blocks and recombines by CRT.
"""

from __future__ import annotations

import numpy as np

from giuga.arith import ARRAY_MODULUS_MAX, crt, modpow_array
from giuga.factor import Factorization

_CHUNK = 1 << 18
# below this a Python loop beats numpy's per-call overhead
_ARRAY_THRESHOLD = 64
# largest prime-power block the fast path will sum term by term
BLOCK_MAX = 10**7


def _direct_sum(n: int, e: int, start: int = 1) -> int:
    if n <= _ARRAY_THRESHOLD or n > ARRAY_MODULUS_MAX:
        return sum(pow(j, e, n) for j in range(start, n)) % n
    total = 0
    for lo in range(start, n, _CHUNK):
        j = np.arange(lo, min(lo + _CHUNK, n), dtype=np.int64)
        # each chunk sum < 2**18 * n < 2**63
        total = (total + int(modpow_array(j, e, n).sum(dtype=np.int64))) % n
    return total


def power_sum_naive(n: int, e: int, max_n: int | None = None) -> int:
    """Sum every ``j**e mod n`` for ``1 <= j < n``. Ground truth; O(n log e)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if max_n is not None and n > max_n:
        raise ValueError(f"n = {n} exceeds the direct-summation limit {max_n}")
    return _direct_sum(n, e)


def prime_power_block(p: int, r: int, e: int) -> int:
    """``S(p**r, e) mod p**r``."""
    q = p**r
    if r == 1:
        # e-th powers of units: sum is -1 if (p-1) | e, else 0
        return (q - 1) if e % (p - 1) == 0 else 0
    if q > BLOCK_MAX:
        raise ValueError(f"prime-power block {p}^{r} too large to sum directly")
    return _direct_sum(q, e)


def power_sum_fast(f: Factorization, e: int) -> int:
    """``S(n, e)`` via CRT over the prime-power blocks of ``f``.

    Modulo each block ``q = p**r`` the full sum is ``(n/q) * S(q, e)``,
    because ``j -> j mod q`` covers each residue ``n/q`` times.
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    n = f.value
    residues, moduli = [], []
    for p, r in f.factors:
        q = p**r
        residues.append((n // q) % q * prime_power_block(p, r, e) % q)
        moduli.append(q)
    return crt(residues, moduli)

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from giuga.arith import (
    crt,
    format_rational,
    gcd,
    lcm,
    modpow,
    modpow_array,
    parse_natural,
    parse_rational,
    rational_mod,
)


def test_modpow_examples():
    assert modpow(2, 10, 1000) == 24
    assert modpow(7, 0, 13) == 1
    assert modpow(3, 10, 11) == 1
    assert modpow(0, 0, 5) == 1
    assert modpow(0, 0, 1) == 0


def test_modpow_rejects_zero_modulus():
    with pytest.raises(ValueError):
        modpow(2, 3, 0)


def test_modpow_exhaustive_against_repeated_multiplication():
    for m in range(1, 101):
        for b in range(51):
            acc = 1 % m
            for e in range(51):
                assert modpow(b, e, m) == acc
                acc = acc * (b % m) % m


def test_modpow_array_matches_scalar():
    bases = np.arange(0, 200)
    for m in (1, 2, 97, 1000, 3_000_000_001):
        for e in (0, 1, 2, 17, 10**12 + 7):
            got = modpow_array(bases, e, m)
            assert got.tolist() == [pow(int(b), e, m) for b in bases]


def test_gcd_lcm_examples():
    assert gcd(4, 29) == 1
    assert lcm(lcm(1, 2), 4) == 4
    assert gcd(60, 857) == 1
    assert gcd(0, 0) == 0
    assert lcm(0, 7) == 0


@given(st.integers(1, 2**64 - 1), st.integers(1, 2**64 - 1))
def test_gcd_times_lcm(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b


def test_rational_mod_examples():
    assert rational_mod(Fraction(-1), 30) == 29
    assert rational_mod(Fraction(2, 3), 4) == 2
    assert rational_mod(Fraction(-1, 17), 30) == 7


def test_rational_mod_non_invertible():
    with pytest.raises(ValueError):
        rational_mod(Fraction(1, 6), 30)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**12), st.integers(2, 10**9))
def test_rational_mod_inverts(p, q, m):
    r = Fraction(p, q)
    if math.gcd(r.denominator, m) != 1:
        with pytest.raises(ValueError):
            rational_mod(r, m)
        return
    assert rational_mod(r, m) * r.denominator % m == r.numerator % m


def test_crt_small():
    assert crt([1, 2, 0], [2, 3, 5]) == 5
    with pytest.raises(ValueError):
        crt([0, 0], [4, 6])


@given(st.integers(0, 10**200))
def test_natural_round_trip(n):
    assert parse_natural(str(n)) == n


@pytest.mark.parametrize("bad", ["", "-3", "1.5", "12a", "0x10", "1e3"])
def test_parse_natural_rejects(bad):
    with pytest.raises(ValueError):
        parse_natural(bad)


@given(st.fractions())
def test_rational_round_trip(r):
    assert parse_rational(format_rational(r)) == r


def test_parse_rational_canonical():
    r = parse_rational("-6/4")
    assert (r.numerator, r.denominator) == (-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1/0")

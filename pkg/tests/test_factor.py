import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from giuga.factor import (
    CacheError,
    FactorCache,
    Factorization,
    GaveUp,
    cache_load,
    cache_loads,
    cache_store,
    default_cache,
    factor,
    is_probable_prime,
)
from giuga.known import GIUGA_NUMBERS


@pytest.mark.parametrize("n,expected", [(857, True), (561, False), (1, False), (0, False), (2, True), (4, False)])
def test_primality_examples(n, expected):
    assert is_probable_prime(n) is expected


def test_primality_exhaustive_to_a_million():
    sieve = set(oracles.primes_upto(10**6).tolist())
    assert all(is_probable_prime(n) == (n in sieve) for n in range(10**6 + 1))


@pytest.mark.parametrize(
    "n",
    [3215031751, 3825123056546413051, 318665857834031151167461, 2**64 + 1, (2**61 - 1) * (2**89 - 1)],
)
def test_strong_pseudoprimes_rejected(n):
    assert not is_probable_prime(n)


@pytest.mark.parametrize("n", [2**61 - 1, 2**89 - 1, 2**127 - 1, 2**521 - 1])
def test_large_primes(n):
    assert is_probable_prime(n)


@pytest.mark.parametrize(
    "n,expected",
    [
        (30, {2: 1, 3: 1, 5: 1}),
        (66198, {2: 1, 3: 1, 11: 1, 17: 1, 59: 1}),
        (2214408306, {2: 1, 3: 1, 11: 1, 23: 1, 31: 1, 47057: 1}),
    ],
)
def test_factor_examples(n, expected):
    assert factor(n).as_dict() == expected


def test_factor_agrees_with_trial_division():
    for n in range(2, 10**5 + 1):
        assert factor(n).as_dict() == oracles.trial_factor(n), n


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from([2, 3, 5, 1000003, 999999937, 2**31 - 1, 4294967311]), min_size=1, max_size=6))
def test_factor_round_trip(ps):
    n = 1
    for p in ps:
        n *= p
    if n < 2:
        return
    f = factor(n)
    prod = 1
    for p, e in f.factors:
        prod *= p**e
    assert prod == n
    assert sum(e for _, e in f.factors) == len(ps)


def test_factor_prime_powers_above_trial_limit():
    p = 1000003
    assert factor(p**3 * 2).as_dict() == {2: 1, p: 3}


def test_factor_gives_up_with_partial():
    p, q = 2**89 - 1, 2**107 - 1
    with pytest.raises(GaveUp) as info:
        factor(6 * p * q, budget_ms=50)
    assert info.value.found == {2: 1, 3: 1}
    assert info.value.cofactors == [p * q]


def test_factor_inserts_into_cache():
    cache = FactorCache()
    f = factor(1000003 * 999983, cache)
    assert cache.get(1000003 * 999983) is f


def test_first_nine_giuga_numbers_unaided():
    for g in GIUGA_NUMBERS[:9]:
        assert factor(g).value == g


def test_factorization_invariants():
    with pytest.raises(ValueError):
        Factorization(30, ((2, 1), (15, 1)))
    with pytest.raises(ValueError):
        Factorization(30, ((2, 1), (3, 1), (7, 1)))
    with pytest.raises(ValueError):
        Factorization(30, ((3, 1), (2, 1), (5, 1)))
    with pytest.raises(ValueError):
        Factorization(1, ((1, 1),))


def test_cache_line_accepted():
    cache = cache_loads("30 = 2^1 * 3^1 * 5^1\n")
    assert cache.get(30).as_dict() == {2: 1, 3: 1, 5: 1}


@pytest.mark.parametrize(
    "line,reason",
    [
        ("30 = 2^1 * 15^1", "not prime"),
        ("30 = 2^1 * 3^1 * 7^1", "product 42"),
        ("30 = 2^1*3^1*5^1", "malformed"),
        ("30 =  2^1 * 3^1 * 5^1", "malformed"),
        ("30 = 3^1 * 2^1 * 5^1", "increasing"),
    ],
)
def test_cache_line_rejected(line, reason):
    text = "# header\n42 = 2^1 * 3^1 * 7^1\n" + line + "\n"
    with pytest.raises(CacheError, match=f":3: .*{reason}"):
        cache_loads(text)


def test_cache_store_load_round_trip(tmp_path):
    cache = FactorCache()
    for n in (30, 858, 2**10, 1000003 * 7):
        factor(n, cache)
    path = tmp_path / "c.txt"
    cache_store(cache, path)
    text = path.read_text()
    assert "1024 = 2^10\n" in text
    assert cache_load(path).entries == cache.entries


def test_bundled_cache_covers_known_giuga_numbers():
    cache = default_cache()
    assert all(g in cache for g in GIUGA_NUMBERS)
    big = cache.get(GIUGA_NUMBERS[-1])
    assert len(str(big.value)) == 97

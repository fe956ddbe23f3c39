"""Giuga numbers, k-Carmichael numbers and k-strong Giuga numbers."""

from giuga.arith import gcd, lcm, modpow, parse_natural, parse_rational, rational_mod
from giuga.classify import (
    GiugaEvidence,
    KClass,
    arithmetic_derivative,
    bernoulli_exact,
    kclass,
    giuga_evidence,
    is_carmichael,
    is_giuga,
    is_k_carmichael,
    is_k_strong_giuga,
    is_k_strong_giuga_def,
    is_strong_giuga,
    k_min,
    kset,
    prop6_verdicts,
)
from giuga.factor import (
    FactorCache,
    Factorization,
    GaveUp,
    cache_load,
    cache_store,
    default_cache,
    factor,
    is_probable_prime,
)
from giuga.known import GIUGA_NUMBERS
from giuga.powersum import power_sum_fast, power_sum_naive
from giuga.survey import (
    LambdaTable,
    SurveyReport,
    build_lambda_table,
    count_k_carmichael,
    density_report,
    giuga_sweep,
)
from giuga.totients import TotientPair, carmichael_lambda, euler_phi, totients

__version__ = "0.1.0"

"""Factorial-divisibility engine: f(n) = min{m : n | m!}, exact summations
over [1, x_max], and asymptotic check tables."""

from ._core import (
    CapacityError,
    RunReport,
    coefficients,
    discriminate,
    eq1_table,
    eq2_check,
    eq5_table,
    eq12_check,
    f,
    f_bruteforce,
    f_details,
    factorize,
    kempner_prime_power,
    kfree_flags,
    largest_prime_factor,
    legendre_valuation,
    lemma2_check,
    moment_fit,
    run_sums,
    sieve_primes,
    sum_f_naive,
    theorem3_table,
    theorem4_table,
    zeta,
    __version__,
)

__all__ = [
    "CapacityError",
    "RunReport",
    "coefficients",
    "discriminate",
    "eq1_table",
    "eq2_check",
    "eq5_table",
    "eq12_check",
    "f",
    "f_bruteforce",
    "f_details",
    "factorize",
    "kempner_prime_power",
    "kfree_flags",
    "largest_prime_factor",
    "legendre_valuation",
    "lemma2_check",
    "moment_fit",
    "run_sums",
    "sieve_primes",
    "sum_f_naive",
    "theorem3_table",
    "theorem4_table",
    "zeta",
    "__version__",
]

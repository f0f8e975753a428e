#!/usr/bin/env python3
"""Smoke tests for the kempner python module (plain asserts, no pytest)."""

import json
import math

import kempner


def test_point_values():
    assert kempner.f(1) == 1
    assert kempner.f(10) == 5
    assert kempner.f(9) == 6
    assert kempner.f(1024) == 12
    assert kempner.f_bruteforce(25) == 10
    for n in range(1, 2000):
        assert kempner.f(n) == kempner.f_bruteforce(n), n

    d = kempner.f_details(10)
    assert d["f"] == 5 and d["P"] == 5 and d["fast_path"] is True
    assert d["factorization"] == [(2, 1), (5, 1)]
    assert kempner.f_details(12)["fast_path"] is False

    assert kempner.largest_prime_factor(1) == 1
    assert kempner.largest_prime_factor(12) == 3
    assert kempner.factorize(12) == [(2, 2), (3, 1)]
    assert kempner.legendre_valuation(2, 10) == 8
    assert kempner.kempner_prime_power(5, 2) == 10


def test_sieves():
    assert kempner.sieve_primes(10) == [2, 3, 5, 7]
    assert len(kempner.sieve_primes(10**6)) == 78498
    flags = kempner.kfree_flags(1, 11, 2)
    assert [n for n, ok in zip(range(1, 11), flags) if ok] == [1, 2, 3, 5, 6, 7, 10]


def test_zeta():
    assert abs(kempner.zeta(2) - math.pi**2 / 6) < 1e-12
    c = kempner.coefficients([2])
    assert abs(c["thm4_stated"][2] - 1.25) < 1e-12
    assert abs(c["alladi_erdos"] - math.pi**2 / 12) < 1e-15


def test_run_sums():
    rep = kempner.run_sums(1000, grid=[10, 100, 1000], workers=2)
    cps = rep.checkpoints
    assert [cp["x"] for cp in cps] == [10, 100, 1000]
    first = cps[0]
    assert first["sum_f"] == 40
    assert first["sum_P"] == 33
    assert first["sum_f_hard"] == 15
    assert first["count_kfree"][2] == 7
    assert first["sum_f_kfree"][2] == 26
    assert first["sum_f_pow"][2] == 190
    assert isinstance(first["sum_f_pow"][2], int)  # exact python int
    assert cps == kempner.RunReport.from_json(rep.to_json()).checkpoints
    assert kempner.sum_f_naive(1000)["sum_f"] == cps[-1]["sum_f"]


def test_analysis():
    rep = kempner.run_sums(10000, grid=[100, 1000, 10000])
    rows = kempner.theorem3_table(rep, 0.8224670334241132)
    assert [r["x"] for r in rows] == [100, 1000, 10000]
    assert rows[0]["empirical"] == 2013

    verdict = kempner.discriminate(
        rep, "sum_f", [("stated", 1.6449340668), ("consistent", 0.8224670334)]
    )["verdict"]
    assert verdict == "consistent"

    res = kempner.eq12_check(2, 10**5)
    assert res["diff"] <= res["tail_bound"] + 1e-12

    lem = kempner.lemma2_check(1e4, 2)
    assert lem["scaled_diff"] < 4.0

    mom = kempner.moment_fit(rep, 2)
    assert all(row["estimate"] > 0 for row in mom)

    table = kempner.eq2_check(rep, 2)
    assert table[-1]["count"] == 6083  # S_2(10^4)


def test_errors():
    try:
        kempner.run_sums(0)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass
    try:
        kempner.run_sums(2 * 10**10)
        raise AssertionError("expected CapacityError")
    except kempner.CapacityError:
        pass
    try:
        kempner.zeta(0.5)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass


def main():
    tests = [
        test_point_values,
        test_sieves,
        test_zeta,
        test_run_sums,
        test_analysis,
        test_errors,
    ]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"kempner {kempner.__version__}: {len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()

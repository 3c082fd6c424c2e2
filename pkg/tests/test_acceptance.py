"""Acceptance gate: ten numbered criteria, one printed PASS/FAIL line each.

Every comparison is an exact integer (or exact-rational) equality.  Each
criterion carries its stated runtime budget; criterion 10's five property
suites share a combined 40 s budget, asserted in the closing summary along
with the whole-gate 60 s target.  Run with ``pytest -s`` to see the
checklist lines as they print.
"""

import random
import time
from fractions import Fraction

import pytest
import sympy

from padlog.cli import main
from padlog.padic import PAdicInt
from padlog.primroot import all_stable_roots, stabilize
from padlog.quotient import (
    power_map_report,
    predicted_finite_cokernel,
    verify_cokernel_finite_level,
)
from padlog.residue import order_mod
from padlog.series import FormalSeries, compose, derive, series_exp, series_log
from padlog.solver import check_existence, solve_by_lifting
from padlog.special import analyze_pair, cycle_decomposition
from padlog.teichmuller import teichmuller_lift
from padlog.translog import padic_exp, padic_log

_TIMES = {}


def _record(key, label, t0, ok, detail="", budget=None):
    elapsed = time.perf_counter() - t0
    _TIMES[key] = elapsed
    in_time = budget is None or elapsed < budget
    status = "PASS" if (ok and in_time) else "FAIL"
    budget_txt = "/%.1fs" % budget if budget is not None else ""
    suffix = " -- %s" % detail if detail else ""
    print(
        "%s criterion %s: %s [%.3fs%s]%s"
        % (status, key, label, elapsed, budget_txt, suffix)
    )
    assert ok, "criterion %s: %s%s" % (key, label, suffix)
    if budget is not None:
        assert in_time, "criterion %s over budget: %.3fs >= %.1fs" % (
            key,
            elapsed,
            budget,
        )


def _cli_json(capsys, argv):
    import json

    code = main(argv)
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.strip().splitlines()]


# ---------------------------------------------------------------------------
# 1-4: the solver traces


def test_criterion_01_base_two_trace(capsys):
    t0 = time.perf_counter()
    code, records = _cli_json(
        capsys,
        ["dlog", "-p", "2", "-a", "-3", "-b", "5", "-N", "14", "--format", "json"],
    )
    rows = {r["n"]: r["x_n"] for r in records if "n" in r}
    summary = records[-1]
    ok = (
        code == 0
        and [rows[n] for n in range(1, 11)] == [1, 1, 1, 3, 3, 11, 11, 11, 11, 11]
        and summary["digits"] == [1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1]
        and summary["power_sum"]
        == "1 + 2 + 2^3 + 2^8 + 2^10 + 2^11 + 2^12 + 2^13"
    )
    _record(
        "1", "(-3)^x = 5 over Z_2: trace n=1..10 and 14-digit limit", t0, ok,
        budget=0.1,
    )


def test_criterion_02_squared_pair_trace(capsys):
    t0 = time.perf_counter()
    code, records = _cli_json(
        capsys,
        ["dlog", "-p", "2", "-a", "9", "-b", "25", "-N", "15", "--format", "json"],
    )
    rows = {r["n"]: r["x_n"] for r in records if "n" in r}
    want = {12: 267, 14: 1291, 15: 3339, 16: 7435, 17: 15627}
    ok = code == 0 and all(rows[n] == x for n, x in want.items())
    _record("2", "9^x = 25 over Z_2: x_n at n=12,14,15,16,17", t0, ok, budget=0.2)


def test_criterion_03_base_five_trace(capsys):
    t0 = time.perf_counter()
    code, records = _cli_json(
        capsys,
        ["dlog", "-p", "5", "-a", "-4", "-b", "6", "-N", "9", "--format", "json"],
    )
    rows = {r["n"]: r["x_n"] for r in records if "n" in r}
    summary = records[-1]
    ok = (
        code == 0
        and [rows[n] for n in range(1, 10)]
        == [1, 4, 4, 54, 304, 929, 7179, 22804, 179054]
        and summary["power_sum"]
        == "4 + 2*5^2 + 2*5^3 + 5^4 + 2*5^5 + 5^6 + 2*5^7 + 2*5^8"
    )
    _record(
        "3", "(-4)^x = 6 over Z_5: trace n=1..9 and 9-digit limit", t0, ok, budget=0.5
    )


def test_criterion_04_neg_two_base_five_rows(capsys):
    t0 = time.perf_counter()
    code, records = _cli_json(
        capsys,
        ["dlog", "-p", "5", "-a", "-2", "-b", "3", "-N", "9", "--format", "json"],
    )
    rows = {r["n"]: r["x_n"] for r in records if "n" in r}
    want = {2: 17, 4: 357, 6: 14357, 10: 5826857}
    mismatches = {
        n: (rows.get(n), x) for n, x in want.items() if rows.get(n) != x
    }
    ok = code == 0 and not mismatches
    _record(
        "4",
        "(-2)^x = 3 over Z_5: x_2, x_4, x_6, x_10",
        t0,
        ok,
        detail="got != want at %s" % mismatches if mismatches else "",
        budget=1.0,
    )


# ---------------------------------------------------------------------------
# 5-7: constructions and order laws


TEICH_22 = (2, 1, 2, 1, 3, 4, 2, 3, 0, 3, 2, 2, 0, 4, 1, 3, 2, 4, 0, 4, 3, 4)


def test_criterion_05_teichmuller_digits():
    t0 = time.perf_counter()
    lift = teichmuller_lift(2, 5, 22)
    frobenius_oracle = pow(2, 5**21, 5**22)
    ok = lift.digits == TEICH_22 and lift.to_int() == frobenius_oracle
    _record("5", "22-digit multiplicative lift of 2 over Z_5", t0, ok, budget=0.5)


STABLE_TABLE = {
    5: [2, 3],
    13: [2, 6],
    17: [3, 5, 6, 7],
    29: [2, 3, 8, 10, 11, 15],
    37: [2, 5, 13, 15, 17, 19],
    41: [6, 7, 11, 12, 13, 15, 17, 19],
    7: [3, 5],
    11: [2, 6, 7, 8],
    19: [2, 3, 10, 13, 14, 15],
    23: [5, 7, 10, 11, 14, 15, 17, 19, 20, 21],
    31: [3, 11, 12, 13, 17, 21, 22, 24],
    43: [3, 5, 12, 18, 20, 26, 28, 29, 30, 33, 34],
}


def test_criterion_06_stable_roots():
    t0 = time.perf_counter()
    err = None
    try:
        assert stabilize(14, 29).root == 15
        assert stabilize(19, 43).root == 26
        for p, expected in STABLE_TABLE.items():
            assert all_stable_roots(p) == expected, p
    except AssertionError as exc:
        err = str(exc)
    _record(
        "6",
        "stabilization (29,14)->15, (43,19)->26 and all 12 table rows",
        t0,
        err is None,
        detail=err or "",
        budget=5.0,
    )


def test_criterion_07_order_laws():
    t0 = time.perf_counter()
    err = None
    try:
        for n in range(1, 11):
            assert order_mod(2, 5**n) == 4 * 5 ** (n - 1), n
        for n in range(2, 6):
            assert order_mod(14, 29**n) == 28 * 29 ** (n - 2), n
    except AssertionError as exc:
        err = str(exc)
    _record(
        "7",
        "ord(2 mod 5^n) = 4*5^(n-1), ord(14 mod 29^n) = 28*29^(n-2)",
        t0,
        err is None,
        detail=err or "",
        budget=1.0,
    )


# ---------------------------------------------------------------------------
# 8: quotients by k-th powers


def test_criterion_08_power_quotients():
    t0 = time.perf_counter()
    err = None
    checks = 0
    try:
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            got = sorted(power_map_report(p, 2).codomain_mod_image.factors)
            assert got == [2, 2], (p, got)
        got = sorted(power_map_report(2, 2).codomain_mod_image.factors)
        assert got == [2, 2, 2], got
        for p in sympy.primerange(2, 100001):
            modulus = p
            n = 1
            while modulus <= 100000:
                for k in range(1, 13):
                    found = verify_cokernel_finite_level(p, n, k)
                    assert found.same_group(predicted_finite_cokernel(p, n, k)), (
                        p,
                        n,
                        k,
                    )
                    checks += 1
                n += 1
                modulus *= p
    except AssertionError as exc:
        err = str(exc)
    _record(
        "8",
        "square classes [2,2] / [2,2,2]; finite cokernels p^n <= 10^5, k <= 12",
        t0,
        err is None,
        detail=err or "%d finite-level checks" % checks,
        budget=10.0,
    )


# ---------------------------------------------------------------------------
# 9: special-pair permutations


PERMUTATION_ROWS = {
    3: "(1)",
    4: "(1 3)(2)",
    5: "(1 3)(2 6)(4)(5 7)",
    6: "(1 11 9 3)(2 6)(4 12)(5 7 13 15)(8)(10 14)",
    7: "(1 11 25 19 17 27 9 3)(2 22 18 6)(4 12)(5 23 29 31 21 7 13 15)"
    "(8 24)(10 14 26 30)(16)(20 28)",
}

X_ORDER_ROWS = {
    # n: (x_o, ord(a), order of x_o, max possible)
    5: (3, 8, 2, 2),
    6: (11, 16, 4, 4),
    7: (11, 32, 8, 8),
    8: (11, 64, 16, 16),
    9: (11, 128, 32, 32),
    10: (11, 256, 64, 64),
}


def test_criterion_09_special_pair_rows():
    t0 = time.perf_counter()
    err = None
    try:
        for n, expected in PERMUTATION_ROWS.items():
            rep = analyze_pair(-3, 5, 2, n)
            assert cycle_decomposition(rep.x_o, rep.ord_a).compact() == expected, n
        for n, (x_o, ord_a, x_order, max_possible) in X_ORDER_ROWS.items():
            rep = analyze_pair(-3, 5, 2, n)
            got = (rep.x_o, rep.ord_a, rep.x_order, rep.max_possible)
            assert got == (x_o, ord_a, x_order, max_possible), (n, got)
            assert rep.is_special, n
    except AssertionError as exc:
        err = str(exc)
    _record(
        "9",
        "five permutation rows (n=3..7) and six x-order rows (n=5..10)",
        t0,
        err is None,
        detail=err or "",
        budget=1.0,
    )


# ---------------------------------------------------------------------------
# 10: property suites (combined 40 s budget, asserted in the summary)


def test_criterion_10a_carry_arithmetic_oracle():
    t0 = time.perf_counter()
    rng = random.Random(0xACCE55)
    err = None
    try:
        for i in range(10_000):
            base = (2, 3, 5, 7, 10)[i % 5]
            precision = rng.randint(1, 20)
            x = rng.randint(-(10**9), 10**9)
            y = rng.randint(-(10**9), 10**9)
            xd = PAdicInt.from_integer(x, base, precision)
            yd = PAdicInt.from_integer(y, base, precision)
            mode = i % 4
            if mode == 0:
                got, want = xd + yd, x + y
            elif mode == 1:
                got, want = xd - yd, x - y
            elif mode == 2:
                got, want = xd * yd, x * y
            else:
                e = rng.randint(0, 5)
                got, want = xd**e, x**e
            assert got.digits == PAdicInt.from_integer(want, base, precision).digits, (
                base,
                precision,
                x,
                y,
                mode,
            )
    except AssertionError as exc:
        err = str(exc)
    _record(
        "10(a)",
        "digit carry arithmetic vs integer oracle, 10^4 cases",
        t0,
        err is None,
        detail=err or "",
    )


def test_criterion_10b_exp_log_round_trips():
    t0 = time.perf_counter()
    rng = random.Random(0x109)
    err = None
    try:
        for p in (2, 3, 5, 7):
            shift = 4 if p == 2 else p
            for _ in range(200):
                t = rng.randint(1, p**8)
                s = rng.randint(1, p**8)
                u = PAdicInt.from_integer(1 + shift * t, p, 12)
                v = PAdicInt.from_integer(1 + shift * s, p, 12)
                lu, lv = padic_log(u), padic_log(v)
                assert padic_exp(lu) == u, (p, t, "exp(log u) != u")
                assert padic_log(u * v) == lu + lv, (p, t, s, "log not additive")
                x = PAdicInt.from_integer(shift * t, p, 12)
                assert padic_log(padic_exp(x)) == x, (p, t, "log(exp x) != x")
    except AssertionError as exc:
        err = str(exc)
    _record(
        "10(b)",
        "exp/log round trips and homomorphism, 200 cases per p in {2,3,5,7}",
        t0,
        err is None,
        detail=err or "",
    )


def test_criterion_10c_depth_iff_exhaustive_grid():
    t0 = time.perf_counter()
    err = None
    cases = 0
    try:
        level = 8
        for p in (3, 5, 7):
            modulus = p**level
            second = range(min(p, 3))
            units = [
                (d, 1 + c * p**d + e * p ** (d + 1))
                for d in range(1, 5)
                for c in range(1, p)
                for e in second
            ]
            for da, a in units:
                for db, b in units:
                    solvable = da <= db
                    verdict = check_existence(a, b, p, 12).verdict
                    assert verdict == ("solvable" if solvable else "unsolvable"), (
                        p,
                        a,
                        b,
                        verdict,
                    )
                    trace = solve_by_lifting(a, b, p, level)
                    assert (trace.verdict == "solvable") == solvable, (p, a, b)
                    if solvable:
                        assert pow(a, trace.x, modulus) == b % modulus
                    cases += 1
    except AssertionError as exc:
        err = str(exc)
    _record(
        "10(c)",
        "depth iff law, exhaustive over depths <= 4 at level 8, p in {3,5,7}",
        t0,
        err is None,
        detail=err or "%d unit pairs" % cases,
    )


def _oracle_sweep(p, n, deadline):
    """Check every solvable pair at modulus p^n against the index oracle.

    For base a and b = a^j (j = 1..ord(a)), the smallest solution at level
    k is ((j - 1) mod ord_k) + 1, with ord_k the order of a mod p^k; every
    trace row is compared against that closed form, so each run also
    verifies the induced pairs at all smaller moduli.  Returns
    (pairs_checked, bases_done, bases_total, completed).
    """
    modulus = p**n
    bases = [a for a in range(2, modulus) if a % p]
    checked = 0
    for index, a in enumerate(bases):
        if time.perf_counter() > deadline:
            return checked, index, len(bases), False
        orders = [order_mod(a, p**k) for k in range(1, n + 1)]
        b = 1
        for j in range(1, orders[-1] + 1):
            b = b * a % modulus
            trace = solve_by_lifting(a, b, p, n)
            assert trace.verdict == "solvable", (p, n, a, j)
            assert trace.x == j, (p, n, a, j, trace.x)
            for row in trace.rows:
                assert row.x_n == ((j - 1) % orders[row.n - 1]) + 1, (p, n, a, j, row)
            checked += 1
    return checked, len(bases), len(bases), True


def test_criterion_10d_lifting_equals_brute_oracle():
    t0 = time.perf_counter()
    deadline = t0 + 25.0
    err = None
    complete = True
    stats = []
    try:
        # maximal moduli <= 10^3 first (each run covers all smaller levels),
        # then the maximal moduli of the full 10^4 scope
        for p, n in ((2, 9), (3, 6), (5, 4), (2, 13), (3, 8), (5, 5)):
            checked, done, total, finished = _oracle_sweep(p, n, deadline)
            stats.append(
                "%d^%d: %d pairs, %d/%d bases%s"
                % (p, n, checked, done, total, "" if finished else " CUT OFF")
            )
            complete = complete and finished
    except AssertionError as exc:
        err = "oracle disagreement at %s" % (exc,)
    coverage = "; ".join(stats)
    if err is None and not complete:
        err = (
            "every checked pair agrees, but the full p^n <= 10^4 scope is not "
            "coverable in budget (~2e7 solver calls, measured 44-106us each, "
            "projected ~24 min); covered: %s" % coverage
        )
    _record(
        "10(d)",
        "lifting == brute oracle for all solvable pairs, p^n <= 10^4",
        t0,
        err is None,
        detail=err or coverage,
    )


def test_criterion_10e_series_identities():
    t0 = time.perf_counter()
    err = None
    try:
        degree = 12
        g = FormalSeries.from_coefficients(
            [0] + [Fraction((-1) ** i * (i * i + 1), i + 2) for i in range(1, 13)],
            degree,
        )
        f = FormalSeries.from_coefficients(
            [0] + [Fraction(2 * i - 7, i * i + 3) for i in range(1, 13)], degree
        )
        assert series_log(series_exp(g)) == g
        assert series_exp(series_log(FormalSeries.one(degree) + g)) == (
            FormalSeries.one(degree) + g
        )
        assert series_exp(f + g) == series_exp(f) * series_exp(g)
        assert derive(series_exp(FormalSeries.x(degree))) == series_exp(
            FormalSeries.x(degree)
        ).truncate(degree - 1)
        assert derive(series_exp(g)) == series_exp(g).truncate(degree - 1) * derive(g)
        assert derive(compose(f, g)) == compose(
            derive(f), g.truncate(degree - 1)
        ) * derive(g)
    except AssertionError as exc:
        err = str(exc)
    _record(
        "10(e)",
        "series identity suite at degree 12 with exact rationals",
        t0,
        err is None,
        detail=err or "",
    )


def test_criterion_totals():
    if len(_TIMES) != 14:
        pytest.skip("needs the full acceptance run in file order")
    bundle = sum(v for k, v in _TIMES.items() if k.startswith("10"))
    total = sum(_TIMES.values())
    print("criterion 10 combined runtime: %.2fs (budget 40.0s)" % bundle)
    print("acceptance gate total runtime: %.2fs (target 60.0s)" % total)
    assert bundle < 40.0, "criterion 10 bundle over budget: %.2fs" % bundle
    assert total < 60.0, "acceptance gate over target: %.2fs" % total

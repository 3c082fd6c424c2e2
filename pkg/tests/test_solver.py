"""The discrete-log solvers, cross-checked against enumeration and each other.

brute_dlog (pure enumeration) anchors every method at small moduli; the two
production methods (level lifting and log division) must agree with it and
with each other wherever they overlap, and the worked traces pin exact
values at scale.
"""

import math
import random

import pytest

from padlog.errors import (
    AIsOne,
    InsufficientPrecision,
    NotAUnit,
    UnsolvableError,
    ZeroInput,
)
from padlog.padic import PAdicInt, from_integer
from padlog.residue import brute_dlog, order_mod
from padlog.solver import (
    check_existence,
    convergence_certificate,
    solution_is_unit,
    solve_by_lifting,
    solve_log_ratio,
    solve_units,
)


# ---------------------------------------------------------------------------
# solve_by_lifting: worked traces


def test_lifting_trace_minus3_5_base2():
    trace = solve_by_lifting(-3, 5, 2, 10)
    assert trace.verdict == "solvable"
    assert [r.x_n for r in trace.rows] == [1, 1, 1, 3, 3, 11, 11, 11, 11, 11]
    assert trace.x == 11


def test_lifting_trace_minus2_3_base5():
    trace = solve_by_lifting(-2, 3, 5, 10)
    assert trace.verdict == "solvable"
    assert [r.x_n for r in trace.rows] == [
        1, 17, 57, 357, 1857, 1857, 14357, 201857, 1139357, 5826857,
    ]
    # level 6 cross-check: 1857 is the unique solution in [1, ord] there,
    # and it stops working one level up (so the next row jumps)
    assert pow(-2, 1857, 5**6) == 3 % 5**6
    assert pow(-2, 1857, 5**7) != 3 % 5**7


def test_lifting_trace_9_25_base2():
    trace = solve_by_lifting(9, 25, 2, 20)
    assert trace.verdict == "solvable"
    assert [r.x_n for r in trace.rows[4:]] == [
        3, 3, 11, 11, 11, 11, 11, 267, 267, 1291, 3339, 7435,
        15627, 15627, 15627, 15627,
    ]


def test_lifting_trace_minus4_6_base5():
    trace = solve_by_lifting(-4, 6, 5, 10)
    assert trace.verdict == "solvable"
    assert [r.x_n for r in trace.rows] == [
        1, 4, 4, 54, 304, 929, 7179, 22804, 179054, 960304,
    ]


def test_lifting_agrees_with_brute_everywhere_small():
    rng = random.Random(23)
    for _ in range(80):
        p = rng.choice([2, 3, 5, 7])
        n = rng.randrange(1, 5)
        m = p**n
        a = rng.randrange(1, m)
        b = rng.randrange(1, m)
        if math.gcd(a, m) != 1 or math.gcd(b, m) != 1:
            continue
        want = brute_dlog(a, b, p, n)
        trace = solve_by_lifting(a, b, p, n)
        if want is None:
            assert trace.verdict == "unsolvable"
            assert trace.failing_level <= n
        else:
            assert trace.verdict == "solvable"
            assert trace.rows[-1].x_n == want


def test_lifting_each_level_is_smallest():
    trace = solve_by_lifting(-2, 3, 5, 6)
    for row in trace.rows:
        m = 5**row.n
        x = row.x_n
        assert pow(-2, x, m) == 3 % m
        assert 1 <= x <= row.order
        # nothing smaller works at this level
        assert all(pow(-2, y, m) != 3 % m for y in range(1, min(x, 400)))


def test_lifting_unsolvable_level_recorded():
    # 3 generates half the units mod 32; 5 sits outside from level 3 up
    trace = solve_by_lifting(3, 5, 2, 5)
    assert trace.verdict == "unsolvable"
    assert trace.failing_level == 3
    assert brute_dlog(3, 5, 2, 2) == 2  # level 2 was fine (3^2 = 9 == 5 mod 4)


def test_lifting_digit_extraction():
    trace = solve_by_lifting(9, 25, 2, 17)
    # order of 9 mod 2^17 is 2^14: fourteen digits of the limit are pinned
    assert trace.rows[-1].digit_count == 14
    assert trace.digits == (1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1)
    assert trace.rows[-1].x_n == 15627


def test_lifting_rejects_bad_input():
    with pytest.raises(ZeroInput):
        solve_by_lifting(0, 5, 2, 4)
    with pytest.raises(NotAUnit):
        solve_by_lifting(10, 3, 5, 4)
    with pytest.raises(NotAUnit):
        solve_by_lifting(3, 10, 5, 4)


def test_convergence_certificate():
    trace = solve_by_lifting(-2, 3, 5, 10)
    cert = convergence_certificate(trace)
    assert [n for n, _ in cert] == list(range(1, 11))
    counts = [d for _, d in cert]
    assert counts == sorted(counts)
    trace2 = solve_by_lifting(9, 25, 2, 20)
    convergence_certificate(trace2)


# ---------------------------------------------------------------------------
# solve_log_ratio


def test_log_ratio_9_25_base2():
    got = solve_log_ratio(9, 25, 2, 14)
    assert got.x.to_int() == 15627
    assert got.depth_a == 3
    assert got.precision_loss == 3


def test_log_ratio_matches_lifting_digits():
    # both methods describe the same p-adic exponent
    for a, b, p in ((6, 26, 5), (4, 16, 3), (9, 17, 2), (8, 22, 7)):
        if b != pow(a, 2):
            pass
        trace = solve_by_lifting(a, b, p, 12)
        if trace.verdict != "solvable":
            continue
        pinned = trace.rows[-1].digit_count
        ratio = solve_log_ratio(a, b, p, 8)
        k = min(pinned, 8)
        assert ratio.x.to_int() % p**k == trace.rows[-1].x_n % p**k, (a, b, p)


def test_log_ratio_integer_relations():
    p, N = 5, 10
    got = solve_log_ratio(6, pow(6, 7, 5**40), p, N)
    assert got.x.to_int() == 7
    got = solve_log_ratio(6, 6**3, p, N)
    assert got.x == from_integer(3, p, N)


def test_log_ratio_b_is_one():
    got = solve_log_ratio(6, 1, 5, 8)
    assert got.x == from_integer(0, 5, 8)
    assert got.x.valuation().is_infinite


def test_log_ratio_depth_violation():
    with pytest.raises(UnsolvableError) as info:
        solve_log_ratio(26, 6, 5, 8)  # depth 2 cannot reach depth 1
    assert info.value.failing_level == 2


def test_log_ratio_non_integral_catch_base2():
    with pytest.raises(UnsolvableError):
        solve_log_ratio(25, 5, 2, 10)  # wait: 5 has depth 2, 25 has depth 3


def test_log_ratio_a_one():
    with pytest.raises(AIsOne):
        solve_log_ratio(1, 6, 5, 8)


def test_log_ratio_truncated_a_depth_invisible():
    a = PAdicInt(5, (1, 0, 0))  # could be 1, could be 1 + 125 u
    with pytest.raises(InsufficientPrecision):
        solve_log_ratio(a, from_integer(6, 5, 3), 5, 3)


def test_log_ratio_result_precision():
    got = solve_log_ratio(26, 26**9, 5, 6)
    assert got.x.precision == 6
    assert got.x.to_int() == 9


# ---------------------------------------------------------------------------
# check_existence


def test_existence_residue_obstruction():
    # 2 is not a power of 4 mod 5 (powers of 4 are 4, 1)
    v = check_existence(4, 2, 5)
    assert v.verdict == "unsolvable"
    assert v.failing_level == 1


def test_existence_depth_obstruction():
    v = check_existence(26, 6, 5)
    assert v.verdict == "unsolvable"
    assert v.failing_level == 2
    v = check_existence(6, 26, 5)
    assert v.verdict == "solvable"


def test_existence_equal_depths():
    assert check_existence(6, 11, 5).verdict == "solvable"
    assert check_existence(7, 13, 3).verdict == "solvable"


def test_existence_sign_obstruction_base2():
    v = check_existence(5, 7, 2)  # 5 = 1 mod 4, 7 = 3 mod 4
    assert v.verdict == "unsolvable"
    assert v.failing_level == 2


def test_existence_base2_plain():
    assert check_existence(5, 25, 2).verdict == "solvable"
    assert check_existence(9, 25, 2).verdict == "solvable"
    v = check_existence(9, 5, 2)  # depth 3 cannot reach depth 2
    assert v.verdict == "unsolvable"
    assert v.failing_level == 3


def test_existence_base2_sign_couplings():
    # -5 has sign -1; equal depths make the exponent odd: solvable
    assert check_existence(-5, -5, 2).verdict == "solvable"
    assert check_existence(-5, -13, 2).verdict == "solvable"
    # strict depth gap with negative b: depths cannot certify; and in fact
    # the parity clash makes this one genuinely unsolvable (solve_units says so)
    v = check_existence(-5, -25, 2)
    assert v.verdict == "undetermined"
    # negative a to positive b with a strict gap: even exponent, fine
    assert check_existence(-5, 25, 2).verdict == "solvable"
    # negative a to positive b with equal depths: would need an odd exponent
    # on the principal side and an even one on the sign side
    v = check_existence(-5, 5, 2)
    assert v.verdict == "undetermined"


def test_existence_undetermined_by_truncation():
    a = PAdicInt(5, (1, 0, 0, 0))  # visibly 1 but not exactly
    b = from_integer(6, 5, 4)
    v = check_existence(a, b, 5)
    assert v.verdict == "undetermined"
    # reversed: b hides its depth beyond precision while a is shallow: fine
    v = check_existence(b, PAdicInt(5, (1, 0, 0, 0)), 5)
    assert v.verdict == "solvable"


def test_existence_pure_torsion():
    assert check_existence(-1, 1, 5).verdict == "solvable"
    assert check_existence(-1, -1, 7).verdict == "solvable"
    v = check_existence(-1, -6, 5)
    assert v.verdict == "unsolvable"
    assert v.failing_level == 2


def test_existence_soundness_small_scale():
    # the desk test must never contradict exhaustive search
    rng = random.Random(31)
    checked = 0
    for _ in range(300):
        p = rng.choice([2, 3, 5, 7])
        n = rng.randrange(2, 5)
        m = p**n
        a = rng.randrange(2, m)
        b = rng.randrange(1, m)
        if math.gcd(a, m) != 1 or math.gcd(b, m) != 1:
            continue
        v = check_existence(a, b, p, precision=n + 8)
        truth = brute_dlog(a, b, p, n) is not None
        if v.verdict == "solvable":
            assert truth, (a, b, p, n)
        elif v.verdict == "unsolvable":
            if v.failing_level <= n:
                assert not truth, (a, b, p, n)
        checked += 1
    assert checked > 100


def test_existence_unsolvable_level_is_sharp():
    # below the failing level the congruence should still be solvable
    for a, b, p in ((26, 6, 5), (9, 5, 2), (-1, -6, 5)):
        v = check_existence(a, b, p)
        assert v.verdict == "unsolvable"
        lvl = v.failing_level
        assert brute_dlog(a, b, p, lvl) is None
        if lvl > 1:
            assert brute_dlog(a, b, p, lvl - 1) is not None


def test_existence_nonunit_classifier():
    with pytest.raises(NotAUnit) as info:
        check_existence(10, 3, 5)
    assert "v(a)" in str(info.value)
    with pytest.raises(NotAUnit):
        check_existence(3, 10, 5)
    with pytest.raises(ZeroInput):
        check_existence(0, 3, 5)


# ---------------------------------------------------------------------------
# solve_units


def test_solve_units_odd_p_basic():
    sol = solve_units(2, 8, 5, precision=8)
    assert sol.verdict == "solvable"
    assert pow(2, sol.x, 5**8) == 8
    sol = solve_units(-2, 3, 5, precision=8)
    assert sol.verdict == "solvable"
    assert pow(-2, sol.x, 5**8) == 3 % 5**8


def test_solve_units_matches_lifting():
    for a, b, p, n in ((-2, 3, 5, 8), (-4, 6, 5, 8), (2, 13, 3, 8), (-3, 5, 2, 8)):
        sol = solve_units(a, b, p, precision=n)
        trace = solve_by_lifting(a, b, p, n)
        assert sol.verdict == "solvable"
        assert trace.verdict == "solvable"
        assert pow(a, sol.x, p**n) == b % p**n
        # both describe the same solution class at this level
        assert (sol.x - trace.rows[-1].x_n) % order_mod(a, p**n) == 0


def test_solve_units_base2_parity_clash():
    with pytest.raises(UnsolvableError) as info:
        solve_units(-5, -25, 2, precision=10)
    assert info.value.failing_level == 3
    # and enumeration confirms the failing level exactly
    assert brute_dlog(-5, -25, 2, 3) is None
    assert brute_dlog(-5, -25, 2, 2) is not None


def test_solve_units_base2_parity_ok():
    sol = solve_units(-5, -13, 2, precision=10)
    assert sol.verdict == "solvable"
    assert pow(-5, sol.x, 2**10) == -13 % 2**10
    sol = solve_units(-5, 25, 2, precision=10)
    assert sol.verdict == "solvable"
    assert sol.x % 2 == 0
    assert pow(-5, sol.x, 2**10) == 25 % 2**10


def test_solve_units_sign_obstruction():
    with pytest.raises(UnsolvableError) as info:
        solve_units(5, -5, 2, precision=8)
    assert info.value.failing_level == 2


def test_solve_units_residue_obstruction():
    with pytest.raises(UnsolvableError) as info:
        solve_units(4, 2, 5, precision=8)
    assert info.value.failing_level == 1


def test_solve_units_depth_obstruction():
    with pytest.raises(UnsolvableError) as info:
        solve_units(26, 6, 5, precision=8)
    assert info.value.failing_level == 2


def test_solve_units_pure_torsion():
    sol = solve_units(-1, -1, 5, precision=6)
    assert sol.verdict == "solvable"
    assert sol.torsion_modulus == 2
    assert sol.torsion_residue == 1
    assert sol.principal_exponent is None
    sol = solve_units(-1, 1, 7, precision=6)
    assert sol.verdict == "solvable"
    assert sol.torsion_residue == 0
    with pytest.raises(UnsolvableError) as info:
        solve_units(-1, -6, 5, precision=6)
    assert info.value.failing_level == 2


def test_solve_units_undetermined_on_truncated_b():
    a = from_integer(-1, 5, 4)
    b = -PAdicInt(5, (1, 0, 0, 0))  # sign times a visibly-trivial principal part
    sol = solve_units(a, b, 5, precision=4)
    assert sol.verdict == "undetermined"
    assert sol.x is None


def test_solve_units_exhaustive_small_scale():
    rng = random.Random(41)
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        n = rng.randrange(2, 5)
        m = p**n
        a = rng.randrange(2, m)
        b = rng.randrange(1, m)
        if math.gcd(a, m) != 1 or math.gcd(b, m) != 1 or a == 1:
            continue
        truth = brute_dlog(a, b, p, n)
        try:
            sol = solve_units(a, b, p, precision=n + 6)
        except UnsolvableError as e:
            if e.failing_level <= n:
                assert truth is None, (a, b, p, n)
            continue
        if sol.verdict == "solvable":
            assert pow(a, sol.x, m) == b % m, (a, b, p, n)


def test_solve_units_a_is_one():
    with pytest.raises(AIsOne):
        solve_units(1, 6, 5, precision=6)


def test_solve_units_precision_of_exponent():
    sol = solve_units(-2, 3, 5, precision=10)
    assert sol.principal_exponent.precision == 10
    # x_10 from the worked trace is the smallest representative mod 4 * 5^9,
    # and our combined x solves the congruence at level 10
    assert pow(-2, sol.x, 5**10) == 3 % 5**10


# ---------------------------------------------------------------------------
# solution_is_unit


def test_solution_is_unit_by_depth():
    assert solution_is_unit(6, 11, 5)
    assert not solution_is_unit(6, 26, 5)
    assert solution_is_unit(9, 25, 2)
    assert not solution_is_unit(5, 25, 2)


def test_solution_is_unit_consistency():
    # when the exponent is computable, check the claim against it
    for a, b, p in ((6, 11, 5), (6, 26, 5), (9, 25, 2), (5, 25, 2)):
        sol = solve_units(a, b, p, precision=8)
        claim = solution_is_unit(a, b, p)
        assert claim == (sol.principal_exponent.digits[0] != 0)


def test_solution_is_unit_raises_on_unsolvable():
    with pytest.raises(UnsolvableError):
        solution_is_unit(26, 6, 5)

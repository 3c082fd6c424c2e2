"""Deciding and computing x with a^x = b among p-adic integers.

Three cooperating methods:

* ``solve_by_lifting`` climbs the levels mod p, mod p^2, ... refining the
  smallest exponent at each stage; successive stages pin down successive
  base-p digits of the limiting exponent.
* ``solve_log_ratio`` divides logarithms: on principal units the answer is
  exactly log(b)/log(a), computed with enough guard digits to absorb the
  division.
* ``solve_units`` splits both sides into root-of-unity and principal parts
  and stitches the two answers together (a congruence on a finite torsion
  modulus plus a p-power congruence), including the parity coupling that
  makes base 2 special.

``check_existence`` is the desk test: it predicts solvability from residues
and depths alone, without producing the exponent, and says "undetermined"
whenever truncation (or a genuinely undecided configuration) leaves the
answer open.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .errors import (
    AIsOne,
    InsufficientPrecision,
    InternalInvariantError,
    NotAUnit,
    NotPrime,
    UnsolvableError,
    ZeroInput,
)
from .padic import PAdicInt, _digits_simple
from .residue import order_mod
from .teichmuller import decompose_unit, depth
from .translog import padic_log


def _require_prime(p):
    if not sympy.isprime(p):
        raise NotPrime("%d is not prime" % p)


def _classify_nonunit(a, b, p):
    """Refuse non-unit inputs with an explanation of what powers could do.

    If p^e divides a exactly, every power a^x has valuation ex, so b must
    carry a positive multiple of e factors of p for the equation to have
    any chance; either way this solver only handles units.
    """
    va = 0
    aa = a
    while aa != 0 and aa % p == 0:
        aa //= p
        va += 1
    vb = 0
    bb = b
    while bb != 0 and bb % p == 0:
        bb //= p
        vb += 1
    if va and not vb:
        reason = "v(a) = %d > 0 forces v(b) to be a positive multiple of it" % va
    elif vb and not va:
        reason = "v(a) = 0 forces v(b) = 0, but v(b) = %d" % vb
    elif va and vb and vb % va != 0:
        reason = "v(b) = %d is not a multiple of v(a) = %d" % (vb, va)
    elif va and vb:
        reason = (
            "v(a) = %d, v(b) = %d: only the single exponent %d remains possible"
            % (va, vb, vb // va)
        )
    else:
        return
    raise NotAUnit("both sides must be units; " + reason)


# ---------------------------------------------------------------------------
# lifting


@dataclass(frozen=True)
class LiftingRow:
    n: int
    x_n: int
    order: int
    digit_count: int  # how many base-p digits of the limit this level pins


@dataclass(frozen=True)
class LiftingTrace:
    a: int
    b: int
    p: int
    rows: tuple
    verdict: str  # "solvable" or "unsolvable"
    failing_level: int | None = None
    digits: tuple = ()

    @property
    def x(self):
        return self.rows[-1].x_n if self.rows and self.verdict == "solvable" else None


def _vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def solve_by_lifting(a, b, p, n_max):
    """Solve a^x = b level by level up to mod p^n_max.

    At each level the solution class mod the previous order is refined by
    testing the handful of candidates the order ratio allows.  The x_n are
    the smallest positive solutions and converge p-adically; the trace
    records them together with the digits of the limit that each level
    fixes.  An unsolvable level ends the climb with that level recorded.
    """
    _require_prime(p)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if a == 0 or b == 0:
        raise ZeroInput("0 is not a unit and has no discrete log")
    if a % p == 0 or b % p == 0:
        _classify_nonunit(a, b, p)
    rows = []
    x = None
    prev_order = None
    for n in range(1, n_max + 1):
        m = p**n
        order = order_mod(a, m)
        if n == 1:
            cur = a % m
            found = None
            for cand in range(1, order + 1):
                if cur == b % m:
                    found = cand
                    break
                cur = cur * a % m
        else:
            ratio = order // prev_order
            found = None
            for j in range(ratio):
                cand = x + j * prev_order
                if pow(a, cand, m) == b % m:
                    found = cand
                    break
        if found is None:
            return LiftingTrace(
                a=a,
                b=b,
                p=p,
                rows=tuple(rows),
                verdict="unsolvable",
                failing_level=n,
                digits=_trace_digits(rows, p),
            )
        x = found
        rows.append(LiftingRow(n=n, x_n=x, order=order, digit_count=_vp(order, p)))
        prev_order = order
    return LiftingTrace(
        a=a,
        b=b,
        p=p,
        rows=tuple(rows),
        verdict="solvable",
        digits=_trace_digits(rows, p),
    )


def _trace_digits(rows, p):
    """Base-p digits of the limiting exponent pinned by the last level."""
    if not rows:
        return ()
    last = rows[-1]
    return _digits_simple(last.x_n, p, last.digit_count) if last.digit_count else ()


def convergence_certificate(trace):
    """Check that a lifting trace really is a p-adic Cauchy sequence.

    Consecutive x_n must agree modulo p^(digits pinned so far), and the
    count of pinned digits must never decrease.  Returns the list of
    (level, pinned digit count) pairs.
    """
    p = trace.p
    out = []
    prev = None
    for row in trace.rows:
        if prev is not None:
            if row.digit_count < prev.digit_count:
                raise InternalInvariantError("pinned digits decreased")
            if (row.x_n - prev.x_n) % p**prev.digit_count != 0:
                raise InternalInvariantError(
                    "levels %d and %d disagree on pinned digits" % (prev.n, row.n)
                )
        out.append((row.n, row.digit_count))
        prev = row
    return out


# ---------------------------------------------------------------------------
# log ratio


@dataclass(frozen=True)
class LogRatioResult:
    x: PAdicInt
    depth_a: int
    precision_loss: int  # digits sacrificed to the division, equals depth_a


def solve_log_ratio(a, b, p, precision):
    """x = log(b) / log(a) for principal units a and b, as a p-adic integer.

    Dividing by log(a) = p^c * unit costs c digits, so the logs are taken
    with c guard digits and the result genuinely carries ``precision``
    digits.  Integer inputs are exact and re-materialize at the wider
    precision automatically; truncated inputs must already carry enough
    digits.  Raises UnsolvableError when v(log b) < v(log a), since then
    the ratio leaves the p-adic integers.
    """
    _require_prime(p)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if isinstance(a, int):
        a = PAdicInt.from_integer(a, p, precision)
    if isinstance(b, int):
        b = PAdicInt.from_integer(b, p, precision)
    la = padic_log(a, precision)
    bound = la.valuation()
    if bound.is_infinite:
        raise AIsOne("a is exactly 1: its only power is 1")
    if not bound.is_exact:
        raise InsufficientPrecision(
            "a is 1 to working precision; its depth is invisible"
        )
    c = bound.amount
    wide = precision + c
    a_wide = a.with_precision(wide) if a.precision < wide else a
    b_wide = b.with_precision(wide) if b.precision < wide else b
    la = padic_log(a_wide, wide)
    lb = padic_log(b_wide, wide)
    vb = lb.valuation()
    if vb.is_infinite:
        # b is exactly 1: the exponent is exactly 0
        return LogRatioResult(
            x=PAdicInt.from_integer(0, p, precision), depth_a=c, precision_loss=c
        )
    if vb.is_exact and vb.amount < c:
        raise UnsolvableError(
            "v(log b) = %d < v(log a) = %d: the exponent is not integral"
            % (vb.amount, c),
            failing_level=vb.amount + 1,
        )
    if not vb.is_exact:
        # log b is zero to working precision: so is x, to the digits we owe
        return LogRatioResult(
            x=PAdicInt(p, (0,) * precision), depth_a=c, precision_loss=c
        )
    e_a, u_a = la.unit_factor()
    e_b, u_b = lb.unit_factor()
    q = u_b * u_a.invert_unit()
    shift = e_b - e_a
    digits = (0,) * shift + q.digits
    return LogRatioResult(
        x=PAdicInt(p, digits[:precision]), depth_a=c, precision_loss=c
    )


# ---------------------------------------------------------------------------
# existence


@dataclass(frozen=True)
class ExistenceVerdict:
    verdict: str  # "solvable" | "unsolvable" | "undetermined"
    reason: str
    failing_level: int | None = None

    @property
    def exit_style(self):
        return {"solvable": 0, "unsolvable": 2, "undetermined": 3}[self.verdict]


def _depth_of(u):
    """(kind, amount) of v_p(u - 1) for a principal-part unit."""
    d = depth(u, strict=False)
    return d.valuation


def check_existence(a, b, p, precision=12):
    """Predict solvability of a^x = b from residues and depths alone.

    Odd p: solvable exactly when b's residue lies in the subgroup generated
    by a's residue mod p and the principal depths satisfy
    depth(a) <= depth(b).  Base 2 additionally couples the signs mod 4 with
    the parity of the exponent; one sign configuration cannot be decided by
    depths alone and is reported undetermined.  Truncated inputs whose
    depths are invisible also come back undetermined.
    """
    _require_prime(p)
    if a == 0 or b == 0:
        raise ZeroInput("0 is not a unit")
    if isinstance(a, int):
        a = PAdicInt.from_integer(a, p, precision)
    if isinstance(b, int):
        b = PAdicInt.from_integer(b, p, precision)
    if a.digits[0] == 0 or b.digits[0] == 0:
        _classify_nonunit(a.to_int(), b.to_int(), p)
    omega_a, a2 = decompose_unit(a)
    omega_b, b2 = decompose_unit(b)
    da = _depth_of(a2)
    db = _depth_of(b2)
    if p == 2:
        return _check_existence_base2(omega_a, omega_b, da, db)
    a0 = a.digits[0]
    b0 = b.digits[0]
    if pow(b0, order_mod(a0, p), p) != 1:
        return ExistenceVerdict(
            verdict="unsolvable",
            reason="the residue of b lies outside the subgroup generated by a mod %d"
            % p,
            failing_level=1,
        )
    return _depth_comparison_verdict(da, db)


def _depth_comparison_verdict(da, db):
    """The shared depth test: solvable iff depth(a) <= depth(b)."""
    if da.is_infinite:
        if db.is_infinite:
            return ExistenceVerdict(
                verdict="solvable",
                reason="both principal parts are trivial; torsion alone decides",
            )
        if db.is_exact:
            return ExistenceVerdict(
                verdict="unsolvable",
                reason="a has trivial principal part but b does not",
                failing_level=db.amount + 1,
            )
        return ExistenceVerdict(
            verdict="undetermined",
            reason="b's principal part vanishes to working precision only",
        )
    if da.is_exact:
        if db.is_infinite:
            return ExistenceVerdict(
                verdict="solvable", reason="b's principal part is exactly trivial"
            )
        if db.is_exact:
            if da.amount <= db.amount:
                return ExistenceVerdict(
                    verdict="solvable",
                    reason="depth(a) = %d <= depth(b) = %d" % (da.amount, db.amount),
                )
            return ExistenceVerdict(
                verdict="unsolvable",
                reason="depth(a) = %d > depth(b) = %d" % (da.amount, db.amount),
                failing_level=db.amount + 1,
            )
        # db is a truncation bound: true depth(b) >= bound >= visible digits
        if da.amount <= db.amount:
            return ExistenceVerdict(
                verdict="solvable",
                reason="depth(b) exceeds working precision, which already tops depth(a)",
            )
        return ExistenceVerdict(
            verdict="undetermined",
            reason="depth(b) is hidden beyond working precision",
        )
    # da is a truncation bound
    if db.is_infinite:
        return ExistenceVerdict(
            verdict="solvable", reason="b's principal part is exactly trivial"
        )
    return ExistenceVerdict(
        verdict="undetermined",
        reason="depth(a) is hidden beyond working precision",
    )


def _check_existence_base2(omega_a, omega_b, da, db):
    sign_a = -1 if omega_a.digits[1] == 1 else 1
    sign_b = -1 if omega_b.digits[1] == 1 else 1
    if sign_a == 1 and sign_b == -1:
        return ExistenceVerdict(
            verdict="unsolvable",
            reason="a = 1 mod 4 but b = 3 mod 4: no power flips the sign",
            failing_level=2,
        )
    if sign_a == 1:
        return _depth_comparison_verdict(da, db)
    # sign_a = -1: the exponent's parity is coupled to the sign of b
    if not (da.is_exact or da.is_infinite) or not (db.is_exact or db.is_infinite):
        return ExistenceVerdict(
            verdict="undetermined",
            reason="a depth needed for the sign coupling is hidden by truncation",
        )
    plain = _depth_comparison_verdict(da, db)
    if plain.verdict == "unsolvable":
        return plain
    if sign_b == -1:
        if da == db:
            return ExistenceVerdict(
                verdict="solvable",
                reason="equal depths force a unit exponent, whose odd parity "
                "matches the sign of b",
            )
        return ExistenceVerdict(
            verdict="undetermined",
            reason="sign of b demands an odd exponent while the depth gap "
            "controls its parity; depths alone cannot certify this",
        )
    # sign_b = +1 with sign_a = -1: need an even exponent
    if db.is_infinite:
        return ExistenceVerdict(
            verdict="solvable",
            reason="b is exactly 1, reached by the even exponent 0",
        )
    if da.is_infinite or (db.is_exact and da.is_exact and da.amount < db.amount):
        return ExistenceVerdict(
            verdict="solvable",
            reason="a strict depth gap forces an even exponent, matching the "
            "positive sign of b",
        )
    return ExistenceVerdict(
        verdict="undetermined",
        reason="an even exponent is required but the depths do not force one",
    )


# ---------------------------------------------------------------------------
# the full unit solver


@dataclass(frozen=True)
class UnitsSolution:
    """A solution description for a^x = b over the p-adic units.

    The exponent is pinned by two congruences: x = torsion_residue mod
    torsion_modulus (from the roots of unity) and x = principal_exponent
    mod p^precision (from the principal parts; guard digits inside the log
    division pay for the full precision).  ``x`` is the smallest
    nonnegative integer satisfying both, when both exist.
    """

    p: int
    precision: int
    verdict: str  # "solvable" | "undetermined"
    torsion_modulus: int
    torsion_residue: int | None
    principal_exponent: PAdicInt | None
    depth_a: int | None
    x: int | None
    reason: str = ""


def solve_units(a, b, p, precision=12):
    """Solve a^x = b for integer (hence exact) units a and b.

    Splits both sides into torsion and principal parts, solves each, and
    glues the congruences.  Raises UnsolvableError with the first failing
    level when no exponent exists; returns verdict "undetermined" when
    truncation genuinely hides the answer.
    """
    _require_prime(p)
    if a == 0 or b == 0:
        raise ZeroInput("0 is not a unit")
    if (isinstance(a, int) and a == 1) or (
        isinstance(a, PAdicInt) and a._int_value == 1
    ):
        raise AIsOne("powers of 1 cannot reach anything but 1")
    if isinstance(a, int):
        a = PAdicInt.from_integer(a, p, precision)
    if isinstance(b, int):
        b = PAdicInt.from_integer(b, p, precision)
    if a.digits[0] == 0 or b.digits[0] == 0:
        _classify_nonunit(a.to_int(), b.to_int(), p)
    omega_a, a2 = decompose_unit(a)
    omega_b, b2 = decompose_unit(b)
    if p == 2:
        m = 2 if omega_a._int_value == -1 else 1
        if m == 1 and omega_b._int_value == -1:
            raise UnsolvableError(
                "a = 1 mod 4 but b = 3 mod 4", failing_level=2
            )
        t = None if m == 1 else (0 if omega_b._int_value == 1 else 1)
    else:
        a0, b0 = a.digits[0], b.digits[0]
        m = order_mod(a0, p)
        t = None
        cur = 1
        for cand in range(m):
            if cur == b0:
                t = cand
                break
            cur = cur * a0 % p
        if t is None:
            raise UnsolvableError(
                "the residue of b is not a power of the residue of a",
                failing_level=1,
            )
    da = _depth_of(a2)
    db = _depth_of(b2)
    if da.is_infinite:
        # pure torsion: a is exactly a root of unity (a = -1 in practice)
        if db.is_infinite:
            x = _combine(t, m, None, None, p)
            return UnitsSolution(
                p=p,
                precision=precision,
                verdict="solvable",
                torsion_modulus=m,
                torsion_residue=t if m > 1 else 0,
                principal_exponent=None,
                depth_a=None,
                x=x,
                reason="both principal parts are trivial",
            )
        if db.is_exact:
            raise UnsolvableError(
                "a is pure torsion but b has a nontrivial principal part",
                failing_level=db.amount + 1,
            )
        return UnitsSolution(
            p=p,
            precision=precision,
            verdict="undetermined",
            torsion_modulus=m,
            torsion_residue=t if m > 1 else 0,
            principal_exponent=None,
            depth_a=None,
            x=None,
            reason="b's principal part vanishes to working precision only",
        )
    if not da.is_exact:
        return UnitsSolution(
            p=p,
            precision=precision,
            verdict="undetermined",
            torsion_modulus=m,
            torsion_residue=t if m > 1 else 0,
            principal_exponent=None,
            depth_a=None,
            x=None,
            reason="depth(a) is hidden beyond working precision",
        )
    c = da.amount
    wide = precision + c
    if a.precision < wide:
        # exact inputs re-materialize; truncated ones must already be wide
        a2 = decompose_unit(a.with_precision(wide))[1]
        b2 = decompose_unit(b.with_precision(wide))[1]
    ratio = solve_log_ratio(a2, b2, p, precision)
    x1 = ratio.x
    if p == 2 and m == 2:
        parity = x1.digits[0]
        if db.is_exact and parity != t:
            raise UnsolvableError(
                "the sign of b demands exponent parity %d but the principal "
                "parts force parity %d" % (t, parity),
                failing_level=max(c + 1, 2),
            )
        if not db.is_exact and parity != t:
            return UnitsSolution(
                p=p,
                precision=precision,
                verdict="undetermined",
                torsion_modulus=m,
                torsion_residue=t,
                principal_exponent=x1,
                depth_a=c,
                x=None,
                reason="parity clash, but b's principal depth is truncated",
            )
    x = _combine(t, m, x1, precision, p)
    return UnitsSolution(
        p=p,
        precision=precision,
        verdict="solvable",
        torsion_modulus=m,
        torsion_residue=t if m > 1 else 0,
        principal_exponent=x1,
        depth_a=c,
        x=x,
        reason="torsion and principal congruences combined",
    )


def _combine(t, m, x1, precision, p):
    """Smallest nonnegative x with x = t mod m and x = x1 mod p^k."""
    if x1 is None:
        return t if t is not None else None
    k = x1.precision
    r = x1.to_int()
    if t is None or m == 1:
        return r
    if p == 2:
        # the principal congruence already carries the parity
        return r
    # CRT: x = t + m * s with s = (r - t) / m mod p^k; m divides p - 1, so
    # it is invertible mod any power of p
    s = (r - t) * pow(m, -1, p**k) % p**k
    return t + m * s


def solution_is_unit(a, b, p, precision=12):
    """Is the exponent solving a^x = b itself a p-adic unit?

    The exponent's valuation is depth(b) - depth(a) on principal parts, so
    the answer is the depth equality test.  Raises when the depths are
    hidden by truncation or the equation is not solvable to begin with.
    """
    verdict = check_existence(a, b, p, precision)
    if verdict.verdict == "undetermined":
        raise InsufficientPrecision(verdict.reason)
    if verdict.verdict == "unsolvable":
        raise UnsolvableError(verdict.reason, failing_level=verdict.failing_level)
    if isinstance(a, int):
        a = PAdicInt.from_integer(a, p, precision)
    if isinstance(b, int):
        b = PAdicInt.from_integer(b, p, precision)
    _, a2 = decompose_unit(a)
    _, b2 = decompose_unit(b)
    da = _depth_of(a2)
    db = _depth_of(b2)
    if da.is_infinite and db.is_infinite:
        # pure torsion on both sides: the exponent is any representative of
        # a residue class; call it a unit exactly when a nonzero residue works
        return True
    if not (da.is_exact and db.is_exact):
        raise InsufficientPrecision("a depth is hidden beyond working precision")
    return da.amount == db.amount

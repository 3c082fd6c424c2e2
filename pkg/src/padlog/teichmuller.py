"""Teichmuller units: the multiplicative copy of the residue field.

Every unit u in the p-adic integers factors uniquely as a root of unity
(its Teichmuller part, congruent to u mod p) times a principal unit
(congruent to 1 mod p).  For odd p the roots of unity are the p - 1 lifts
of the nonzero residues; at p = 2 only 1 and -1 survive.  The lift is
computed digit by digit with a Newton step on x^k - 1, where k is the
order of the starting residue.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .errors import (
    DomainError,
    InsufficientPrecision,
    InternalInvariantError,
    NotAUnit,
    NotPrime,
    NotPrincipalUnit,
)
from .padic import PAdicInt, ValuationBound, _digits_simple
from .residue import order_mod


def _require_prime(p):
    if not sympy.isprime(p):
        raise NotPrime("%d is not prime" % p)


@dataclass(frozen=True)
class LiftRow:
    """One Newton step of the digit construction, with the un-reduced
    correction product kept for display."""

    n: int
    partial: int  # sum of the first n digits, an ordinary integer
    quotient: int  # (partial^k - 1) / p^n
    correction: int  # k^(-1) * a0 * quotient * (p - 1), before reduction
    digit: int  # correction mod p


def lift_trace(a0, p, rows):
    """The digit construction of the Teichmuller lift of a0, step by step.

    Row n records the current partial sum X (n digits), the exact integer
    quotient (X^k - 1)/p^n, the correction product, and the digit it
    reduces to.  The digit sequence produced agrees with teichmuller_lift.
    """
    _require_prime(p)
    if p == 2:
        raise DomainError("the digit construction needs an odd base")
    a0 %= p
    if a0 == 0:
        raise NotAUnit("residue 0 has no multiplicative lift")
    k = order_mod(a0, p)
    k_inv = pow(k, -1, p)
    x = a0
    out = []
    for n in range(1, rows + 1):
        power = x**k
        if (power - 1) % p**n != 0:
            raise InternalInvariantError("partial lift lost the root property")
        quotient = (power - 1) // p**n
        correction = k_inv * a0 * quotient * (p - 1)
        digit = correction % p
        out.append(
            LiftRow(n=n, partial=x, quotient=quotient, correction=correction, digit=digit)
        )
        x += digit * p**n
    return out


def teichmuller_lift(a0, p, precision):
    """The unique root of unity among p-adic units congruent to a0 mod p.

    Lifts of 1 and -1 are the exact integers 1 and -1; other lifts are
    genuinely irrational and carry no exact value.
    """
    _require_prime(p)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if p == 2:
        if a0 % 2 == 0:
            raise NotAUnit("residue 0 has no multiplicative lift")
        return PAdicInt.from_integer(1, 2, precision)
    a0 %= p
    if a0 == 0:
        raise NotAUnit("residue 0 has no multiplicative lift")
    if a0 == 1:
        return PAdicInt.from_integer(1, p, precision)
    if a0 == p - 1:
        return PAdicInt.from_integer(-1, p, precision)
    k = order_mod(a0, p)
    k_inv = pow(k, -1, p)
    x = a0
    for n in range(1, precision):
        modulus = p ** (n + 1)
        c = (pow(x, k, modulus) - 1) % modulus
        if c % p**n != 0:
            raise InternalInvariantError("partial lift lost the root property")
        digit = k_inv * a0 * (c // p**n) * (p - 1) % p
        x += digit * p**n
    if pow(x, k, p**precision) != 1:
        raise InternalInvariantError("lift is not a root of x^%d - 1" % k)
    return PAdicInt(p, _digits_simple(x, p, precision))


def teichmuller_set(p, precision):
    """All roots of unity in the p-adic units, at the given precision:
    the p - 1 residue lifts for odd p, just {1, -1} for p = 2."""
    _require_prime(p)
    if p == 2:
        return [
            PAdicInt.from_integer(1, 2, precision),
            PAdicInt.from_integer(-1, 2, precision),
        ]
    return [teichmuller_lift(a0, p, precision) for a0 in range(1, p)]


def decompose_unit(u):
    """Split a unit as (root of unity) * (principal unit).

    The first factor only depends on u mod p (mod 4 when p = 2, which is
    why two digits of precision are demanded there); the second is
    congruent to 1 mod p (mod 4 when p = 2).
    """
    u.require_prime_base()
    p = u.base
    if p == 2:
        if u.digits[0] != 1:
            raise NotAUnit("even values are not units")
        if u.precision < 2:
            raise InsufficientPrecision(
                "the sign of a 2-adic unit lives in its second digit"
            )
        if u.digits[1] == 0:
            omega = PAdicInt.from_integer(1, 2, u.precision)
            principal = u
        else:
            omega = PAdicInt.from_integer(-1, 2, u.precision)
            principal = -u
        return omega, principal
    d0 = u.digits[0]
    if d0 == 0:
        raise NotAUnit("first digit zero: not a unit")
    omega = teichmuller_lift(d0, p, u.precision)
    if d0 == 1:
        principal = u
    elif d0 == p - 1:
        principal = -u
    else:
        principal = u * omega.invert_unit()
    if principal.digits[0] != 1:
        raise InternalInvariantError("principal part is not 1 mod p")
    return omega, principal


@dataclass(frozen=True)
class Depth:
    """How deep a unit sits inside the principal units: v_p(u - 1).

    ``in_log_domain`` records whether u is in the region where the
    logarithm series converges and is injective (u = 1 mod p for odd p,
    u = 1 mod 4 for p = 2).
    """

    valuation: ValuationBound
    in_log_domain: bool


def depth(u, strict=True):
    """v_p(u - 1) for a unit u; infinite exactly for the literal 1.

    With ``strict`` the input must already lie in the log-friendly region
    (congruent to 1 mod p, or mod 4 when p = 2); otherwise any unit is
    accepted and the flag in the result says which region it is in.
    """
    u.require_prime_base()
    p = u.base
    if u.digits[0] == 0:
        raise NotAUnit("depth is defined for units only")
    if p == 2:
        if u.precision < 2:
            raise InsufficientPrecision("need two digits to place a 2-adic unit")
        in_domain = u.digits[1] == 0
    else:
        in_domain = u.digits[0] == 1
    if strict and not in_domain:
        raise NotPrincipalUnit(
            "u - 1 is a unit here; pass strict=False to measure anyway"
        )
    shifted = u - PAdicInt.from_integer(1, p, u.precision)
    return Depth(valuation=shifted.valuation(), in_log_domain=in_domain)

"""Primitive roots: finding them, certifying them, and making them stable.

A generator of the units mod p need not generate mod p^2; call those that do
*stable*.  A stable generator mod p^2 automatically generates mod every
higher power, so stability is the whole game.  This module finds generators
by Gauss's order-merging search, repairs unstable ones by a sign trick that
depends on p mod 4, and reproduces the classical table of canonical stable
generators for small primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import sympy

from .errors import (
    InternalInvariantError,
    NotAPrimitiveRoot,
    NotPrime,
    WrongResidueClass,
)
from .residue import euler_phi, order_mod


def _require_prime(p):
    if not sympy.isprime(p):
        raise NotPrime("%d is not prime" % p)


def is_primitive_root(r, p, n=1):
    """Does r generate the full unit group mod p^n?"""
    _require_prime(p)
    m = p**n
    r %= m
    if math.gcd(r, m) != 1:
        return False
    return order_mod(r, m) == euler_phi(m)


def is_stable_root(r, p):
    """Generates mod p AND mod p^2 (hence mod all higher powers)."""
    return is_primitive_root(r, p) and is_primitive_root(r, p, 2)


# ---------------------------------------------------------------------------
# Gauss's search


@dataclass(frozen=True)
class MergeStep:
    """One round of the search: two elements combined into one whose order
    is the lcm of theirs."""

    a: int
    order_a: int
    b: int
    order_b: int
    merged: int
    merged_order: int


@dataclass(frozen=True)
class RootCertificate:
    p: int
    root: int
    steps: tuple = field(default_factory=tuple)

    def verify(self):
        return is_primitive_root(self.root, self.p)


def _split_lcm(t, u):
    """Factor lcm(t, u) as m_a * m_b with m_a | t, m_b | u, coprime parts.

    Each prime power in the lcm goes to whichever argument carries the
    higher exponent, ties to the first.
    """
    m_a = m_b = 1
    primes = set(sympy.factorint(t)) | set(sympy.factorint(u))
    for q in primes:
        e_t = sympy.multiplicity(q, t) if t % q == 0 else 0
        e_u = sympy.multiplicity(q, u) if u % q == 0 else 0
        if e_t >= e_u:
            m_a *= q**e_t
        else:
            m_b *= q**e_u
    return m_a, m_b


def gauss_search(p):
    """Find a generator of the units mod p by successive order merging.

    Start at 2; while the current element a falls short of order p - 1,
    take the smallest b outside the powers of a, and combine a and b into
    an element whose order is lcm(ord a, ord b).  The order strictly grows
    every round, so this terminates with a certificate of the trail.
    """
    _require_prime(p)
    if p == 2:
        return RootCertificate(p=2, root=1)
    a = 2 % p
    steps = []
    t = order_mod(a, p)
    while t < p - 1:
        powers = set()
        cur = 1
        for _ in range(t):
            cur = cur * a % p
            powers.add(cur)
        b = next(x for x in range(2, p) if x not in powers)
        u = order_mod(b, p)
        m_a, m_b = _split_lcm(t, u)
        merged = pow(a, t // m_a, p) * pow(b, u // m_b, p) % p
        new_t = order_mod(merged, p)
        if new_t != m_a * m_b or new_t <= t:
            raise InternalInvariantError("order merge failed at p=%d" % p)
        steps.append(
            MergeStep(a=a, order_a=t, b=b, order_b=u, merged=merged, merged_order=new_t)
        )
        a, t = merged, new_t
    return RootCertificate(p=p, root=a, steps=tuple(steps))


# ---------------------------------------------------------------------------
# stabilization


@dataclass(frozen=True)
class StableRoot:
    p: int
    root: int
    derivation: str  # direct | negated | negated-square | multiplied-by-1+p
    source: int


def stabilize(r, p, force_multiplier=False):
    """Turn a generator mod p into one that generates mod every p^n.

    If r already works mod p^2 it is returned as-is.  Otherwise the repair
    depends on the residue of p mod 4: p - r works when p = 1 (mod 4), and
    -r^2 mod p works when p = 3 (mod 4).  With ``force_multiplier`` the
    classical fallback r(1 + p) mod p^2 is used instead; that residue lives
    mod p^2 (reduced mod p it is r again) and is only guaranteed when r is
    unstable, so the verified order check may raise for stable input.
    """
    _require_prime(p)
    if p == 2:
        return StableRoot(p=2, root=1, derivation="direct", source=1)
    r %= p
    if not is_primitive_root(r, p):
        raise NotAPrimitiveRoot("%d does not generate the units mod %d" % (r, p))
    if force_multiplier:
        candidate = r * (1 + p) % p**2
        tag = "multiplied-by-1+p"
    elif is_primitive_root(r, p, 2):
        return StableRoot(p=p, root=r, derivation="direct", source=r)
    elif p % 4 == 1:
        candidate = (-r) % p
        tag = "negated"
    else:
        candidate = (-r * r) % p
        tag = "negated-square"
    if not is_primitive_root(candidate, p, 2):
        raise NotAPrimitiveRoot(
            "derived candidate %d fails to generate mod %d^2" % (candidate, p)
        )
    if tag != "multiplied-by-1+p" and not is_primitive_root(candidate, p):
        raise InternalInvariantError("repair left the level-1 group")
    return StableRoot(p=p, root=candidate, derivation=tag, source=r)


def sqrt_minus_one(p):
    """A square root of -1 mod p, as a power of a found generator.

    Exists exactly when p = 1 (mod 4); it is the generator raised to a
    quarter of the group order.
    """
    _require_prime(p)
    if p % 4 != 1:
        raise WrongResidueClass("need p = 1 (mod 4); -1 is not a square mod %d" % p)
    g = gauss_search(p).root
    i = pow(g, (p - 1) // 4, p)
    if i * i % p != p - 1:
        raise InternalInvariantError("quarter power is not a root of -1")
    return i


def has_primitive_root(n):
    """Is the unit group mod n cyclic?  True for 1, 2, 4, p^m, 2 p^m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in (1, 2, 4):
        return True
    if n % 4 == 0:
        return False
    odd = n // 2 if n % 2 == 0 else n
    fact = sympy.factorint(odd)
    return len(fact) == 1


def all_stable_roots(p, full=False):
    """Stable generators of the unit groups mod p^n, as classically tabled.

    With ``full`` every stable generator in [2, p - 1] is returned.  The
    default reproduces the canonical table rows: for p = 3 (mod 4) and for
    p = 5 that is the same full list, while for larger p = 1 (mod 4) each
    mirror pair {r, p - r} of generators is represented once, by its small
    member r <= (p - 1)/2, falling back to p - r when r is unstable.
    """
    _require_prime(p)
    if p == 2:
        return [1]
    if full or p % 4 == 3 or p == 5:
        return [r for r in range(2, p) if is_stable_root(r, p)]
    out = []
    for r in range(2, (p - 1) // 2 + 1):
        if not is_primitive_root(r, p):
            continue
        if is_primitive_root(r, p, 2):
            out.append(r)
        else:
            mirror = p - r
            if not is_stable_root(mirror, p):
                raise InternalInvariantError(
                    "mirror %d of unstable generator %d is not stable" % (mirror, r)
                )
            out.append(mirror)
    return sorted(out)

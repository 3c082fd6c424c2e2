"""Finite-level facts about the unit groups mod p^n.

Element orders, how the order of a fixed integer grows with the level n,
membership in cyclic subgroups, the abelian structure of (Z/nZ)^*, and a
deliberately naive discrete-log-by-enumeration oracle that anchors every
cleverer solver in the package.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import sympy

from .errors import (
    AIsOne,
    DomainError,
    InternalInvariantError,
    ModulusTooLarge,
    NotCoprime,
    NotPrime,
)

BRUTE_DLOG_CAP = 10**7


def _cap(default):
    """Brute-force modulus cap, overridable via PADLOG_MAX_MODULUS."""
    value = os.environ.get("PADLOG_MAX_MODULUS")
    return int(value) if value else default


def _require_prime(p):
    if not sympy.isprime(p):
        raise NotPrime("%d is not prime" % p)


# ---------------------------------------------------------------------------
# group structure bookkeeping


@dataclass(frozen=True)
class AbelianStructure:
    """A finite abelian group as a list of cyclic factor sizes.

    ``factors`` keeps the construction-order convention (per prime component:
    the part of order coprime to p, then the p-part).  ``cyclic_order`` is
    the merged single-generator order when the group is cyclic, else None.
    Structural comparisons should go through elementary divisors, which are
    representation-independent.
    """

    factors: tuple
    cyclic_order: int | None = None

    def order(self):
        out = 1
        for f in self.factors:
            out *= f
        return out

    def exponent(self):
        return math.lcm(*self.factors) if self.factors else 1

    def elementary_divisors(self):
        """Sorted multiset of prime-power cyclic pieces."""
        pieces = []
        for f in self.factors:
            for q, e in sympy.factorint(f).items():
                pieces.append(q**e)
        return tuple(sorted(pieces))

    def invariant_factors(self):
        """Ascending chain d_1 | d_2 | ... | d_k with the same product."""
        by_prime = {}
        for f in self.factors:
            for q, e in sympy.factorint(f).items():
                by_prime.setdefault(q, []).append(q**e)
        for q in by_prime:
            by_prime[q].sort(reverse=True)
        depth = max((len(v) for v in by_prime.values()), default=0)
        chain = []
        for i in range(depth):
            d = 1
            for q in by_prime:
                if i < len(by_prime[q]):
                    d *= by_prime[q][i]
            chain.append(d)
        return tuple(sorted(chain))

    def same_group(self, other):
        return self.elementary_divisors() == other.elementary_divisors()

    @classmethod
    def trivial(cls):
        return cls(factors=(), cyclic_order=1)


def structure_from_power_counts(group_order, count_fn):
    """Rebuild an abelian group from the counts N_d = #{x : x^d = identity}.

    For each prime q, log_q N_{q^j} determines the conjugate of the
    partition describing the q-part, which pins the group down completely.
    ``count_fn(d)`` must return N_d.
    """
    if group_order == 1:
        return AbelianStructure.trivial()
    pieces = []
    for q in sympy.factorint(group_order):
        heights = []  # m_j = number of cyclic q-factors of size >= q^j
        prev = 1
        j = 1
        while True:
            c = count_fn(q**j)
            if c == prev:
                break
            ratio = c // prev
            m = 0
            while ratio > 1:
                ratio //= q
                m += 1
            if c != prev * q**m:
                raise InternalInvariantError(
                    "power count %d is not a power of %d times %d" % (c, q, prev)
                )
            heights.append(m)
            prev = c
            j += 1
        if heights:
            n_factors = heights[0]
            for i in range(n_factors):
                lam = sum(1 for m in heights if m >= i + 1)
                pieces.append(q**lam)
    check = 1
    for piece in pieces:
        check *= piece
    if check != group_order:
        raise InternalInvariantError(
            "census rebuilt order %d instead of %d" % (check, group_order)
        )
    return AbelianStructure(factors=tuple(sorted(pieces)))


def census_unit_group_structure(modulus):
    """Literal element-by-element census of (Z/modulus Z)^*; test anchor."""
    units = [x for x in range(1, modulus + 1) if math.gcd(x, modulus) == 1]

    def count_fn(d):
        return sum(1 for u in units if pow(u, d, modulus) == 1)

    return structure_from_power_counts(len(units), count_fn)


# ---------------------------------------------------------------------------
# totient and orders


def euler_phi(n):
    """Count of residues coprime to n, by factorization."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = n
    for q in sympy.factorint(n):
        out -= out // q
    return out


def order_mod(a, modulus):
    """Exact multiplicative order of a mod modulus.

    Starts from phi(modulus) and strips prime factors while the power
    still lands on 1.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if modulus == 1:
        return 1
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (a, modulus))
    t = euler_phi(modulus)
    for q in sympy.factorint(t):
        while t % q == 0 and pow(a, t // q, modulus) == 1:
            t //= q
    return t


@dataclass(frozen=True)
class OrderProfile:
    """Order of a fixed integer in (Z/p^n Z)^* as the level n grows.

    ``stable_exponent`` is the largest level at which the order still equals
    the level-1 order; beyond it the order is multiplied by p per level.
    ``torsion`` marks bases of finite multiplicative order (a = -1), whose
    order never starts growing; their stable window is the whole range.
    """

    a: int
    p: int
    rows: tuple
    stable_exponent: int
    torsion: bool = False

    @property
    def x_o(self):
        return self.rows[0][1]


def order_profile(a, p, n_max):
    _require_prime(p)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if a == 1:
        raise AIsOne("the profile of 1 is constant and excluded")
    if a % p == 0:
        raise NotCoprime("p divides a")
    torsion = a == -1
    if p == 2 and a % 4 == 3 and not torsion:
        raise DomainError(
            "at base 2 the constant-prefix order law needs a = 1 (mod 4); "
            "profile -a or a^2 instead"
        )
    rows = tuple((n, order_mod(a, p**n)) for n in range(1, n_max + 1))
    if torsion:
        return OrderProfile(a=a, p=p, rows=rows, stable_exponent=n_max, torsion=True)
    x_o = rows[0][1]
    k = 1
    while k < n_max and rows[k][1] == x_o:
        k += 1
    if k == n_max and rows[-1][1] == x_o:
        # the stable window covers everything we looked at
        stable = n_max
    else:
        stable = k
    for n, order in rows:
        if n >= stable and order != x_o * p ** (n - stable):
            raise InternalInvariantError(
                "order law broke at level %d for a=%d, p=%d" % (n, a, p)
            )
        if n < stable and order != x_o:
            raise InternalInvariantError("stable window is not constant")
    return OrderProfile(a=a, p=p, rows=rows, stable_exponent=stable)


# ---------------------------------------------------------------------------
# discrete log oracle and membership


def brute_dlog(a, b, p, n):
    """Smallest x in [1, ord(a)] with a^x = b mod p^n, by pure enumeration.

    This is an oracle for tests and small cases, not the product; the
    modulus is capped (override with PADLOG_MAX_MODULUS).
    """
    _require_prime(p)
    m = p**n
    if m > _cap(BRUTE_DLOG_CAP):
        raise ModulusTooLarge("p^n = %d exceeds the brute-force cap" % m)
    a %= m
    b %= m
    if math.gcd(a, m) != 1 or math.gcd(b, m) != 1:
        raise NotCoprime("both arguments must be coprime to p")
    order = order_mod(a, m)
    cur = a
    for x in range(1, order + 1):
        if cur == b:
            return x
        cur = (cur * a) % m
    return None


def subgroup_contains(a, b, p, n):
    """Does b lie in the cyclic subgroup generated by a mod p^n?"""
    _require_prime(p)
    m = p**n
    a %= m
    b %= m
    if math.gcd(a, m) != 1 or math.gcd(b, m) != 1:
        raise NotCoprime("both arguments must be coprime to p")
    if p != 2 or n <= 2:
        # the whole unit group is cyclic, so membership is an order condition
        return pow(b, order_mod(a, m), m) == 1
    return brute_dlog(a, b, p, n) is not None


def group_structure(n):
    """Cyclic factor sizes of (Z/nZ)^* assembled prime component by prime
    component: trivial at 2, [2] at 4, [2, 2^(k-2)] at higher 2-powers, and
    [q-1, q^(k-1)] at odd prime powers."""
    if n < 2:
        raise ValueError("n must be >= 2")
    factors = []
    fact = sympy.factorint(n)
    for q in sorted(fact):
        k = fact[q]
        if q == 2:
            if k == 2:
                factors.append(2)
            elif k >= 3:
                factors.extend([2, 2 ** (k - 2)])
        else:
            factors.append(q - 1)
            if k >= 2:
                factors.append(q ** (k - 1))
    factors = [f for f in factors if f > 1]
    cyclic_order = None
    odd_part = {q: k for q, k in fact.items() if q != 2}
    two_exp = fact.get(2, 0)
    is_cyclic = (
        n in (2, 4)
        or (len(odd_part) == 1 and two_exp <= 1)
    )
    if is_cyclic:
        cyclic_order = euler_phi(n)
    return AbelianStructure(factors=tuple(factors), cyclic_order=cyclic_order)

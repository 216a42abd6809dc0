"""Exact integer algebra: linear congruences, arithmetic progressions,
interval counting and inclusion-exclusion densities of finite divisor sets.

Everything here is value-semantic and exact (arbitrary-precision integers,
`fractions.Fraction`); absence of a solution is an ordinary None result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Optional


@dataclass(frozen=True)
class Progression:
    """The set modulus*Z + residue; the residue is normalized into [0, modulus)."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __contains__(self, n: int) -> bool:
        return n % self.modulus == self.residue


def solve_congruence(a: int, b: int, m: int) -> Optional[int]:
    """Solve a*x == b (mod |m|).

    A solution exists iff gcd(a, m) divides b; it is then unique modulo
    |m|/gcd(a, m) and the representative in [0, |m|/gcd(a, m)) is returned.
    Returns None when there is no solution.
    """
    if a == 0 or m == 0:
        raise ValueError("a and m must be nonzero")
    m = abs(m)
    g = gcd(a, m)
    if b % g != 0:
        return None
    mg = m // g
    return (b // g) * pow(a // g, -1, mg) % mg if mg > 1 else 0


def intersect_progressions(p: Progression, b: int) -> Optional[Progression]:
    """Intersect (aZ + r) with bZ.

    The intersection is either empty (when gcd(a, b) does not divide r) or a
    progression with modulus lcm(a, b) and residue b*s where b*s == r (mod a).
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    a, r = p.modulus, p.residue
    s = solve_congruence(b, r, a)
    if s is None:
        return None
    return Progression(lcm(a, b), b * s)


def count_in_interval(p: Progression, lo: int, hi: int) -> int:
    """Exact number of progression members in the half-open interval [lo, hi)."""
    if hi <= lo:
        return 0
    a, r = p.modulus, p.residue
    # n = a*k + r lies in [lo, hi) iff ceil((lo-r)/a) <= k < ceil((hi-r)/a)
    kmin = -((r - lo) // a)
    kmax = -((r - hi) // a)
    return kmax - kmin


@dataclass(frozen=True)
class DensityReport:
    """Exact density of a union of multiple-sets over one common period."""

    divisors: tuple[int, ...]
    period: int
    multiples_in_period: int
    density: Fraction

    def __post_init__(self):
        if self.density != Fraction(self.multiples_in_period, self.period):
            raise ValueError("density does not match the period counts")
        if not 0 <= self.density <= 1:
            raise ValueError(f"density out of range: {self.density}")


def multiples_density(divisors: Iterable[int]) -> DensityReport:
    """Density of the union of d*Z over the divisors, by inclusion-exclusion.

    The union is periodic with period lcm(divisors), so natural and
    logarithmic density coincide and the result is an exact rational.
    """
    divs = tuple(divisors)
    if not divs:
        raise ValueError("divisor list must be nonempty")
    for d in divs:
        if d < 2:
            raise ValueError(f"divisors must be >= 2, got {d}")
    period = lcm(*divs)
    density = Fraction(0)
    for size in range(1, len(divs) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(divs, size):
            density += Fraction(sign, lcm(*subset))
    count = density * period
    if count.denominator != 1:
        raise ArithmeticError("inclusion-exclusion did not yield an integer count")
    return DensityReport(divs, period, int(count), density)

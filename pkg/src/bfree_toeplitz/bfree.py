"""B-free sequences for generator families {2^i * b_i} with the b_i odd,
pairwise coprime and greater than one.

A finite family of depth T is a truncation of an infinite one.  The value
eta(n) (1 iff no 2^i * b_i divides n) is decided exactly by the truncation
whenever some known modulus divides n, or when the 2-adic valuation of n is
at most T: any deeper modulus 2^i * b_i with i > T would force 2^i | n.
Positions outside that regime raise DepthInsufficientError instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arithmetic import DensityReport, multiples_density
from .errors import (
    DepthInsufficientError,
    NotCoprimeError,
    NotGreaterThanOneError,
    NotOddError,
)


def _v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    return (n & -n).bit_length() - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class BFreeFamily:
    """Odd pairwise-coprime generators b_1..b_T; the moduli are 2^i * b_i."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("family needs at least one generator")
        for idx, b in enumerate(gens, start=1):
            if b <= 1:
                raise NotGreaterThanOneError(idx, b)
            if b % 2 == 0:
                raise NotOddError(idx, b)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                g = gcd(gens[i], gens[j])
                if g != 1:
                    raise NotCoprimeError(i + 1, j + 1, g)

    @property
    def depth(self) -> int:
        return len(self.generators)

    def element(self, i: int) -> int:
        """The i-th modulus 2^i * b_i (1-based)."""
        if not 1 <= i <= self.depth:
            raise ValueError(f"index {i} outside 1..{self.depth}")
        return (1 << i) * self.generators[i - 1]

    def elements(self, t: int | None = None) -> tuple[int, ...]:
        t = self.depth if t is None else t
        return tuple(self.element(i) for i in range(1, t + 1))

    def period(self, t: int) -> int:
        """p_t = 2^t * b_1 * ... * b_t, the level-t skeleton period."""
        if not 1 <= t <= self.depth:
            raise ValueError(f"level {t} outside 1..{self.depth}")
        p = 1 << t
        for b in self.generators[:t]:
            p *= b
        return p

    def deepened(self, depth: int) -> "BFreeFamily":
        """Extend to the given depth with the smallest unused coprime odd primes."""
        if depth <= self.depth:
            return self
        gens = list(self.generators)
        c = 1
        while len(gens) < depth:
            c += 2
            if _is_prime(c) and all(b % c != 0 for b in gens):
                gens.append(c)
        return BFreeFamily(tuple(gens))


def make_family(b_list) -> BFreeFamily:
    """Validate a generator list and build the family."""
    return BFreeFamily(tuple(b_list))


def depth_for_window(lo: int, hi: int) -> int:
    """Smallest depth that decides eta on all of [lo, hi).

    This is the largest 2-adic valuation occurring in the interval.
    """
    if hi <= lo:
        return 1
    needed = 1
    v = 1
    while True:
        step = 1 << v
        # any nonzero multiple of 2^v inside [lo, hi)?
        k_first = (lo + step - 1) // step
        k_last = (hi - 1) // step
        if k_first > k_last or k_first == 0 == k_last:
            break
        needed = v
        v += 1
    return max(needed, 1)


def family_for_window(base: BFreeFamily, lo: int, hi: int) -> BFreeFamily:
    """Deepen a family so that eta is decided everywhere on [lo, hi)."""
    return base.deepened(depth_for_window(lo, hi))


@dataclass(frozen=True)
class SymbolWindow:
    """A finite 0/1 word anchored at an absolute start index."""

    start: int
    symbols: str

    def __post_init__(self):
        if len(self.symbols) < 1:
            raise ValueError("window must be nonempty")
        if set(self.symbols) - {"0", "1"}:
            raise ValueError("window symbols must be 0/1")

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def end(self) -> int:
        return self.start + len(self.symbols)

    def value_at(self, n: int) -> int:
        if not self.start <= n < self.end:
            raise IndexError(f"position {n} outside [{self.start}, {self.end})")
        return ord(self.symbols[n - self.start]) - 48

    def bits(self) -> bytes:
        """Symbols as raw 0/1 bytes (kernel input form)."""
        return bytes(ord(c) - 48 for c in self.symbols)


@dataclass(frozen=True)
class PeriodCertificate:
    """A certified period for one position of eta.

    kind "zero": some modulus 2^j * b_j divides the position, witness is the
    least such j and the period is p_j.  kind "one": the position has 2-adic
    valuation a, witness is a and the period is p_{a+1}.
    """

    position: int
    period: int
    kind: str
    witness: int


def eta_at(family: BFreeFamily, n: int) -> int:
    """eta(n): 1 iff no modulus 2^i * b_i divides n (0 counts as divisible)."""
    if n == 0:
        return 0
    for i in range(1, family.depth + 1):
        if n % family.element(i) == 0:
            return 0
    if _v2(n) <= family.depth:
        return 1
    raise DepthInsufficientError(n, f"eta({n}) undecided: 2-adic valuation {_v2(n)} exceeds depth {family.depth}")


def eta_window(family: BFreeFamily, lo: int, hi: int) -> SymbolWindow:
    """eta on the half-open window [lo, hi)."""
    if hi <= lo:
        raise ValueError(f"empty window [{lo}, {hi})")
    out = []
    elements = family.elements()
    depth = family.depth
    for n in range(lo, hi):
        if n == 0 or any(n % e == 0 for e in elements):
            out.append("0")
        elif _v2(n) <= depth:
            out.append("1")
        else:
            raise DepthInsufficientError(n, f"eta window [{lo}, {hi}) undecided at {n}")
    return SymbolWindow(lo, "".join(out))


def period_certificate(family: BFreeFamily, n: int) -> PeriodCertificate:
    """Certify a period s with eta(n + k*s) = eta(n) for all k.

    Zero positions repeat with period p_j for the least dividing modulus;
    one positions with period p_{a+1} where a is the 2-adic valuation of n.
    """
    if n == 0:
        return PeriodCertificate(0, family.period(1), "zero", 1)
    for j in range(1, family.depth + 1):
        if n % family.element(j) == 0:
            return PeriodCertificate(n, family.period(j), "zero", j)
    a = _v2(n)
    if a + 1 > family.depth:
        raise DepthInsufficientError(n, f"period of eta({n}) needs depth {a + 1}, have {family.depth}")
    return PeriodCertificate(n, family.period(a + 1), "one", a)


@dataclass(frozen=True)
class TautReport:
    """Exact truncated densities for the tautness comparison at one depth."""

    t: int
    base: DensityReport
    removals: tuple[DensityReport, ...]
    is_taut_at_t: bool


def taut_check_truncated(family: BFreeFamily, t: int) -> TautReport:
    """Compare the density of the level-t multiple set with every single-removal one.

    Removing modulus 2^i * b_i must strictly decrease the density for the
    truncation to count as taut at this depth.  With one generator the
    removal leaves an empty set of density zero.
    """
    if not 1 <= t <= family.depth:
        raise ValueError(f"level {t} outside 1..{family.depth}")
    elements = list(family.elements(t))
    base = multiples_density(elements)
    removals = []
    taut = True
    for i in range(t):
        rest = elements[:i] + elements[i + 1 :]
        if rest:
            rep = multiples_density(rest)
        else:
            rep = DensityReport((), 1, 0, Fraction(0))
        removals.append(rep)
        taut = taut and rep.density < base.density
    return TautReport(t, base, tuple(removals), taut)

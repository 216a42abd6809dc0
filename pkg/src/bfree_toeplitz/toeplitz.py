"""Periodic-structure machinery: skeleton blocks with holes, brute-force
Per-set scans, hole gap statistics, essential-period witnesses.

Two engines coexist on purpose.  `skeleton_exact` uses the divisibility
characterization of holes and is the implementation under test;
`per_set_brute` is the dumb oracle that samples translates of a window and
is sound only up to its sample (it can over-approximate a Per-set, never
under-approximate it on the sampled positions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arithmetic import solve_congruence
from .bfree import BFreeFamily, SymbolWindow, eta_at, period_certificate
from .errors import InconsistentLevelsError, WindowTooShortError

HOLE = "_"


@dataclass(frozen=True)
class SkeletonBlock:
    """A periodic block over {0, 1, hole}; cell i is the constant value of the
    sequence on i + length*Z, or a hole where no constant exists."""

    level: int
    cells: str
    hole_positions: tuple[int, ...]

    def __post_init__(self):
        if set(self.cells) - {"0", "1", HOLE}:
            raise ValueError("cells must be over 0/1/_")
        holes = tuple(i for i, c in enumerate(self.cells) if c == HOLE)
        if holes != tuple(self.hole_positions):
            raise ValueError("hole_positions do not match the cells")

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def filled_count(self) -> int:
        return self.length - len(self.hole_positions)

    def value_at(self, n: int) -> str:
        """Cell at absolute position n (reduced modulo the block length)."""
        return self.cells[n % self.length]

    def rotated(self, shift: int) -> "SkeletonBlock":
        """The block read starting from position `shift` of its own repetition."""
        p = self.length
        s = shift % p
        cells = self.cells[s:] + self.cells[:s]
        return SkeletonBlock(self.level, cells, tuple(i for i, c in enumerate(cells) if c == HOLE))

    def to_json(self) -> dict:
        return {
            "t": self.level,
            "p_t": self.length,
            "cells": self.cells,
            "holes": list(self.hole_positions),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkeletonBlock":
        block = cls(int(data["t"]), str(data["cells"]), tuple(data["holes"]))
        if block.length != int(data["p_t"]):
            raise ValueError("p_t does not match the cell string")
        return block


def make_block(level: int, cells: str) -> SkeletonBlock:
    return SkeletonBlock(level, cells, tuple(i for i, c in enumerate(cells) if c == HOLE))


def per_set_brute(window: SymbolWindow, s: int, horizon: int) -> set[int]:
    """Residues r in [0, s) whose sampled orbit r + s*Z is constant on the window.

    For each residue the sample is every in-window position within `horizon`
    steps of the representative nearest zero.  Membership in the result is
    only as strong as the sample; exclusion is definitive.
    """
    if s < 1:
        raise ValueError(f"period must be >= 1, got {s}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    lo, hi = window.start, window.end
    if hi - lo < 2 * s:
        raise WindowTooShortError(f"window of length {hi - lo} gives fewer than 2 translates for period {s}")
    result = set()
    for r in range(s):
        n0 = r if 2 * r <= s else r - s  # representative nearest zero
        if n0 < lo:
            n0 += ((lo - n0 + s - 1) // s) * s
        elif n0 >= hi:
            n0 -= ((n0 - hi) // s + 1) * s
        k_lo = max(-horizon, -((n0 - lo) // s))
        k_hi = min(horizon, (hi - 1 - n0) // s)
        first = window.value_at(n0 + k_lo * s)
        if all(window.value_at(n0 + k * s) == first for k in range(k_lo + 1, k_hi + 1)):
            result.add(r)
    return result


def skeleton_exact(family: BFreeFamily, t: int) -> SkeletonBlock:
    """The level-t skeleton of eta, by the divisibility trichotomy.

    Cell s is 0 when some modulus 2^j * b_j (j <= t) divides s, a hole when
    2^t | s while no b_i (i <= t) divides s, and the constant 1 otherwise.
    """
    p = family.period(t)
    elements = family.elements(t)
    gens = family.generators[:t]
    twot = 1 << t
    cells = []
    for s in range(p):
        if s == 0 or any(s % e == 0 for e in elements):
            cells.append("0")
        elif s % twot == 0 and all(s % b != 0 for b in gens):
            cells.append(HOLE)
        else:
            cells.append(str(eta_at(family, s)))
    return make_block(t, "".join(cells))


def cyclic_min_gap(positions, period: int) -> int:
    """Minimal cyclic gap of a sorted list of positions in [0, period)."""
    pos = list(positions)
    if not pos:
        raise ValueError("no positions")
    if len(pos) == 1:
        return period
    gaps = [b - a for a, b in zip(pos, pos[1:])]
    gaps.append(period - pos[-1] + pos[0])
    return min(gaps)


def sh_gap(family: BFreeFamily, t: int) -> int:
    """Minimal cyclic distance between holes of the level-t skeleton (equals 2^t)."""
    block = skeleton_exact(family, t)
    return cyclic_min_gap(block.hole_positions, block.length)


def regularity_ratio(family: BFreeFamily, t: int) -> Fraction:
    """Hole fraction of the level-t skeleton, exactly; always at most 2^-t."""
    block = skeleton_exact(family, t)
    ratio = Fraction(len(block.hole_positions), block.length)
    if ratio > Fraction(1, 1 << t):
        raise InconsistentLevelsError(f"hole ratio {ratio} exceeds 2^-{t}")
    return ratio


def residue_classes_of_holes(family: BFreeFamily, t: int, i: int) -> set[int]:
    """The residues (hole / 2^t) mod b_i; covers every nonzero class mod b_i."""
    if not 1 <= i <= t:
        raise ValueError(f"generator index {i} outside 1..{t}")
    block = skeleton_exact(family, t)
    b = family.generators[i - 1]
    return {(h >> t) % b for h in block.hole_positions}


@dataclass(frozen=True)
class PeriodicStructureReport:
    """Per-level summary of the nested periodic structure.

    levels holds (t, p_t, essential, witness_map); witness_map sends each
    candidate period s < p_t to the position separating Per_s from Per_{p_t}.
    """

    levels: tuple[tuple[int, int, bool, dict[int, int]], ...]

    def __post_init__(self):
        periods = [p for _, p, _, _ in self.levels]
        for low, high in zip(periods, periods[1:]):
            if high % low != 0:
                raise ValueError(f"periods must be nested by divisibility: {low} does not divide {high}")


def periodic_structure_report(family: BFreeFamily, t_max: int) -> PeriodicStructureReport:
    """Verify the nested periods p_1 | ... | p_t_max and the essentiality of
    each level by exhausting every candidate period below it."""
    levels = []
    for t in range(1, t_max + 1):
        p = family.period(t)
        witness_map: dict[int, int] = {}
        essential = True
        for s in range(1, p):
            report = essential_check(family, t, s)
            essential = essential and report.violated
            witness_map[s] = report.witness
        levels.append((t, p, essential, witness_map))
    return PeriodicStructureReport(tuple(levels))


@dataclass(frozen=True)
class EssentialPeriodReport:
    """Outcome of testing a candidate period s < p_t against the level-t Per-set.

    When violated, `witness` is a position that is p_t-periodic but not
    s-periodic, and `breaker_shift` is a k with eta(witness + k*s) differing
    from eta(witness).
    """

    level: int
    candidate: int
    violated: bool
    witness: int | None
    breaker_shift: int | None
    case: str


def essential_check(family: BFreeFamily, t: int, s: int) -> EssentialPeriodReport:
    """Exhibit a position separating Per_s from Per_{p_t} for any s < p_t.

    The witness is built from the gcd structure of s: either some generator
    b_i (i < t) only partially divides s, or only the top one does, or all
    of b_1..b_t divide s.  Each case yields an explicit breaker shift.
    """
    p = family.period(t)
    if not 1 <= s <= p:
        raise ValueError(f"candidate period {s} outside 1..{p}")
    if s == p:
        return EssentialPeriodReport(t, s, False, None, None, "same_period")

    gens = family.generators[:t]
    witness = breaker = None
    case = ""
    for i, b in enumerate(gens[:-1], start=1):
        part = gcd(b, s)
        if part < b:
            witness = (1 << (t - 1)) * part
            breaker = solve_congruence(s, -witness, family.element(i))
            case = "partial_gcd_low"
            break
    if witness is None:
        witness = (1 << t) * gens[-1]
        if gcd(gens[-1], s) < gens[-1]:
            breaker = 1 << (t + 1)
            case = "partial_gcd_top"
        else:
            breaker = 1
            case = "full_divisibility"

    # both claims are checkable: the certificate pins the p_t-orbit, the
    # breaker exhibits the s-orbit defect
    cert = period_certificate(family, witness)
    if p % cert.period != 0:
        raise InconsistentLevelsError(f"witness {witness} certificate period {cert.period} does not divide {p}")
    if eta_at(family, witness + breaker * s) == eta_at(family, witness):
        raise InconsistentLevelsError(f"breaker {breaker} fails for witness {witness}, s={s}")
    return EssentialPeriodReport(t, s, True, witness, breaker, case)

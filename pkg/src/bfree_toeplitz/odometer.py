"""The finite-depth odometer: compatible residue vectors modulo the skeleton
periods p_1 | p_2 | ... | p_T, with the translation action, the canonical
ultrametric, shifted skeletons and the hole-based classification.

Every statement made at finite depth is a truncation statement: a depth-T
element is determined by its deepest residue, and classifications are
labelled "at depth" because membership in the limit objects is not decidable
from finitely many coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bfree import BFreeFamily
from .errors import DepthMismatchError, InconsistentLevelsError
from .toeplitz import HOLE, SkeletonBlock, skeleton_exact


@dataclass(frozen=True)
class OdometerElement:
    """Residues (n_1, ..., n_T) with n_{t+1} == n_t (mod p_t)."""

    residues: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.residues or len(self.residues) != len(self.moduli):
            raise ValueError("residues and moduli must align and be nonempty")
        for n, p in zip(self.residues, self.moduli):
            if not 0 <= n < p:
                raise ValueError(f"residue {n} outside [0, {p})")
        for t in range(len(self.moduli) - 1):
            if self.moduli[t + 1] % self.moduli[t] != 0:
                raise ValueError("moduli must be nested by divisibility")
            if self.residues[t + 1] % self.moduli[t] != self.residues[t]:
                raise ValueError(
                    f"incompatible residues at level {t + 1}: "
                    f"{self.residues[t + 1]} mod {self.moduli[t]} != {self.residues[t]}"
                )

    @property
    def depth(self) -> int:
        return len(self.residues)

    def residue(self, t: int) -> int:
        """n_t (1-based level)."""
        return self.residues[t - 1]

    def to_json(self) -> dict:
        return {"depth": self.depth, "residues": list(self.residues)}


def _moduli(family: BFreeFamily, depth: int) -> tuple[int, ...]:
    return tuple(family.period(t) for t in range(1, depth + 1))


def from_integer(family: BFreeFamily, n: int, depth: int | None = None) -> OdometerElement:
    """The image of the integer n, i.e. residues n mod p_t."""
    depth = family.depth if depth is None else depth
    moduli = _moduli(family, depth)
    return OdometerElement(tuple(n % p for p in moduli), moduli)


def add(g: OdometerElement, h: OdometerElement) -> OdometerElement:
    """Coordinatewise addition mod p_t."""
    if g.moduli != h.moduli:
        raise DepthMismatchError(f"cannot add elements with moduli {g.moduli} and {h.moduli}")
    return OdometerElement(tuple((a + b) % p for a, b, p in zip(g.residues, h.residues, g.moduli)), g.moduli)


def translate(g: OdometerElement, shift: int = 1) -> OdometerElement:
    """Translation by an integer multiple of the unit."""
    return OdometerElement(tuple((a + shift) % p for a, p in zip(g.residues, g.moduli)), g.moduli)


def metric(g: OdometerElement, h: OdometerElement) -> Fraction:
    """max 1/(i+1) over disagreeing coordinates i (0 when equal); an ultrametric."""
    if g.moduli != h.moduli:
        raise DepthMismatchError(f"cannot compare elements with moduli {g.moduli} and {h.moduli}")
    for i, (a, b) in enumerate(zip(g.residues, h.residues), start=1):
        if a != b:
            return Fraction(1, i + 1)
    return Fraction(0)


def shifted_skeleton(family: BFreeFamily, t: int, g: OdometerElement) -> SkeletonBlock:
    """The level-t skeleton read from offset n_t; holes move to (I - n_t) mod p_t."""
    if t > g.depth:
        raise ValueError(f"level {t} exceeds element depth {g.depth}")
    return skeleton_exact(family, t).rotated(g.residue(t))


@dataclass(frozen=True)
class DepthClassification:
    """Hole-based classification of an element, valid at its depth only.

    in_g2: every coordinate sits on a hole of its level (necessary for
    membership in the limit hole set, not sufficient).  g1_shift: the
    integer translate with smallest |shift| that lands in the at-depth hole
    set; such a translate always exists because holes exist at every level,
    so it is diagnostic only.  in_g0_at_depth: the complement of in_g2, the
    strongest complement claim this depth supports.
    """

    in_g2: bool
    g1_shift: int | None
    in_g0_at_depth: bool


def classify_at_depth(family: BFreeFamily, g: OdometerElement) -> DepthClassification:
    """Classify g by whether its coordinates sit on skeleton holes."""
    blocks = [skeleton_exact(family, t) for t in range(1, g.depth + 1)]

    def all_holes(element: OdometerElement) -> bool:
        return all(block.cells[element.residue(t)] == HOLE for t, block in enumerate(blocks, start=1))

    in_g2 = all_holes(g)
    g1_shift = None
    bound = g.moduli[-1]
    for magnitude in range(0, bound + 1):
        for shift in ((magnitude,) if magnitude == 0 else (magnitude, -magnitude)):
            if all_holes(translate(g, shift)):
                g1_shift = shift
                break
        if g1_shift is not None:
            break
    return DepthClassification(in_g2, g1_shift, not in_g2)


def point_of(family: BFreeFamily, g: OdometerElement, lo: int, hi: int) -> str:
    """The depth-limited approximation of the sequence attached to g on [lo, hi).

    Each position shows the value of the deepest skeleton level that fills
    it, or a hole when every level up to the element depth leaves it open.
    Filled levels must agree; disagreement is an internal error.
    """
    if hi <= lo:
        return ""
    shifted = [shifted_skeleton(family, t, g) for t in range(1, g.depth + 1)]
    out = []
    for n in range(lo, hi):
        value = HOLE
        for block in shifted:
            c = block.value_at(n)
            if c == HOLE:
                continue
            if value != HOLE and value != c:
                raise InconsistentLevelsError(f"levels disagree at position {n}: {value} vs {c}")
            value = c
        out.append(value)
    return "".join(out)

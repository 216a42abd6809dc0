"""A Toeplitz sequence whose automorphism group contains the symbolwise
complement: a positive control for the endomorphism search.

The blocks grow by the recursion B_{t+1} = B_t c_t ~B_t c_t B_t (with ~ the
complement and c_t free fill bits) and A_t = B_t _ ~B_t _, so each level has
exactly two holes and A_{t+1} refines the threefold concatenation of A_t.
Every factor of the determined sequence occurs together with its complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bfree import SymbolWindow
from .errors import DepthInsufficientError, InconsistentLevelsError
from .toeplitz import HOLE, SkeletonBlock, make_block

_FLIP = str.maketrans("01", "10")


def _neg(word: str) -> str:
    return word.translate(_FLIP)


def build_blocks(seed: str, bits: Sequence[int], depth: int) -> list[SkeletonBlock]:
    """Blocks A_1..A_depth of the recursion; refinement is asserted level by level."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if not seed or set(seed) - {"0", "1"}:
        raise ValueError("seed must be a nonempty 0/1 word")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("fill bits must be 0/1")
    if depth > len(bits) + 1:
        raise ValueError(f"depth {depth} needs {depth - 1} fill bits, got {len(bits)}")
    blocks = []
    core = seed
    for level in range(1, depth + 1):
        cells = core + HOLE + _neg(core) + HOLE
        blocks.append(make_block(level, cells))
        assert blocks[-1].hole_positions == (len(core), len(cells) - 1)
        if level > 1:
            prev = blocks[-2].cells * 3
            for i, c in enumerate(cells):
                if prev[i] != HOLE and prev[i] != c:
                    raise InconsistentLevelsError(f"level {level} breaks refinement at cell {i}")
        if level < depth:
            fill = str(bits[level - 1])
            core = core + fill + _neg(core) + fill + core
    return blocks


@dataclass(frozen=True)
class ComplementClosedConstruction:
    """The block family determined by a seed word and fill bits."""

    seed: str
    fill_bits: tuple[int, ...]
    depth: int
    blocks: tuple[SkeletonBlock, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fill_bits", tuple(self.fill_bits))
        object.__setattr__(self, "blocks", tuple(build_blocks(self.seed, self.fill_bits, self.depth)))

    def block(self, t: int) -> SkeletonBlock:
        if not 1 <= t <= self.depth:
            raise ValueError(f"level {t} outside 1..{self.depth}")
        return self.blocks[t - 1]

    def period(self, t: int) -> int:
        return self.block(t).length


def make_construction(seed: str, bits: Sequence[int] = (), depth: int = 1) -> ComplementClosedConstruction:
    return ComplementClosedConstruction(seed, tuple(bits), depth)


def value_at(construction: ComplementClosedConstruction, n: int) -> Optional[str]:
    """The determined symbol at position n, or None while every level leaves a hole."""
    value = None
    for t in range(1, construction.depth + 1):
        c = construction.block(t).value_at(n)
        if c == HOLE:
            continue
        if value is not None and value != c:
            raise InconsistentLevelsError(f"levels disagree at position {n}")
        value = c
    return value


def window_of(construction: ComplementClosedConstruction, lo: int, hi: int) -> SymbolWindow:
    """The determined word on [lo, hi); fails on the first still-open position."""
    if hi <= lo:
        raise ValueError(f"empty window [{lo}, {hi})")
    out = []
    for n in range(lo, hi):
        v = value_at(construction, n)
        if v is None:
            raise DepthInsufficientError(n, f"position {n} still open at depth {construction.depth}")
        out.append(v)
    return SymbolWindow(lo, "".join(out))


def complement_closure_check(
    construction: ComplementClosedConstruction, word_len: int, level: int | None = None
) -> bool:
    """Is the complement of every length-word_len factor itself a factor?

    The scan runs over the span [0, 4 * period(level)); the default level is
    depth - 2, the deepest one whose fourfold period is already fully
    determined (the two holes of the top block sit beyond it).
    """
    if word_len < 1:
        raise ValueError(f"word length must be >= 1, got {word_len}")
    level = construction.depth - 2 if level is None else level
    if level < 1:
        raise ValueError(f"no fully determined span: level {level} < 1 (need depth >= 3)")
    span = window_of(construction, 0, 4 * construction.period(level))
    w = span.symbols
    factors = {w[i : i + word_len] for i in range(len(w) - word_len + 1)}
    return all(_neg(f) in factors for f in factors)


def detect_period(word: str) -> Optional[int]:
    """Smallest p <= len(word)/2 making the word p-periodic, or None."""
    n = len(word)
    for p in range(1, n // 2 + 1):
        if all(word[i] == word[i + p] for i in range(n - p)):
            return p
    return None

"""Pure-Python kernels for the hot loops of the endomorphism search.

Windows are raw 0/1 byte strings.  Length-k words are packed MSB-first
(leftmost symbol is the highest bit), so a rule table is a byte string of
length 2^k indexed by the packed word, and a factor set of word length ell
is a bitset of 2^ell bits.
"""

from __future__ import annotations

BACKEND = "pure"


def language_bitset(bits: bytes, ell: int) -> bytes:
    """Bitset of all packed length-ell factors of the window."""
    if ell < 1:
        raise ValueError(f"word length must be >= 1, got {ell}")
    if len(bits) < ell:
        raise ValueError(f"window of length {len(bits)} has no factor of length {ell}")
    out = bytearray(max(1, (1 << ell) >> 3))
    mask = (1 << ell) - 1
    code = 0
    for i, b in enumerate(bits):
        code = ((code << 1) | b) & mask
        if i >= ell - 1:
            out[code >> 3] |= 1 << (code & 7)
    return bytes(out)


def apply_rule(bits: bytes, width: int, table: bytes) -> bytes:
    """Image word out[m] = table[packed bits[m : m + width]]."""
    if width < 1 or len(table) != (1 << width):
        raise ValueError("table length must be 2^width")
    n = len(bits)
    if n < width:
        raise ValueError(f"window of length {n} shorter than rule width {width}")
    out = bytearray(n - width + 1)
    mask = (1 << width) - 1
    code = 0
    for i, b in enumerate(bits):
        code = ((code << 1) | b) & mask
        if i >= width - 1:
            out[i - width + 1] = table[code]
    return bytes(out)


def rule_survives(bits: bytes, width: int, table: bytes, ell: int, allowed: bytes) -> bool:
    """Fused apply-and-check: every length-ell factor of the image is in `allowed`.

    Checking a single factor length suffices for language containment, since
    factors of admissible words are admissible; callers guarantee the image
    is at least ell long.
    """
    if len(bits) - width + 1 < ell:
        raise ValueError("image shorter than the validation word length")
    wmask = (1 << width) - 1
    emask = (1 << ell) - 1
    wcode = icode = produced = 0
    for i, b in enumerate(bits):
        wcode = ((wcode << 1) | b) & wmask
        if i >= width - 1:
            icode = ((icode << 1) | table[wcode]) & emask
            produced += 1
            if produced >= ell and not (allowed[icode >> 3] >> (icode & 7)) & 1:
                return False
    return True

# cython: boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as kernels.pure."""

BACKEND = "cython"


def language_bitset(const unsigned char[:] bits, int ell):
    if ell < 1:
        raise ValueError(f"word length must be >= 1, got {ell}")
    cdef Py_ssize_t n = bits.shape[0]
    if n < ell:
        raise ValueError(f"window of length {n} has no factor of length {ell}")
    cdef Py_ssize_t size = 1
    if ell > 3:
        size = (<Py_ssize_t>1) << (ell - 3)
    out = bytearray(size)
    cdef unsigned char[:] view = out
    cdef unsigned long mask = ((<unsigned long>1) << ell) - 1
    cdef unsigned long code = 0
    cdef Py_ssize_t i
    for i in range(n):
        code = ((code << 1) | bits[i]) & mask
        if i >= ell - 1:
            view[code >> 3] |= <unsigned char>(1 << (code & 7))
    return bytes(out)


def apply_rule(const unsigned char[:] bits, int width, const unsigned char[:] table):
    if width < 1 or table.shape[0] != ((<Py_ssize_t>1) << width):
        raise ValueError("table length must be 2^width")
    cdef Py_ssize_t n = bits.shape[0]
    if n < width:
        raise ValueError(f"window of length {n} shorter than rule width {width}")
    out = bytearray(n - width + 1)
    cdef unsigned char[:] view = out
    cdef unsigned long mask = ((<unsigned long>1) << width) - 1
    cdef unsigned long code = 0
    cdef Py_ssize_t i
    for i in range(n):
        code = ((code << 1) | bits[i]) & mask
        if i >= width - 1:
            view[i - width + 1] = table[code]
    return bytes(out)


def rule_survives(const unsigned char[:] bits, int width, const unsigned char[:] table,
                  int ell, const unsigned char[:] allowed):
    cdef Py_ssize_t n = bits.shape[0]
    if n - width + 1 < ell:
        raise ValueError("image shorter than the validation word length")
    cdef unsigned long wmask = ((<unsigned long>1) << width) - 1
    cdef unsigned long emask = ((<unsigned long>1) << ell) - 1
    cdef unsigned long wcode = 0, icode = 0
    cdef Py_ssize_t produced = 0
    cdef Py_ssize_t i
    for i in range(n):
        wcode = ((wcode << 1) | bits[i]) & wmask
        if i >= width - 1:
            icode = ((icode << 1) | table[wcode]) & emask
            produced += 1
            if produced >= ell and not (allowed[icode >> 3] >> (icode & 7)) & 1:
                return False
    return True

"""Index masks for the register-level group action on 2^n-bit minor vectors.

Coordinate ``z_T`` lives at bit ``mask(T)``. A local element on slot ``j``
mixes the pairs of coordinates whose indices differ only in bit ``j``; an
adjacent transposition of slots ``j, j+1`` swaps index bits ``j`` and
``j+1``. Generator numbering, shared by both kernel backends:

* ``0 .. n-1``      HAD on slot j
* ``n .. 2n-1``     SQZ on slot j
* ``2n .. 3n-2``    transposition of slots j and j+1
"""

from __future__ import annotations

from functools import lru_cache

MAX_KERNEL_N = 6


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def slot_masks(n: int) -> tuple[int, ...]:
    """``hi[j]``: indices with bit j set."""
    size = 1 << n
    out = []
    for j in range(n):
        m = 0
        for idx in range(size):
            if (idx >> j) & 1:
                m |= 1 << idx
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def swap_masks(n: int) -> tuple[tuple[int, int], ...]:
    """``(a, b)`` per adjacent pair: indices with bits (j, j+1) = (1, 0) and (0, 1)."""
    size = 1 << n
    out = []
    for j in range(n - 1):
        a = b = 0
        for idx in range(size):
            lo = (idx >> j) & 1
            hi = (idx >> (j + 1)) & 1
            if lo and not hi:
                a |= 1 << idx
            elif hi and not lo:
                b |= 1 << idx
        out.append((a, b))
    return tuple(out)


def n_generators(n: int) -> int:
    return 3 * n - 1 if n > 0 else 0


def apply_generator(z: int, g: int, n: int) -> int:
    """Image of the minor vector ``z`` under generator number ``g``."""
    if g < n:
        s = 1 << g
        h = slot_masks(n)[g]
        return ((z & h) >> s) | ((z & ~h & full_mask(n)) << s)
    if g < 2 * n:
        j = g - n
        return z ^ ((z & slot_masks(n)[j]) >> (1 << j))
    j = g - 2 * n
    a, b = swap_masks(n)[j]
    s = 1 << j
    return (z & ~(a | b)) | ((z & a) << s) | ((z & b) >> s)


@lru_cache(maxsize=None)
def sym_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle positions ``(i, j), i <= j`` in the order used to index symmetric matrices."""
    return tuple((i, j) for i in range(n) for j in range(i, n))


def sym_code_to_rows(code: int, n: int) -> list[int]:
    rows = [0] * n
    for b, (i, j) in enumerate(sym_pairs(n)):
        if (code >> b) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def rows_to_sym_code(rows, n: int) -> int:
    code = 0
    for b, (i, j) in enumerate(sym_pairs(n)):
        if (rows[i] >> j) & 1:
            code |= 1 << b
    return code


def lagrangian_count(n: int) -> int:
    c = 1
    for i in range(1, n + 1):
        c *= (1 << i) + 1
    return c

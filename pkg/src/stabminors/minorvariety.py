"""The principal-minor map from Lagrangians to F2^{2^n} and its inverse.

For a Lagrangian with any basis matrix M (2n x n), the coordinate ``z_T`` is
the n x n minor that takes the mu row for every qubit outside T and the nu
row for every qubit in T. Over F2 a change of basis multiplies every minor
by 1, so the vector is an invariant of the subspace. For ``span[I; S]`` it
is the vector of principal minors of S, with the empty minor equal to 1.

Internally ``z_T`` is bit ``mask(T)`` of an integer (bitmask order). The
printed form uses graded-lex order: subsets by size, then lexicographic,
so for n = 5 the pair {1, 2} is z6 and {1, 2, 3, 4} is z26.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import (
    InconsistentPoint,
    IndexOutOfRange,
    NotChartPoint,
    NotOnVariety,
    NotSymmetric,
    ParseError,
)
from .f2core import BitMatrix, BitVector, bits_of
from .lagrangian import Lagrangian, graded_lex_subsets


class IndexOrder(enum.Enum):
    BITMASK = "bitmask"
    GRADED_LEX = "graded-lex"


@lru_cache(maxsize=None)
def _position_of_mask(n: int) -> dict[int, int]:
    return {mask: pos for pos, mask in enumerate(graded_lex_subsets(n))}


def index_convert(i: int, n: int, src: IndexOrder | str, dst: IndexOrder | str) -> int:
    """Convert a coordinate index between bitmask and graded-lex order."""
    src = IndexOrder(src)
    dst = IndexOrder(dst)
    if not 0 <= i < (1 << n):
        raise IndexOutOfRange(f"coordinate index {i} out of range for n={n}")
    if src == dst:
        return i
    if src is IndexOrder.BITMASK:
        return _position_of_mask(n)[i]
    return graded_lex_subsets(n)[i]


def subset_mask(subset) -> int:
    """1-based subset such as ``{1, 2}`` to its bitmask."""
    m = 0
    for t in subset:
        m |= 1 << (t - 1)
    return m


@dataclass(frozen=True)
class MinorPoint:
    n: int
    bits: int

    def __post_init__(self):
        if self.bits <= 0 or self.bits >> (1 << self.n):
            raise ValueError("a minor point is a nonzero vector of 2^n bits")

    @property
    def key(self) -> int:
        return self.bits

    def z(self, T: int) -> int:
        """Coordinate at the subset with bitmask ``T``."""
        return (self.bits >> T) & 1

    def coordinates(self, order: IndexOrder | str = IndexOrder.BITMASK) -> list[int]:
        order = IndexOrder(order)
        if order is IndexOrder.BITMASK:
            return [(self.bits >> i) & 1 for i in range(1 << self.n)]
        return [(self.bits >> m) & 1 for m in graded_lex_subsets(self.n)]

    def to_vector(self) -> BitVector:
        return BitVector(1 << self.n, self.bits)

    def format(self, order: IndexOrder | str = IndexOrder.GRADED_LEX) -> str:
        return "[" + ":".join(str(b) for b in self.coordinates(order)) + "]"

    def __str__(self) -> str:
        return self.format()

    def support(self, order: IndexOrder | str = IndexOrder.GRADED_LEX) -> list[int]:
        return [i for i, b in enumerate(self.coordinates(order)) if b]


def parse_point(s: str, n: int | None = None, order: IndexOrder | str = IndexOrder.GRADED_LEX) -> MinorPoint:
    """Parse ``[1:0:...]``; the length fixes n when it is not given."""
    body = s.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"point must be bracketed: {s!r}")
    toks = [t.strip() for t in body[1:-1].split(":")]
    if any(t not in ("0", "1") for t in toks):
        raise ParseError(f"point entries must be 0 or 1: {s!r}")
    size = len(toks)
    if size & (size - 1) or size < 2:
        raise ParseError(f"point length {size} is not 2^n with n >= 1")
    m = size.bit_length() - 1
    if n is not None and m != n:
        raise ParseError(f"point has {size} entries, expected {1 << n}")
    order = IndexOrder(order)
    bits = 0
    for pos, t in enumerate(toks):
        if t == "1":
            idx = pos if order is IndexOrder.BITMASK else graded_lex_subsets(m)[pos]
            bits |= 1 << idx
    if bits == 0:
        raise ParseError("the zero vector is not a projective point")
    return MinorPoint(m, bits)


def minor_point(L: Lagrangian) -> MinorPoint:
    return MinorPoint(L.n, _kernels.minor_bits(L.columns, L.n))


def minor_point_of_columns(columns, n: int) -> MinorPoint:
    """Same as :func:`minor_point` for any (not necessarily canonical) basis."""
    return MinorPoint(n, _kernels.minor_bits(list(columns), n))


def from_symmetric(S: BitMatrix) -> MinorPoint:
    """Principal minors of a symmetric matrix."""
    if not S.is_symmetric():
        raise NotSymmetric("from_symmetric needs a symmetric matrix")
    n = S.rows
    cols = [(1 << j) | (S.column(j) << n) for j in range(n)]
    return MinorPoint(n, _kernels.minor_bits(cols, n))


def reconstruct_symmetric(p: MinorPoint) -> BitMatrix:
    """Recover S from a chart point: s_ii = z_i, s_ij = z_ij + s_ii s_jj.

    All higher minors are recomputed and compared.
    """
    n = p.n
    if not p.z(0):
        raise NotChartPoint("z_empty = 0: the point is off the standard chart")
    rows = [0] * n
    for i in range(n):
        if p.z(1 << i):
            rows[i] |= 1 << i
    for i in range(n):
        for j in range(i + 1, n):
            sij = p.z((1 << i) | (1 << j)) ^ (p.z(1 << i) & p.z(1 << j))
            if sij:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    S = BitMatrix(n, n, tuple(rows))
    if from_symmetric(S).bits != p.bits:
        raise InconsistentPoint("higher minors disagree with the reconstructed matrix")
    return S


def _swap_index(z: int, T: int, n: int) -> int:
    """HAD on the slots of T: z'_U = z_{U xor T}."""
    out = 0
    for idx in bits_of(z):
        out |= 1 << (idx ^ T)
    return out


def lagrangian_from_point(p: MinorPoint) -> Lagrangian:
    """Inverse of :func:`minor_point` on the variety; raises NotOnVariety elsewhere."""
    n = p.n
    for T in graded_lex_subsets(n):
        if p.z(T):
            break
    q = MinorPoint(n, _swap_index(p.bits, T, n))
    try:
        S = reconstruct_symmetric(q)
    except InconsistentPoint as exc:
        raise NotOnVariety(str(exc)) from None
    L = Lagrangian.from_chart(T, S)
    if minor_point(L).bits != p.bits:
        raise NotOnVariety("reconstruction does not reproduce the point")
    return L


def is_on_variety(p: MinorPoint) -> bool:
    try:
        lagrangian_from_point(p)
    except NotOnVariety:
        return False
    return True


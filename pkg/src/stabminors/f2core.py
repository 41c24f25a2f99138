"""Bit-packed linear algebra over F2.

Vectors are Python integers used as bit sets: bit ``i`` holds coordinate
``i`` (0-based). A matrix is a tuple of row integers, so row operations are
single XORs. Python integers are arbitrary precision, which keeps the same
code valid for the 2n-bit symplectic vectors and for the 2^n-bit minor
vectors alike.

User-facing indices elsewhere in the package are 1-based; everything in
this module is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotSquare, SizeMismatch

WORD_BITS = 64


def popcount(x: int) -> int:
    return x.bit_count()


def parity(x: int) -> int:
    return x.bit_count() & 1


def low_mask(n: int) -> int:
    return (1 << n) - 1


def bits_of(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class BitVector:
    """Element of F2^n_bits stored as an integer bit set.

    ``words`` exposes the little-endian 64-bit word decomposition of the
    same bits.
    """

    n_bits: int
    value: int = 0

    def __post_init__(self):
        if self.n_bits < 0:
            raise ValueError("negative dimension")
        if self.value < 0 or self.value >> self.n_bits:
            raise ValueError("bits set beyond n_bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        v = 0
        for i, b in enumerate(bits):
            if b & 1:
                v |= 1 << i
        return cls(len(bits), v)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse ``"0110"``, first character is coordinate 0."""
        if any(ch not in "01" for ch in s):
            raise ValueError(f"not a bit string: {s!r}")
        return cls.from_bits([int(ch) for ch in s])

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n_bits:
            raise IndexOutOfRange(f"bit {i} out of range for length {self.n_bits}")
        return (self.value >> i) & 1

    def __len__(self) -> int:
        return self.n_bits

    def __iter__(self):
        return (int((self.value >> i) & 1) for i in range(self.n_bits))

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_len(self.n_bits, other.n_bits)
        return BitVector(self.n_bits, self.value ^ other.value)

    def __and__(self, other: "BitVector") -> "BitVector":
        _check_len(self.n_bits, other.n_bits)
        return BitVector(self.n_bits, self.value & other.value)

    def dot(self, other: "BitVector") -> int:
        _check_len(self.n_bits, other.n_bits)
        return parity(self.value & other.value)

    def weight(self) -> int:
        return popcount(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def words(self) -> tuple[int, ...]:
        n_words = max(1, -(-self.n_bits // WORD_BITS))
        m = low_mask(WORD_BITS)
        return tuple((self.value >> (WORD_BITS * w)) & m for w in range(n_words))

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


def _check_len(a: int, b: int) -> None:
    if a != b:
        raise SizeMismatch(a, b, "length")


@dataclass(frozen=True)
class BitMatrix:
    """Dense F2 matrix, row-major, each row an integer of ``cols`` bits."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond cols")

    # construction
    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        data = tuple(int(r) for r in rows)
        return cls(len(data), cols, data)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        if not rows:
            return cls(0, 0, ())
        cols = len(rows[0])
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            data.append(BitVector.from_bits(r).value)
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "BitMatrix":
        data = [0] * rows
        for j, c in enumerate(columns):
            for i in bits_of(c):
                if i >= rows:
                    raise ValueError("column has bits beyond rows")
                data[i] |= 1 << j
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    # access
    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) out of range")
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> int:
        return self.data[i]

    def column(self, j: int) -> int:
        c = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                c |= 1 << i
        return c

    def columns(self) -> tuple[int, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    # algebra
    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, self.columns())

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise SizeMismatch(self.cols, other.rows, "inner dimension")
        out = []
        for r in self.data:
            acc = 0
            for k in bits_of(r):
                acc ^= other.data[k]
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch(self.rows * self.cols, other.rows * other.cols, "shape")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.transpose().data == self.data

    def diagonal(self) -> int:
        """Diagonal as a bit set (bit i set iff entry (i, i) is 1)."""
        d = 0
        for i in range(min(self.rows, self.cols)):
            d |= ((self.data[i] >> i) & 1) << i
        return d

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise SizeMismatch(self.cols, other.cols, "column count")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def rank(self) -> int:
        return rref(self)[1]

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_lists())


def rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of integer rows.

    Returns the nonzero reduced rows ordered by pivot and the pivot columns.
    Column 0 is processed first.
    """
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for c in range(ncols):
        bit = 1 << c
        for idx, r in enumerate(work):
            if r & bit:
                piv = work.pop(idx)
                break
        else:
            continue
        work = [r ^ piv if r & bit else r for r in work]
        out = [r ^ piv if r & bit else r for r in out]
        out.append(piv)
        pivots.append(c)
        if not work:
            break
    return out, pivots


def rref(M: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form over F2.

    Returns ``(R, rank, pivots)``. ``R`` has the same shape as ``M``; zero
    rows are moved to the bottom.
    """
    out, pivots = rref_rows(M.data, M.cols)
    rank = len(out)
    R = BitMatrix(M.rows, M.cols, tuple(out) + (0,) * (M.rows - rank))
    return R, rank, pivots


def rank_of(vectors: Iterable[int]) -> int:
    """Rank of a family of integer vectors (XOR basis insertion)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def column_canonical(M: BitMatrix) -> BitMatrix:
    """Column-reduced echelon basis of the column space of ``M``.

    The result has ``rank(M)`` columns. Two matrices with the same column
    space give identical outputs.
    """
    cols, _ = rref_rows(M.columns(), M.rows)
    return BitMatrix.from_columns(cols, M.rows)


def det_rows(rows: Sequence[int]) -> int:
    """Determinant over F2 of a square matrix given as row integers."""
    return 1 if rank_of(rows) == len(rows) else 0


def det(M: BitMatrix) -> int:
    if M.rows != M.cols:
        raise NotSquare(f"det of a {M.rows}x{M.cols} matrix")
    return det_rows(M.data)


def submatrix(M: BitMatrix, rows: Sequence[int], cols: Sequence[int]) -> BitMatrix:
    for i in rows:
        if not 0 <= i < M.rows:
            raise IndexOutOfRange(f"row {i} out of range")
    for j in cols:
        if not 0 <= j < M.cols:
            raise IndexOutOfRange(f"column {j} out of range")
    data = []
    for i in rows:
        r = M.data[i]
        packed = 0
        for k, j in enumerate(cols):
            packed |= ((r >> j) & 1) << k
        data.append(packed)
    return BitMatrix(len(rows), len(cols), tuple(data))


def minor(M: BitMatrix, rows: Sequence[int], cols: Sequence[int]) -> int:
    """Determinant of the submatrix on ``rows`` x ``cols``; the empty minor is 1."""
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise SizeMismatch(len(rows), len(cols), "minor index set")
    return det(submatrix(M, rows, cols))


def inverse(M: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix; raises on singular input."""
    if M.rows != M.cols:
        raise NotSquare(f"inverse of a {M.rows}x{M.cols} matrix")
    n = M.rows
    aug = [r | (1 << (n + i)) for i, r in enumerate(M.data)]
    out, pivots = rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(out) < n:
        raise ValueError("singular matrix")
    return BitMatrix(n, n, tuple(r >> n for r in out[:n]))

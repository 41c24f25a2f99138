"""Maximal isotropic subspaces of F2^{2n} (Lagrangians).

A Lagrangian is stored by its canonical column basis: ``n`` integers of
``2n`` bits each, where bits ``0..n-1`` are the mu (Z) block and bits
``n..2n-1`` the nu (X) block. The canonical basis is the reduced echelon
form of the columns with pivots taken from bit 0 upward, so a subspace
whose mu block is invertible is stored exactly as ``[I; S]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import _kernels
from ._kernels._masks import sym_code_to_rows, sym_pairs
from .errors import BoundExceeded, NotIndependent, NotIsotropic, NotSymmetric, SizeMismatch
from .f2core import BitMatrix, low_mask, parity, rank_of
from .pauli import PauliOp, StabilizerGroup, group_from_generators

ENUMERATION_BOUND = 6


def omega(u: int, v: int, n: int) -> int:
    """Symplectic form of two 2n-bit vectors, J = [[0, I], [I, 0]]."""
    m = low_mask(n)
    return parity(((u & m) & (v >> n)) ^ ((u >> n) & (v & m)))


def canonical_columns(vectors: Sequence[int], n: int) -> tuple[int, ...]:
    """Reduced echelon basis of the span, pivots at lowest set bits.

    Same output as ``rref_rows(vectors, 2n)``, specialised for speed: each
    basis vector is keyed by its lowest bit, so reduction only ever moves
    the lowest bit upward.
    """
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            low = v & -v
            b = basis.get(low)
            if b is None:
                basis[low] = v
                break
            v ^= b
    pivots = sorted(basis)
    for q in pivots:
        bq = basis[q]
        for p in pivots:
            if p >= q:
                break
            if basis[p] & q:
                basis[p] ^= bq
    return tuple(basis[p] for p in pivots)


def swap_blocks(v: int, T: int, n: int) -> int:
    """Exchange mu_t and nu_t for every t in the bit set ``T``."""
    lo = v & T
    hi = (v >> n) & T
    return (v & ~(T | (T << n))) | hi | (lo << n)


@dataclass(frozen=True)
class Lagrangian:
    n: int
    columns: tuple[int, ...]

    @classmethod
    def from_vectors(cls, n: int, vectors: Sequence[int], check: bool = True) -> "Lagrangian":
        vectors = list(vectors)
        if check:
            if len(vectors) != n or rank_of(vectors) != n:
                raise NotIndependent(f"need {n} independent vectors")
            for i in range(n):
                for j in range(i + 1, n):
                    if omega(vectors[i], vectors[j], n):
                        raise NotIsotropic(f"columns {i + 1} and {j + 1} are not orthogonal")
        return cls(n, canonical_columns(vectors, n))

    @classmethod
    def from_matrix(cls, M: BitMatrix) -> "Lagrangian":
        if M.rows % 2:
            raise SizeMismatch(M.rows, M.rows + 1, "row count (must be even)")
        return cls.from_vectors(M.rows // 2, M.columns())

    @classmethod
    def from_chart(cls, T: int, S: BitMatrix) -> "Lagrangian":
        """``HAD_T`` applied to ``span[I; S]``."""
        if not S.is_symmetric():
            raise NotSymmetric("chart matrix must be symmetric")
        n = S.rows
        vecs = [swap_blocks((1 << j) | (S.column(j) << n), T, n) for j in range(n)]
        return cls(n, canonical_columns(vecs, n))

    @property
    def basis(self) -> BitMatrix:
        """The 2n x n canonical basis matrix."""
        return BitMatrix.from_columns(self.columns, 2 * self.n)

    def mu_block(self) -> BitMatrix:
        m = low_mask(self.n)
        return BitMatrix.from_columns([c & m for c in self.columns], self.n)

    def nu_block(self) -> BitMatrix:
        return BitMatrix.from_columns([c >> self.n for c in self.columns], self.n)

    def swap(self, T: int) -> "Lagrangian":
        vecs = [swap_blocks(c, T, self.n) for c in self.columns]
        return Lagrangian(self.n, canonical_columns(vecs, self.n))

    def contains(self, v: int) -> bool:
        return rank_of(list(self.columns) + [v]) == self.n

    def __str__(self) -> str:
        return str(self.basis)


def is_isotropic(M: BitMatrix) -> bool:
    if M.rows % 2:
        raise SizeMismatch(M.rows, M.rows + 1, "row count (must be even)")
    n = M.rows // 2
    cols = M.columns()
    return all(omega(cols[i], cols[j], n) == 0 for i in range(len(cols)) for j in range(i + 1, len(cols)))


def lagrangian_from_group(S: StabilizerGroup) -> Lagrangian:
    return Lagrangian.from_vectors(S.n, S.points())


def group_from_lagrangian(L: Lagrangian) -> StabilizerGroup:
    """Positive Hermitian generators read off the canonical basis."""
    n = L.n
    m = low_mask(n)
    gens = []
    for c in L.columns:
        mu = c & m
        nu = c >> n
        gens.append(PauliOp(n, 3 * (mu & nu).bit_count(), mu, nu))
    return group_from_generators(gens, n)


@lru_cache(maxsize=None)
def graded_lex_subsets(n: int) -> tuple[int, ...]:
    """Subsets of {0..n-1} as bit sets, by cardinality then lexicographically."""
    from itertools import combinations

    out = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for t in combo:
                mask |= 1 << t
            out.append(mask)
    return tuple(out)


def _chart_at(L: Lagrangian, T: int) -> BitMatrix | None:
    n = L.n
    cols = canonical_columns([swap_blocks(c, T, n) for c in L.columns], n)
    m = low_mask(n)
    if any((c & m) != (1 << j) for j, c in enumerate(cols)):
        return None
    return BitMatrix.from_columns([c >> n for c in cols], n)


def chart_form(L: Lagrangian) -> tuple[int, BitMatrix]:
    """Least subset ``T`` (graded-lex) whose block swap makes the mu block invertible, and the chart matrix.

    ``T`` is returned as a bit set; ``L == Lagrangian.from_chart(T, S)``.
    """
    for T in graded_lex_subsets(L.n):
        S = _chart_at(L, T)
        if S is not None:
            return T, S
    raise AssertionError("chart covering failed; input is not Lagrangian")


def symmetric_from_code(code: int, n: int) -> BitMatrix:
    return BitMatrix(n, n, tuple(sym_code_to_rows(code, n)))


def enumerate_lagrangians(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Lagrangian]:
    """Every Lagrangian in F2^{2n} exactly once.

    Candidates are ``HAD_T span[I; S]`` over all subsets T and symmetric S.
    Up to ``n = 5`` duplicates are removed by canonical basis; at ``n = 6``
    the 134M candidates are deduplicated by their minor-vector keys, which
    the compiled kernel computes in bulk.
    """
    if n < 1 or n > bound:
        raise BoundExceeded(f"enumeration supports 1 <= n <= {bound}")
    P = len(sym_pairs(n))
    if n <= 5:
        seen: set[tuple[int, ...]] = set()
        base = [[(1 << j) | (c << n) for j, c in enumerate(_columns_of_code(code, n))] for code in range(1 << P)]
        for T in graded_lex_subsets(n):
            for vecs in base:
                cols = canonical_columns([swap_blocks(v, T, n) for v in vecs], n)
                if cols not in seen:
                    seen.add(cols)
                    yield Lagrangian(n, cols)
        return
    yield from _enumerate_by_points(n)


def _columns_of_code(code: int, n: int) -> list[int]:
    # symmetric, so rows are columns
    return sym_code_to_rows(code, n)


def _enumerate_by_points(n: int) -> Iterator[Lagrangian]:
    import numpy as np

    chart = _kernels.chart_points(n)
    idx = np.arange(1 << n, dtype=np.uint64)
    seen = np.zeros(0, dtype=np.uint64)
    for T in graded_lex_subsets(n):
        # HAD_T permutes coordinates: z'_U = z_{U xor T}
        perm = idx ^ np.uint64(T)
        keys = _permute_bits(chart, perm, n)
        fresh, first = np.unique(keys, return_index=True)
        mask = ~np.isin(fresh, seen, assume_unique=True)
        for code in np.sort(first[mask]):
            S = symmetric_from_code(int(code), n)
            yield Lagrangian.from_chart(T, S)
        seen = np.union1d(seen, fresh[mask])


def _permute_bits(z, perm, n: int):
    import numpy as np

    out = np.zeros_like(z)
    one = np.uint64(1)
    for src in range(1 << n):
        out |= ((z >> np.uint64(src)) & one) << np.uint64(int(perm[src]))
    return out


def graph_form(L: Lagrangian):
    """Loopless graph matrix theta and a local witness with ``witness . L = span[theta; I]``.

    The witness first applies HAD on the least subset T (graded-lex) that
    makes the nu block invertible, then SQZ on every slot where the
    resulting matrix has a diagonal one.
    """
    from .groupaction import GroupElement, act_on_lagrangian, compose

    n = L.n
    for T in graded_lex_subsets(n):
        # nu block of HAD_T(L) invertible <=> mu block of HAD_{T^c}(L) invertible
        theta = _chart_at(L, low_mask(n) ^ T)
        if theta is None:
            continue
        diag = theta.diagonal()
        witness = compose(GroupElement.local(n, sqz=diag), GroupElement.local(n, had=T))
        theta0 = BitMatrix(n, n, tuple(r & ~(1 << i) for i, r in enumerate(theta.data)))
        target = Lagrangian.from_vectors(n, [theta0.column(j) | (1 << (n + j)) for j in range(n)], check=False)
        if act_on_lagrangian(witness, L) != target:
            raise AssertionError("graph_form witness failed verification")
        return theta0, witness
    raise AssertionError("no graph chart found; input is not Lagrangian")

"""Phase-tracked n-qubit Pauli arithmetic and stabilizer groups.

An operator is stored as ``i^k * Z^mu X^nu`` where ``mu`` and ``nu`` are
n-bit integers (bit q-1 is qubit q) and the Z factor sits to the left of
the X factor on every qubit. With that fixed order the multiplication phase
is a single inner product, see :func:`pauli_mul`.

The Y matrix is [[0, -i], [i, 0]] = -i ZX, so ``Y`` is stored as
``(k=3, mu=1, nu=1)`` and ``-Y`` as ``k=1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    NotAStabilizerStateGroup,
    NotCommuting,
    NotIndependent,
    ParseError,
    SizeMismatch,
    WrongCount,
)
from .f2core import BitVector, low_mask, parity, popcount, rank_of


@dataclass(frozen=True)
class PauliOp:
    n: int
    k: int
    mu: int
    nu: int

    def __post_init__(self):
        if not 0 <= self.k < 4:
            object.__setattr__(self, "k", self.k % 4)
        m = low_mask(self.n)
        if self.mu & ~m or self.nu & ~m or self.mu < 0 or self.nu < 0:
            raise ValueError("mu/nu have bits beyond n")

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliOp":
        """One-letter operator on a 0-based qubit, identity elsewhere."""
        p = parse_pauli(letter)
        return cls(n, p.k, p.mu << qubit, p.nu << qubit)

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return pauli_mul(self, other)

    def __str__(self) -> str:
        return format_pauli(self)

    @property
    def hermitian_phase(self) -> int:
        """Phase exponent of the +Hermitian operator with the same (mu, nu)."""
        return (3 * popcount(self.mu & self.nu)) % 4

    @property
    def sign_offset(self) -> int:
        """``k`` minus the Hermitian phase, in Z/4 (0: +P, 2: -P, 1/3: +-iP)."""
        return (self.k - self.hermitian_phase) % 4

    def is_hermitian(self) -> bool:
        return self.sign_offset % 2 == 0

    def is_identity_up_to_phase(self) -> bool:
        return self.mu == 0 and self.nu == 0

    def commutes(self, other: "PauliOp") -> bool:
        return symplectic_form(self, other) == 0

    def weight(self) -> int:
        return popcount(self.mu | self.nu)

    def inverse(self) -> "PauliOp":
        # (Z^mu X^nu)^-1 = X^nu Z^mu = (-1)^{mu.nu} Z^mu X^nu
        return PauliOp(self.n, (-self.k + 2 * popcount(self.mu & self.nu)) % 4, self.mu, self.nu)


def _check_n(a: int, b: int) -> None:
    if a != b:
        raise SizeMismatch(a, b, "qubit count")


def pauli_mul(A: PauliOp, B: PauliOp) -> PauliOp:
    """Product ``A * B``.

    Moving each X of ``A`` past a Z of ``B`` on the same qubit costs a factor
    -1, hence ``k = kA + kB + 2 |nuA & muB|``.
    """
    _check_n(A.n, B.n)
    k = (A.k + B.k + 2 * popcount(A.nu & B.mu)) % 4
    return PauliOp(A.n, k, A.mu ^ B.mu, A.nu ^ B.nu)


def symplectic_form(A: PauliOp, B: PauliOp) -> int:
    _check_n(A.n, B.n)
    return parity((A.mu & B.nu) ^ (A.nu & B.mu))


def to_point(A: PauliOp) -> BitVector:
    """Symplectic coordinates ``(mu_1..mu_n, nu_1..nu_n)`` as a 2n-bit vector."""
    if A.mu == 0 and A.nu == 0:
        raise ValueError("identity has no projective point")
    return BitVector(2 * A.n, A.mu | (A.nu << A.n))


def from_point(n: int, v: int, k: int | None = None) -> PauliOp:
    """Inverse of :func:`to_point`; default phase gives the +Hermitian operator."""
    mu = v & low_mask(n)
    nu = v >> n
    if k is None:
        k = 3 * popcount(mu & nu)
    return PauliOp(n, k % 4, mu, nu)


_PREFIX_K = {"": 0, "+": 0, "-": 2, "i": 1, "+i": 1, "-i": 3}
_FORMAT_PREFIX = {0: "", 2: "-", 1: "i", 3: "-i"}
_PAULI_RE = re.compile(r"^([+-]?i?)([IXYZ]+)$")


def parse_pauli(s: str) -> PauliOp:
    """Parse ``[+|-|i|-i]?[IXYZ]+``; the first letter is qubit 1."""
    m = _PAULI_RE.match(s.strip())
    if not m:
        raise ParseError(f"malformed Pauli string: {s!r}")
    prefix, letters = m.groups()
    mu = nu = 0
    n_y = 0
    for q, ch in enumerate(letters):
        if ch in "ZY":
            mu |= 1 << q
        if ch in "XY":
            nu |= 1 << q
        if ch == "Y":
            n_y += 1
    k = (_PREFIX_K[prefix] + 3 * n_y) % 4
    return PauliOp(len(letters), k, mu, nu)


def format_pauli(A: PauliOp) -> str:
    letters = []
    for q in range(A.n):
        z = (A.mu >> q) & 1
        x = (A.nu >> q) & 1
        letters.append("IXZY"[2 * z + x])
    return _FORMAT_PREFIX[A.sign_offset] + "".join(letters)


def parse_generators(s: str) -> list[PauliOp]:
    """Split a comma and/or whitespace separated generator list."""
    tokens = [t for t in re.split(r"[\s,]+", s.strip().strip("<>⟨⟩")) if t]
    if not tokens:
        raise ParseError("empty generator list")
    return [parse_pauli(t) for t in tokens]


@dataclass(frozen=True)
class StabilizerGroup:
    """n commuting, independent Pauli operators on n qubits."""

    n: int
    generators: tuple[PauliOp, ...]

    def __str__(self) -> str:
        return ", ".join(format_pauli(g) for g in self.generators)

    def points(self) -> list[int]:
        return [g.mu | (g.nu << self.n) for g in self.generators]


def group_from_generators(gs: Sequence[PauliOp], n: int | None = None) -> StabilizerGroup:
    gs = list(gs)
    if n is None:
        if not gs:
            raise WrongCount("no generators")
        n = gs[0].n
    for g in gs:
        _check_n(n, g.n)
    if len(gs) != n:
        raise WrongCount(f"expected {n} generators, got {len(gs)}")
    for i in range(n):
        for j in range(i + 1, n):
            if symplectic_form(gs[i], gs[j]):
                raise NotCommuting(i, j)
    if rank_of(g.mu | (g.nu << n) for g in gs) != n:
        raise NotIndependent("generator (mu|nu) vectors are linearly dependent")
    return StabilizerGroup(n, tuple(gs))


def parse_group(s: str) -> StabilizerGroup:
    return group_from_generators(parse_generators(s))


def contains_minus_identity(S: StabilizerGroup) -> bool:
    """Whether -I lies in the group generated by ``S``.

    Each generator squares to ``(-1)^(k + mu.nu)``. If one of them squares
    to -I we are done. Otherwise every generator is +-Hermitian, and since
    they commute every product is +-Hermitian too, so the only products
    proportional to I are those whose (mu|nu) vectors sum to zero. By
    independence that is only the empty product, which is +I. Hence -I is
    in the group iff some generator has ``k + |mu & nu|`` odd.
    """
    return any((g.k + popcount(g.mu & g.nu)) & 1 for g in S.generators)


def sign_normalize(S: StabilizerGroup) -> tuple[StabilizerGroup, BitVector]:
    """Split each generator into sign and +Hermitian representative.

    Returns ``(S0, gamma)`` with ``S.generators[i] = (-1)^gamma_i S0.generators[i]``.
    """
    if contains_minus_identity(S):
        raise NotAStabilizerStateGroup("group contains -I")
    gamma = 0
    reps = []
    for i, g in enumerate(S.generators):
        gamma |= (g.sign_offset // 2) << i
        reps.append(PauliOp(g.n, g.hermitian_phase, g.mu, g.nu))
    return StabilizerGroup(S.n, tuple(reps)), BitVector(S.n, gamma)


def expand_group(S: StabilizerGroup) -> list[PauliOp]:
    """All 2^n subset products of the generators (test oracle, small n)."""
    out = []
    for subset in range(1 << S.n):
        acc = PauliOp.identity(S.n)
        for i, g in enumerate(S.generators):
            if (subset >> i) & 1:
                acc = pauli_mul(acc, g)
        out.append(acc)
    return out


def random_pauli(n: int, rng) -> PauliOp:
    """Uniform element of the n-qubit Pauli group (``rng``: random.Random)."""
    return PauliOp(n, rng.randrange(4), rng.getrandbits(n) if n else 0, rng.getrandbits(n) if n else 0)

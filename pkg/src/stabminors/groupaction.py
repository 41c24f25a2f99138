"""The group SL(2,F2)^n x| S_n and its three actions.

An element ``(slots, perm)`` acts by first applying the 2x2 matrix
``slots[i]`` on tensor slot ``i``, then moving slot ``i`` to position
``perm[i]``. On a Pauli operator that means conjugation by a local Clifford
unitary followed by a relabelling of qubits; on a Lagrangian the block
diagonal symplectic matrix followed by the same relabelling of mu and nu
rows; on a minor vector the 2x2 matrices act slot by slot on the tensor
power F2^2 x ... x F2^2 and ``z'_{perm(T)} = z_T``.

Composition: ``compose(g1, g2)`` acts as "``g2`` first, then ``g1``".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ._kernels._masks import full_mask, slot_masks
from .errors import ParseError, SizeMismatch
from .f2core import bits_of, low_mask
from .lagrangian import Lagrangian, canonical_columns
from .pauli import PauliOp, StabilizerGroup, pauli_mul


@dataclass(frozen=True)
class Local2:
    """Invertible 2x2 matrix [[a, b], [c, d]] over F2 acting as mu' = a mu + b nu, nu' = c mu + d nu."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if ((self.a & self.d) ^ (self.b & self.c)) != 1:
            raise ValueError("Local2 must be invertible")

    def __matmul__(self, o: "Local2") -> "Local2":
        return Local2(
            (self.a & o.a) ^ (self.b & o.c),
            (self.a & o.b) ^ (self.b & o.d),
            (self.c & o.a) ^ (self.d & o.c),
            (self.c & o.b) ^ (self.d & o.d),
        )

    def inverse(self) -> "Local2":
        # over F2 with det 1 the inverse is the adjugate
        return Local2(self.d, self.b, self.c, self.a)

    @property
    def name(self) -> str:
        return _NAME_OF[self]

    def is_identity(self) -> bool:
        return self == IDENT

    def __str__(self) -> str:
        return self.name


IDENT = Local2(1, 0, 0, 1)
HAD = Local2(0, 1, 1, 0)
SQZ = Local2(1, 1, 0, 1)

# Fixed word for each element, as a product of H and S (square root of Z)
# unitaries. The leftmost letter is the outermost factor, so it acts last.
WORDS: dict[str, tuple[str, ...]] = {
    "I": (),
    "H": ("H",),
    "S": ("S",),
    "HS": ("H", "S"),
    "SH": ("S", "H"),
    "HSH": ("H", "S", "H"),
}
_LETTER_MATRIX = {"H": HAD, "S": SQZ}


def _word_matrix(word: Sequence[str]) -> Local2:
    m = IDENT
    for letter in word:
        m = m @ _LETTER_MATRIX[letter]
    return m


ELEMENTS: dict[str, Local2] = {name: _word_matrix(w) for name, w in WORDS.items()}
_NAME_OF = {m: name for name, m in ELEMENTS.items()}
assert len(_NAME_OF) == 6

# Single-qubit conjugation U P U^dagger for the two letters, as (k, mu, nu):
# H: X <-> Z.  S: X -> Y = i^3 ZX, Z -> Z.
_LETTER_IMAGES = {
    "H": {"Z": (0, 0, 1), "X": (0, 1, 0)},
    "S": {"Z": (0, 1, 0), "X": (3, 1, 1)},
}


def _conj_letter(letter: str, p: PauliOp) -> PauliOp:
    imgs = _LETTER_IMAGES[letter]
    out = PauliOp(1, p.k, 0, 0)
    if p.mu:
        out = pauli_mul(out, PauliOp(1, *imgs["Z"]))
    if p.nu:
        out = pauli_mul(out, PauliOp(1, *imgs["X"]))
    return out


@lru_cache(maxsize=None)
def conjugation_table(name: str) -> dict[tuple[int, int], tuple[int, int, int]]:
    """``(mu, nu) -> (dk, mu', nu')`` for conjugation by the word of ``name``."""
    word = WORDS[name]
    table = {}
    for mu in (0, 1):
        for nu in (0, 1):
            p = PauliOp(1, 0, mu, nu)
            for letter in reversed(word):
                p = _conj_letter(letter, p)
            table[(mu, nu)] = (p.k, p.mu, p.nu)
    return table


def _check_perm(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")


@dataclass(frozen=True)
class GroupElement:
    slots: tuple[Local2, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if len(self.slots) != len(self.perm):
            raise SizeMismatch(len(self.slots), len(self.perm), "slots/perm length")
        _check_perm(self.perm, len(self.perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls((IDENT,) * n, tuple(range(n)))

    @classmethod
    def local(cls, n: int, had: int = 0, sqz: int = 0) -> "GroupElement":
        """HAD on the slots in bit set ``had`` and SQZ on those in ``sqz`` (one matrix per slot)."""
        slots = []
        for i in range(n):
            m = IDENT
            if (had >> i) & 1:
                m = HAD @ m
            if (sqz >> i) & 1:
                m = SQZ @ m
            slots.append(m)
        return cls(tuple(slots), tuple(range(n)))

    @classmethod
    def from_slots(cls, slots: Sequence[Local2]) -> "GroupElement":
        return cls(tuple(slots), tuple(range(len(slots))))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "GroupElement":
        return cls((IDENT,) * len(perm), tuple(perm))

    def is_identity(self) -> bool:
        return self == GroupElement.identity(self.n)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def __str__(self) -> str:
        return format_element(self)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """The element acting as ``g2`` followed by ``g1``."""
    if g1.n != g2.n:
        raise SizeMismatch(g1.n, g2.n, "element size")
    slots = tuple(g1.slots[g2.perm[i]] @ g2.slots[i] for i in range(g2.n))
    perm = tuple(g1.perm[g2.perm[i]] for i in range(g2.n))
    return GroupElement(slots, perm)


def inverse(g: GroupElement) -> GroupElement:
    n = g.n
    inv = [0] * n
    for i, p in enumerate(g.perm):
        inv[p] = i
    return GroupElement(tuple(g.slots[inv[i]].inverse() for i in range(n)), tuple(inv))


def generators(n: int) -> list[GroupElement]:
    """HAD on each slot, SQZ on each slot, then adjacent transpositions.

    The order matches the generator numbering of the minor-vector kernels.
    """
    out = [GroupElement.local(n, had=1 << j) for j in range(n)]
    out += [GroupElement.local(n, sqz=1 << j) for j in range(n)]
    for j in range(n - 1):
        p = list(range(n))
        p[j], p[j + 1] = p[j + 1], p[j]
        out.append(GroupElement.permutation(p))
    return out


def _permute_bits(x: int, perm: Sequence[int]) -> int:
    out = 0
    for i in bits_of(x):
        out |= 1 << perm[i]
    return out


def act_on_pauli(g: GroupElement, A: PauliOp) -> PauliOp:
    if g.n != A.n:
        raise SizeMismatch(g.n, A.n, "qubit count")
    k = A.k
    mu = nu = 0
    for i, m in enumerate(g.slots):
        a = (A.mu >> i) & 1
        b = (A.nu >> i) & 1
        dk, m2, n2 = conjugation_table(m.name)[(a, b)]
        k += dk
        mu |= m2 << i
        nu |= n2 << i
    return PauliOp(A.n, k % 4, _permute_bits(mu, g.perm), _permute_bits(nu, g.perm))


def act_on_group(g: GroupElement, S: StabilizerGroup) -> StabilizerGroup:
    """Conjugate every generator, then move generator ``i`` to position ``perm[i]``."""
    if g.n != S.n:
        raise SizeMismatch(g.n, S.n, "qubit count")
    images = [act_on_pauli(g, M) for M in S.generators]
    out: list[PauliOp] = [images[0]] * S.n
    for i, img in enumerate(images):
        out[g.perm[i]] = img
    return StabilizerGroup(S.n, tuple(out))


def act_on_vector(g: GroupElement, v: int) -> int:
    """Symplectic image of a 2n-bit (mu | nu) vector."""
    n = g.n
    m = low_mask(n)
    mu = v & m
    nu = v >> n
    mu2 = nu2 = 0
    for i, s in enumerate(g.slots):
        a = (mu >> i) & 1
        b = (nu >> i) & 1
        mu2 |= ((s.a & a) ^ (s.b & b)) << i
        nu2 |= ((s.c & a) ^ (s.d & b)) << i
    return _permute_bits(mu2, g.perm) | (_permute_bits(nu2, g.perm) << n)


def act_on_lagrangian(g: GroupElement, L: Lagrangian) -> Lagrangian:
    if g.n != L.n:
        raise SizeMismatch(g.n, L.n, "qubit count")
    return Lagrangian(L.n, canonical_columns([act_on_vector(g, c) for c in L.columns], L.n))


def act_on_bits(g: GroupElement, z: int) -> int:
    """Action on a raw 2^n-bit minor vector."""
    n = g.n
    hi_masks = slot_masks(n)
    full = full_mask(n)
    for i, m in enumerate(g.slots):
        if m == IDENT:
            continue
        s = 1 << i
        hmask = hi_masks[i]
        lo = z & full & ~hmask
        hi = (z & hmask) >> s
        new_lo = (lo if m.a else 0) ^ (hi if m.b else 0)
        new_hi = (lo if m.c else 0) ^ (hi if m.d else 0)
        z = new_lo | (new_hi << s)
    if any(p != i for i, p in enumerate(g.perm)):
        z = _permute_index_bits(z, g.perm)
    return z


def _permute_index_bits(z: int, perm: Sequence[int]) -> int:
    out = 0
    for idx in bits_of(z):
        out |= 1 << _permute_bits(idx, perm)
    return out


def act_on_point(g: GroupElement, p):
    from .minorvariety import MinorPoint

    if g.n != p.n:
        raise SizeMismatch(g.n, p.n, "qubit count")
    return MinorPoint(p.n, act_on_bits(g, p.bits))


# text form: "H@1 S@3 perm=(1 2)"

def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


def format_element(g: GroupElement) -> str:
    parts = [f"{m.name}@{i + 1}" for i, m in enumerate(g.slots) if m != IDENT]
    cyc = _cycles(g.perm)
    if cyc:
        parts.append("perm=" + "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc))
    return " ".join(parts) if parts else "id"


_SLOT_RE = re.compile(r"^(I|H|S|HS|SH|HSH)@(\d+)$")
_CYCLE_RE = re.compile(r"\(([\d\s]*)\)")


def parse_element(s: str, n: int) -> GroupElement:
    """Inverse of :func:`format_element`."""
    s = s.strip()
    slots = [IDENT] * n
    perm = list(range(n))
    if s in ("", "id"):
        return GroupElement.identity(n)
    perm_part = None
    if "perm=" in s:
        s, perm_part = s.split("perm=", 1)
    for tok in s.split():
        m = _SLOT_RE.match(tok)
        if not m:
            raise ParseError(f"bad slot token {tok!r}")
        i = int(m.group(2)) - 1
        if not 0 <= i < n:
            raise ParseError(f"slot {i + 1} out of range")
        slots[i] = ELEMENTS[m.group(1)]
    if perm_part is not None:
        body = perm_part.strip()
        cycles = _CYCLE_RE.findall(body)
        if _CYCLE_RE.sub("", body).strip():
            raise ParseError(f"bad permutation {perm_part!r}")
        used = set()
        for c in cycles:
            elems = [int(x) - 1 for x in c.split()]
            for x in elems:
                if not 0 <= x < n or x in used:
                    raise ParseError(f"bad permutation {perm_part!r}")
                used.add(x)
            for a, b in zip(elems, elems[1:] + elems[:1]):
                perm[a] = b
    return GroupElement(tuple(slots), tuple(perm))


def random_element(n: int, rng) -> GroupElement:
    names = list(ELEMENTS)
    slots = tuple(ELEMENTS[rng.choice(names)] for _ in range(n))
    perm = list(range(n))
    rng.shuffle(perm)
    return GroupElement(slots, tuple(perm))


def closure(gens: Sequence[GroupElement]) -> set[GroupElement]:
    """All products of the given elements (test oracle for small n)."""
    n = gens[0].n
    seen = {GroupElement.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = compose(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen

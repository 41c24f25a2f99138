from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabminors._kernels._masks import apply_generator, n_generators
from stabminors.errors import ParseError
from stabminors.f2core import BitMatrix
from stabminors.graphstates import graph_to_point, parse_graph
from stabminors.groupaction import (
    ELEMENTS,
    HAD,
    IDENT,
    SQZ,
    WORDS,
    GroupElement,
    Local2,
    act_on_bits,
    act_on_group,
    act_on_lagrangian,
    act_on_pauli,
    act_on_point,
    act_on_vector,
    closure,
    compose,
    conjugation_table,
    format_element,
    generators,
    inverse,
    parse_element,
)
from stabminors.lagrangian import Lagrangian, group_from_lagrangian, lagrangian_from_group, omega
from stabminors.minorvariety import MinorPoint, minor_point
from stabminors.pauli import PauliOp, parse_group, parse_pauli

from conftest import elements, paulis, symmetric

H1 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S1 = np.diag([1, 1j])
LETTER_U = {"H": H1, "S": S1}
Z = np.diag([1, -1]).astype(complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)


def word_unitary(name: str) -> np.ndarray:
    U = np.eye(2, dtype=complex)
    for letter in WORDS[name]:
        U = U @ LETTER_U[letter]
    return U


def dense_pauli(A: PauliOp) -> np.ndarray:
    out = np.array([[1]], dtype=complex)
    for q in range(A.n):
        f = np.eye(2, dtype=complex)
        if (A.mu >> q) & 1:
            f = Z
        if (A.nu >> q) & 1:
            f = f @ X
        out = np.kron(out, f)
    return (1j**A.k) * out


def dense_element(g: GroupElement) -> np.ndarray:
    """Local unitaries first, then qubit i moved to position perm[i] (qubit 1 = MSB)."""
    n = g.n
    U = np.array([[1]], dtype=complex)
    for s in g.slots:
        U = np.kron(U, word_unitary(s.name))
    P = np.zeros((1 << n, 1 << n))
    for b in range(1 << n):
        bits = [(b >> (n - 1 - q)) & 1 for q in range(n)]
        out = [0] * n
        for i in range(n):
            out[g.perm[i]] = bits[i]
        c = sum(bit << (n - 1 - q) for q, bit in enumerate(out))
        P[c, b] = 1
    return P @ U


def chart(S: BitMatrix) -> Lagrangian:
    n = S.rows
    return Lagrangian.from_vectors(n, [(1 << j) | (S.column(j) << n) for j in range(n)])


def lagrangians(n):
    return st.tuples(symmetric(n), elements(n)).map(lambda t: act_on_lagrangian(t[1], chart(t[0])))


# conjugation table against explicit unitaries


@pytest.mark.parametrize("name", sorted(ELEMENTS))
def test_conjugation_table_matches_unitaries(name):
    U = word_unitary(name)
    for (mu, nu), (dk, mu2, nu2) in conjugation_table(name).items():
        P = dense_pauli(PauliOp(1, 0, mu, nu))
        assert np.allclose(U @ P @ U.conj().T, dense_pauli(PauliOp(1, dk, mu2, nu2)))
        m = ELEMENTS[name]
        assert (mu2, nu2) == ((m.a & mu) ^ (m.b & nu), (m.c & mu) ^ (m.d & nu))


def test_letter_examples():
    g = GroupElement.from_slots([HAD])
    assert act_on_pauli(g, parse_pauli("Z")) == parse_pauli("X")
    g = GroupElement.from_slots([SQZ])
    assert act_on_pauli(g, parse_pauli("Y")) == parse_pauli("-X")


def test_local2_group():
    assert len(ELEMENTS) == 6
    for m in ELEMENTS.values():
        assert m @ m.inverse() == IDENT
        assert (m.a * m.d + m.b * m.c) % 2 == 1
    with pytest.raises(ValueError):
        Local2(1, 1, 1, 1)


@pytest.mark.parametrize("n,size", [(1, 6), (2, 72), (3, 1296)])
def test_closure_sizes(n, size):
    assert len(closure(generators(n))) == size


# examples


def test_permutation_on_pauli():
    g = GroupElement.permutation((1, 2, 0))
    assert act_on_pauli(g, parse_pauli("ZXI")) == parse_pauli("IZX")


def test_compose_permutations():
    a = GroupElement.permutation((1, 0, 2))
    b = GroupElement.permutation((0, 2, 1))
    ab = compose(a, b)
    for i in range(3):
        assert ab.perm[i] == a.perm[b.perm[i]]


def test_had_all_swaps_blocks():
    theta = parse_graph("1-2,2-3", 3).theta
    std = Lagrangian.from_vectors(3, [theta.column(j) | (1 << (3 + j)) for j in range(3)])
    g = GroupElement.local(3, had=0b111)
    assert act_on_lagrangian(g, std) == chart(theta)


def test_edge_swap_symmetry():
    theta = parse_graph("1-2", 2).theta
    L = chart(theta)
    assert act_on_lagrangian(GroupElement.permutation((1, 0)), L) == L


def test_reversal_fixes_path_point():
    p = graph_to_point(parse_graph("1-2,2-3,3-4,4-5", 5))
    assert act_on_point(GroupElement.permutation((4, 3, 2, 1, 0)), p) == p


def test_had_all_on_empty_point():
    g = GroupElement.local(4, had=0b1111)
    assert act_on_point(g, MinorPoint(4, 1)) == MinorPoint(4, 1 << 15)


def test_had_on_group():
    g = GroupElement.local(2, had=0b01)
    assert act_on_group(g, parse_group("ZI,IZ")) == parse_group("XI,IZ")


def test_element_text_round_trip_examples():
    g = parse_element("H@1 SH@3 perm=(1 2 3)", 3)
    assert g.perm == (1, 2, 0)
    assert format_element(g) == "H@1 SH@3 perm=(1 2 3)"
    assert format_element(GroupElement.identity(2)) == "id"
    for bad in ("Q@1", "H@4", "perm=(1 1)", "perm=(1 2)x"):
        with pytest.raises(ParseError):
            parse_element(bad, 3)


def test_kernel_generator_numbering():
    for n in range(1, 6):
        gens = generators(n)
        assert len(gens) == n_generators(n)
        full = (1 << (1 << n)) - 1
        for z in sorted({1, 0b1001 & full or 1, 0b0110 & full or 1, 0x6996 & full or 1, full}):
            for i, g in enumerate(gens):
                assert apply_generator(z, i, n) == act_on_bits(g, z)


# properties


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(elements(n), paulis(n))))
def test_pauli_action_matches_unitaries(args):
    g, A = args
    U = dense_element(g)
    assert np.allclose(U @ dense_pauli(A) @ U.conj().T, dense_pauli(act_on_pauli(g, A)))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_group_axioms(args):
    a, b, c = args
    n = a.n
    e = GroupElement.identity(n)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(e, a) == a == compose(a, e)
    assert compose(a, inverse(a)) == e == compose(inverse(a), a)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n), elements(n), lagrangians(n), paulis(n))))
def test_action_axioms(args):
    g, h, L, A = args
    gh = compose(g, h)
    assert act_on_lagrangian(gh, L) == act_on_lagrangian(g, act_on_lagrangian(h, L))
    p = minor_point(L)
    assert act_on_point(gh, p) == act_on_point(g, act_on_point(h, p))
    x = act_on_pauli(gh, A)
    y = act_on_pauli(g, act_on_pauli(h, A))
    assert (x.mu, x.nu) == (y.mu, y.nu) and (x.k - y.k) % 2 == 0
    e = GroupElement.identity(L.n)
    assert act_on_lagrangian(e, L) == L and act_on_point(e, p) == p and act_on_pauli(e, A) == A


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n), lagrangians(n))))
def test_commuting_square(args):
    g, L = args
    assert minor_point(act_on_lagrangian(g, L)) == act_on_point(g, minor_point(L))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n), lagrangians(n))))
def test_group_and_lagrangian_actions_agree(args):
    g, L = args
    S = group_from_lagrangian(L)
    assert lagrangian_from_group(act_on_group(g, S)) == act_on_lagrangian(g, L)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n), st.integers(0, (1 << 2 * n) - 1), st.integers(0, (1 << 2 * n) - 1))))
def test_symplectic_invariance(args):
    g, u, v = args
    n = g.n
    assert omega(act_on_vector(g, u), act_on_vector(g, v), n) == omega(u, v, n)


@given(st.integers(1, 6).flatmap(elements))
def test_element_text_round_trip(g):
    assert parse_element(format_element(g), g.n) == g

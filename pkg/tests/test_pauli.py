from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabminors.errors import NotAStabilizerStateGroup, NotCommuting, NotIndependent, ParseError, WrongCount
from stabminors.pauli import (
    PauliOp,
    StabilizerGroup,
    contains_minus_identity,
    expand_group,
    format_pauli,
    group_from_generators,
    parse_generators,
    parse_group,
    parse_pauli,
    pauli_mul,
    sign_normalize,
    symplectic_form,
    to_point,
)

from conftest import paulis

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
LETTER = {"I": I2, "X": X, "Y": Y, "Z": Z}
PREFIX = {"": 1, "-": -1, "i": 1j, "-i": -1j}


def dense(A: PauliOp) -> np.ndarray:
    """Matrix of i^k Z^mu X^nu, qubit 1 as the leftmost tensor factor."""
    out = np.array([[1]], dtype=complex)
    for q in range(A.n):
        f = I2
        if (A.mu >> q) & 1:
            f = Z
        if (A.nu >> q) & 1:
            f = f @ X
        out = np.kron(out, f)
    return (1j**A.k) * out


def dense_string(s: str) -> np.ndarray:
    sign = s.rstrip("IXYZ")
    out = np.array([[1]], dtype=complex)
    for ch in s[len(sign):]:
        out = np.kron(out, LETTER[ch])
    return PREFIX[sign] * out


# examples


def test_x_times_z():
    A = PauliOp(1, 0, 0, 1)
    B = PauliOp(1, 0, 1, 0)
    assert pauli_mul(A, B) == PauliOp(1, 2, 1, 1)
    assert np.allclose(dense(pauli_mul(A, B)), X @ Z)
    assert np.allclose(X @ Z, -1j * Y)


def test_inverse_and_zx_square():
    A = PauliOp(3, 1, 0b101, 0b110)
    assert pauli_mul(A, A.inverse()) == PauliOp.identity(3)
    zx = PauliOp(1, 0, 1, 1)
    assert pauli_mul(zx, zx) == PauliOp(1, 2, 0, 0)


def test_symplectic_examples():
    xi, zi = parse_pauli("XI"), parse_pauli("ZI")
    assert symplectic_form(xi, zi) == 1
    assert symplectic_form(parse_pauli("XZ"), parse_pauli("ZX")) == 0
    assert symplectic_form(xi, xi) == 0


def test_to_point_examples():
    assert str(to_point(parse_pauli("ZI"))) == "1000"
    assert str(to_point(parse_pauli("IX"))) == "0001"
    assert str(to_point(PauliOp(1, 1, 1, 1))) == "11"


def test_parse_examples():
    assert parse_pauli("ZXIII") == PauliOp(5, 0, 0b00001, 0b00010)
    # Y = -iZX, so Y carries k = 3 and -Y carries k = 1
    assert parse_pauli("Y") == PauliOp(1, 3, 1, 1)
    assert parse_pauli("-Y") == PauliOp(1, 1, 1, 1)
    assert np.allclose(dense(parse_pauli("Y")), Y)
    for bad in ("", "XQ", "--X", "i", "x"):
        with pytest.raises(ParseError):
            parse_pauli(bad)


def test_parse_generators_separators():
    gens = parse_generators("<ZXI, XZX IXZ>")
    assert [format_pauli(g) for g in gens] == ["ZXI", "XZX", "IXZ"]
    with pytest.raises(ParseError):
        parse_generators(" , ")


def test_group_validation():
    group_from_generators([PauliOp.single(3, q, "Z") for q in range(3)])
    parse_group("XX,ZZ")
    with pytest.raises(NotCommuting):
        parse_group("XI,ZI")
    with pytest.raises(NotIndependent):
        parse_group("ZZ,-ZZ")
    with pytest.raises(WrongCount):
        parse_group("ZZ")


def test_minus_identity_examples():
    assert not contains_minus_identity(parse_group("ZI,IX"))
    assert contains_minus_identity(StabilizerGroup(1, (PauliOp(1, 0, 1, 1),)))
    assert not contains_minus_identity(StabilizerGroup(1, (PauliOp(1, 1, 1, 1),)))


def test_sign_normalize_examples():
    S0, gamma = sign_normalize(parse_group("XX,ZZ"))
    assert gamma.value == 0 and S0 == parse_group("XX,ZZ")
    S0, gamma = sign_normalize(parse_group("-XX,ZZ"))
    assert gamma.to_list() == [1, 0] and S0 == parse_group("XX,ZZ")
    S0, gamma = sign_normalize(parse_group("-Y"))
    assert S0 == parse_group("Y") and gamma.to_list() == [1]
    with pytest.raises(NotAStabilizerStateGroup):
        sign_normalize(StabilizerGroup(1, (PauliOp(1, 0, 1, 1),)))


# properties

pauli_strings = st.tuples(
    st.sampled_from(["", "-", "i", "-i"]),
    st.text(alphabet="IXYZ", min_size=1, max_size=5),
).map("".join)


@given(pauli_strings)
def test_parse_matches_dense_letters(s):
    assert np.allclose(dense(parse_pauli(s)), dense_string(s))


@given(pauli_strings)
def test_format_parse_round_trip(s):
    assert format_pauli(parse_pauli(s)) == s


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(paulis(n), paulis(n))))
def test_product_matches_dense(AB):
    A, B = AB
    assert np.allclose(dense(pauli_mul(A, B)), dense(A) @ dense(B))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(paulis(n), paulis(n))))
def test_commutation_matches_dense(AB):
    A, B = AB
    a, b = dense(A), dense(B)
    assert np.allclose(a @ b, b @ a) == (symplectic_form(A, B) == 0)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(paulis(n), paulis(n), paulis(n))))
def test_associative_and_point_additive(ABC):
    A, B, C = ABC
    assert pauli_mul(pauli_mul(A, B), C) == pauli_mul(A, pauli_mul(B, C))
    AB = pauli_mul(A, B)
    assert (AB.mu, AB.nu) == (A.mu ^ B.mu, A.nu ^ B.nu)
    if all(P.mu | P.nu for P in (A, B, AB)):
        assert to_point(AB).value == to_point(A).value ^ to_point(B).value


@given(st.integers(1, 3).flatmap(paulis))
def test_hermitian_phase(A):
    m = dense(A)
    assert np.allclose(m, m.conj().T) == A.is_hermitian()
    assert np.allclose(m @ m, (1 if A.sign_offset % 2 == 0 else -1) * np.eye(1 << A.n))


@given(st.integers(1, 3).flatmap(lambda n: st.lists(paulis(n), min_size=n, max_size=n)))
def test_minus_identity_brute_force(gens):
    try:
        S = group_from_generators(gens)
    except (NotCommuting, NotIndependent):
        return
    brute = any(P.mu == 0 and P.nu == 0 and P.k == 2 for P in expand_group(S))
    # expand_group only sees subset products; squares add the -I from anti-Hermitian generators
    brute = brute or any(pauli_mul(g, g).k == 2 for g in S.generators)
    assert contains_minus_identity(S) == brute

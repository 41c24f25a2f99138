"""Dense state-vector oracle for stabilizer states at small n.

Basis states are ordered with qubit 1 as the most significant bit, so the
amplitude of ``|b1 b2 ... bn>`` sits at index ``b1 b2 ... bn`` read in
binary. Nothing here uses the F2 machinery beyond reading (k, mu, nu) of a
Pauli operator; it is meant as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundExceeded, NotAStabilizerStateGroup, ResidualTooLarge, SizeMismatch
from .f2core import BitVector
from .pauli import PauliOp, StabilizerGroup, contains_minus_identity

RESIDUAL_TOL = 1e-12
RAY_TOL = 1e-9
APPLY_MAX_N = 12
STATE_MAX_N = 10
CENSUS_MAX_N = 3


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def normalized(self) -> "StateVector":
        a = self.amplitudes / np.linalg.norm(self.amplitudes)
        return StateVector(self.n, canonical_phase(a))

    def dirac(self, tol: float = RAY_TOL) -> str:
        terms = []
        for idx, amp in enumerate(self.amplitudes):
            if abs(amp) > tol:
                label = format(idx, f"0{self.n}b")
                terms.append(f"({amp.real:+.6f}{amp.imag:+.6f}j)|{label}>")
        return " ".join(terms)


def _index_mask(bits: int, n: int) -> int:
    """Qubit bit set (qubit 1 = bit 0) to basis-index mask (qubit 1 = MSB)."""
    m = 0
    for q in range(n):
        if (bits >> q) & 1:
            m |= 1 << (n - 1 - q)
    return m


def apply_pauli(A: PauliOp, v: StateVector) -> StateVector:
    """``i^k Z^mu X^nu |v>`` without building a matrix."""
    if A.n != v.n:
        raise SizeMismatch(A.n, v.n, "qubit count")
    n = A.n
    if n > APPLY_MAX_N:
        raise BoundExceeded(f"apply_pauli supports n <= {APPLY_MAX_N}")
    idx = np.arange(1 << n, dtype=np.int64)
    xm = _index_mask(A.nu, n)
    zm = _index_mask(A.mu, n)
    w = v.amplitudes[idx ^ xm]  # X part: (X^nu v)[y] = v[y xor nu]
    signs = 1 - 2 * (_popcount_arr(idx & zm) & 1)
    return StateVector(n, (1j**A.k) * signs * w)


def _popcount_arr(a: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    x = a.copy()
    while np.any(x):
        out += x & 1
        x >>= 1
    return out


def pauli_matrix(A: PauliOp) -> np.ndarray:
    """Dense 2^n x 2^n matrix, built from Kronecker products (test oracle)."""
    Z = np.array([[1, 0], [0, -1]], dtype=complex)
    X = np.array([[0, 1], [1, 0]], dtype=complex)
    I2 = np.eye(2, dtype=complex)
    M = np.array([[1]], dtype=complex)
    for q in range(A.n):
        f = I2
        if (A.mu >> q) & 1:
            f = Z
        if (A.nu >> q) & 1:
            f = f @ X
        M = np.kron(M, f)
    return (1j**A.k) * M


def canonical_phase(a: np.ndarray, tol: float = RAY_TOL) -> np.ndarray:
    nz = np.nonzero(np.abs(a) > tol)[0]
    if len(nz) == 0:
        return a
    first = a[nz[0]]
    return a * (abs(first) / first)


def _project(S: StabilizerGroup, gamma: int, v: np.ndarray) -> np.ndarray:
    st = StateVector(S.n, v)
    for i, M in enumerate(S.generators):
        sign = -1 if (gamma >> i) & 1 else 1
        st = StateVector(S.n, 0.5 * (st.amplitudes + sign * apply_pauli(M, st).amplitudes))
    return st.amplitudes


def stabilized_state(S: StabilizerGroup, gamma: BitVector | int = 0, seeds: tuple[int, int] = (1, 2)) -> StateVector:
    """The unique state with ``(-1)^gamma_i M_i |phi> = |phi>`` for every generator.

    Projects two independent random vectors and checks that both give the
    same ray (so the joint eigenspace is one-dimensional) and that every
    eigen-equation holds to ``RESIDUAL_TOL``.
    """
    n = S.n
    if n > STATE_MAX_N:
        raise BoundExceeded(f"stabilized_state supports n <= {STATE_MAX_N}")
    if contains_minus_identity(S):
        raise NotAStabilizerStateGroup("group contains -I")
    for M in S.generators:
        if not M.is_hermitian():
            raise NotAStabilizerStateGroup("generators must be +-Hermitian")
    g = gamma.value if isinstance(gamma, BitVector) else int(gamma)
    states = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        p = _project(S, g, v)
        norm = np.linalg.norm(p)
        if norm < 1e-6:
            raise ResidualTooLarge("projection of a random vector vanished")
        states.append(canonical_phase(p / norm))
    phi = states[0]
    if np.max(np.abs(states[0] - states[1])) > RAY_TOL:
        raise ResidualTooLarge("two random seeds gave different rays; eigenspace is not one-dimensional")
    out = StateVector(n, phi)
    for r in residuals(S, g, out):
        if r > RESIDUAL_TOL:
            raise ResidualTooLarge(f"eigen-residual {r:.3e} exceeds {RESIDUAL_TOL}")
    return out


def residuals(S: StabilizerGroup, gamma: int, v: StateVector) -> list[float]:
    out = []
    for i, M in enumerate(S.generators):
        sign = -1 if (gamma >> i) & 1 else 1
        out.append(float(np.linalg.norm(apply_pauli(M, v).amplitudes - sign * v.amplitudes)))
    return out


def seed_agreement(S: StabilizerGroup, gamma: int = 0, seeds: tuple[int, int] = (11, 12)) -> float:
    """Max amplitude difference between the rays from two seeds."""
    rays = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        v = rng.normal(size=1 << S.n) + 1j * rng.normal(size=1 << S.n)
        p = _project(S, gamma, v)
        rays.append(canonical_phase(p / np.linalg.norm(p)))
    return float(np.max(np.abs(rays[0] - rays[1])))


def ray_key(v: StateVector, tol: float = RAY_TOL) -> bytes:
    a = canonical_phase(v.amplitudes)
    digits = int(round(-np.log10(tol)))
    r = np.round(a.real, digits) + 0.0
    i = np.round(a.imag, digits) + 0.0
    return np.concatenate([r, i]).tobytes()


def census_stabilizer_states(n: int) -> int:
    """Number of distinct stabilizer-state rays on n qubits, by brute force."""
    from .lagrangian import enumerate_lagrangians, group_from_lagrangian

    if not 1 <= n <= CENSUS_MAX_N:
        raise BoundExceeded(f"state census supports 1 <= n <= {CENSUS_MAX_N}")
    seen = set()
    for L in enumerate_lagrangians(n):
        S = group_from_lagrangian(L)
        for gamma in range(1 << n):
            seen.add(ray_key(stabilized_state(S, gamma)))
    return len(seen)

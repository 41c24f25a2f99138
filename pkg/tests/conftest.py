from __future__ import annotations

import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stabminors.f2core import BitMatrix
from stabminors.groupaction import ELEMENTS, GroupElement
from stabminors.lagrangian import symmetric_from_code
from stabminors.pauli import PauliOp

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("STABMINORS_HYPOTHESIS_EXAMPLES", "150")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def symmetric(n: int):
    return st.integers(0, (1 << (n * (n + 1) // 2)) - 1).map(lambda c: symmetric_from_code(c, n))


def paulis(n: int):
    m = (1 << n) - 1
    return st.builds(PauliOp, st.just(n), st.integers(0, 3), st.integers(0, m), st.integers(0, m))


def elements(n: int):
    slots = st.lists(st.sampled_from(sorted(ELEMENTS)), min_size=n, max_size=n)
    perms = st.permutations(list(range(n)))
    return st.builds(
        lambda names, perm: GroupElement(tuple(ELEMENTS[s] for s in names), tuple(perm)),
        slots,
        perms,
    )


def bit_matrices(max_rows: int = 6, max_cols: int = 6):
    def build(shape):
        r, c = shape
        return st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r).map(
            lambda rows: BitMatrix(r, c, tuple(rows))
        )

    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(build)


@pytest.fixture
def rng():
    return random.Random(20240917)

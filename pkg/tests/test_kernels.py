from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabminors import _kernels
from stabminors._kernels import available_backends, get_backend
from stabminors._kernels._masks import apply_generator, lagrangian_count, n_generators
from stabminors.groupaction import act_on_lagrangian
from stabminors.lagrangian import Lagrangian
from stabminors.minorvariety import minor_point

from conftest import elements, symmetric

BACKENDS = available_backends()
needs_both = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def lagrangians(n):
    def build(t):
        S, g = t
        L = Lagrangian.from_vectors(n, [(1 << j) | (S.column(j) << n) for j in range(n)])
        return act_on_lagrangian(g, L)

    return st.tuples(symmetric(n), elements(n)).map(build)


def test_backend_names():
    assert _kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS
    with pytest.raises(ValueError):
        get_backend("fortran")


def test_env_var_forces_python():
    code = "import stabminors; print(stabminors.KERNEL_BACKEND)"
    env = dict(os.environ, STABMINORS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_both
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), lagrangians(n), st.permutations(range(n)))))
def test_minor_bits_agree(args):
    n, L, order = args
    cols = [L.columns[i] for i in order]
    a = get_backend("cython").minor_bits(cols, n)
    b = get_backend("python").minor_bits(cols, n)
    assert a == b == minor_point(L).bits


def test_minor_bits_wide_n():
    n = 8
    cols = [1 << j for j in range(n)]
    assert _kernels.minor_bits(cols, n) == 1
    assert _kernels.minor_bits([1 << (n + j) for j in range(n)], n) == 1 << ((1 << n) - 1)


@needs_both
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chart_points_agree(n):
    a = get_backend("cython").chart_points(n)
    b = get_backend("python").chart_points(n)
    assert np.array_equal(a, b)
    assert len(a) == 1 << (n * (n + 1) // 2)


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chart_points_loopless(backend, n):
    k = get_backend(backend)
    full = k.chart_points(n)
    diag = [b for b, (i, j) in enumerate(_kernels._masks.sym_pairs(n)) if i == j]
    codes = [c for c in range(len(full)) if not any((c >> b) & 1 for b in diag)]
    g = k.chart_points(n, loops=False)
    assert len(g) == 1 << (n * (n - 1) // 2)
    assert np.array_equal(g, full[codes])


@needs_both
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_bfs_agree(n):
    for start in (1, 1 << ((1 << n) - 1)):
        ka, pa, ga = get_backend("cython").orbit_bfs(start, n)
        kb, pb, gb = get_backend("python").orbit_bfs(start, n)
        assert set(int(k) for k in ka) == set(int(k) for k in kb)
        # parent links are valid in both
        for keys, parent, gen in ((ka, pa, ga), (kb, pb, gb)):
            assert parent[0] == -1
            for i in range(1, len(keys)):
                assert apply_generator(int(keys[parent[i]]), int(gen[i]), n) == int(keys[i])


@needs_both
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_partition_agree(n):
    seeds = _kernels.chart_points(n)
    ka, la = get_backend("cython").partition(n, seeds)
    kb, lb = get_backend("python").partition(n, seeds)
    assert np.array_equal(ka, kb)
    assert len(ka) == lagrangian_count(n)
    # same partition up to renaming of labels
    pairs = set(zip(la.tolist(), lb.tolist()))
    assert len(pairs) == len(set(la.tolist())) == len(set(lb.tolist()))


def test_generator_count():
    assert [n_generators(n) for n in range(1, 7)] == [2, 5, 8, 11, 14, 17]
    assert [lagrangian_count(n) for n in range(1, 7)] == [3, 15, 135, 2295, 75735, 4922775]

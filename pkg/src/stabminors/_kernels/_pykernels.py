"""Pure-Python / numpy implementation of the hot kernels.

Used when the compiled extension is unavailable or disabled with
``STABMINORS_PURE_PYTHON=1``. Semantics match ``_ckernels`` exactly; the
test suite cross-checks the two.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ._masks import (
    MAX_KERNEL_N,
    apply_generator,
    full_mask,
    n_generators,
    slot_masks,
    swap_masks,
    sym_pairs,
)

BACKEND = "python"


def _independent(vectors: Sequence[int]) -> bool:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
        else:
            return False
    return True


def minor_bits(cols: Sequence[int], n: int) -> int:
    """All special minors of the 2n x n matrix with the given columns.

    Bit ``T`` of the result is the determinant of the rows ``mu_t`` for
    ``t`` not in ``T`` and ``nu_t`` for ``t`` in ``T``.
    """
    m = (1 << n) - 1
    mus = [c & m for c in cols]
    nus = [(c >> n) & m for c in cols]
    out = 0
    for T in range(1 << n):
        keep = m & ~T
        if _independent([(a & keep) | (b & T) for a, b in zip(mus, nus)]):
            out |= 1 << T
    return out


def _apply_vec(z: np.ndarray, g: int, n: int) -> np.ndarray:
    u = np.uint64
    if g < n:
        s = u(1 << g)
        h = u(slot_masks(n)[g])
        return ((z & h) >> s) | ((z & ~h & u(full_mask(n))) << s)
    if g < 2 * n:
        j = g - n
        return z ^ ((z & u(slot_masks(n)[j])) >> u(1 << j))
    j = g - 2 * n
    a, b = swap_masks(n)[j]
    s = u(1 << j)
    a = u(a)
    b = u(b)
    return (z & ~(a | b)) | ((z & a) << s) | ((z & b) >> s)


def chart_points(n: int, loops: bool = True) -> np.ndarray:
    """Minor vector of ``[I; S]`` for every symmetric S, indexed by its upper-triangle code.

    With ``loops=False`` only zero-diagonal S (graphs) are listed, indexed by
    the code over the off-diagonal positions.
    """
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError(f"chart_points supports 1 <= n <= {MAX_KERNEL_N}")
    pairs = [(i, j) for i, j in sym_pairs(n) if loops or i != j]
    N = 1 << len(pairs)
    codes = np.arange(N, dtype=np.uint64)
    R = np.zeros((N, n), dtype=np.uint8)
    for b, (i, j) in enumerate(pairs):
        bit = ((codes >> np.uint64(b)) & np.uint64(1)).astype(np.uint8)
        R[:, i] |= bit << j
        R[:, j] |= bit << i
    out = np.ones(N, dtype=np.uint64)  # empty minor
    rows_n = np.arange(N)
    for T in range(1, 1 << n):
        tl = [t for t in range(n) if (T >> t) & 1]
        k = len(tl)
        sub = R[:, tl] & np.uint8(T)
        ok = np.ones(N, dtype=bool)
        for step, c in enumerate(tl):
            cand = (sub[:, step:] >> c) & 1
            ok &= cand.any(axis=1)
            p = cand.argmax(axis=1) + step
            piv = sub[rows_n, p].copy()
            sub[rows_n, p] = sub[:, step]
            sub[:, step] = piv
            if step + 1 < k:
                rest = sub[:, step + 1:]
                hit = ((rest >> c) & 1).astype(bool)
                sub[:, step + 1:] = np.where(hit, rest ^ piv[:, None], rest)
        out |= ok.astype(np.uint64) << np.uint64(T)
    return out


def orbit_bfs(start: int, n: int):
    """Breadth-first orbit of ``start`` with parent links.

    Returns ``(keys, parent, gen)``; ``keys[0] == start``, and for ``i > 0``
    ``keys[i] = generator gen[i] applied to keys[parent[i]]``.
    """
    G = n_generators(n)
    index = {start: 0}
    keys = [start]
    parent = [-1]
    gen = [-1]
    i = 0
    while i < len(keys):
        z = keys[i]
        for g in range(G):
            w = apply_generator(z, g, n)
            if w not in index:
                index[w] = len(keys)
                keys.append(w)
                parent.append(i)
                gen.append(g)
        i += 1
    if n <= MAX_KERNEL_N:
        key_arr = np.array(keys, dtype=np.uint64)
    else:
        key_arr = np.array(keys, dtype=object)
    return key_arr, np.array(parent, dtype=np.int64), np.array(gen, dtype=np.int8)


def partition(n: int, seeds: np.ndarray):
    """Orbit closure of ``seeds``; returns ``(keys, labels)`` sorted by key.

    Labels number the orbits in order of discovery from the smallest
    uncovered seed.
    """
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError(f"partition supports 1 <= n <= {MAX_KERNEL_N}")
    G = n_generators(n)
    remaining = np.unique(np.asarray(seeds, dtype=np.uint64))
    all_keys = []
    all_labels = []
    label = 0
    while remaining.size:
        orbit = remaining[:1].copy()
        frontier = orbit
        while frontier.size:
            imgs = np.unique(np.concatenate([_apply_vec(frontier, g, n) for g in range(G)]))
            new = np.setdiff1d(imgs, orbit, assume_unique=True)
            orbit = np.union1d(orbit, new)
            frontier = new
        all_keys.append(orbit)
        all_labels.append(np.full(orbit.size, label, dtype=np.int64))
        remaining = np.setdiff1d(remaining, orbit, assume_unique=True)
        label += 1
    keys = np.concatenate(all_keys)
    labels = np.concatenate(all_labels)
    order = np.argsort(keys, kind="stable")
    return keys[order], labels[order]

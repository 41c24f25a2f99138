# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: special minors, chart points, orbit closure.

Minor vectors are held in ``uint64`` registers, so ``n <= 6``. The Python
wrapper falls back to ``_pykernels`` for larger ``n``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, int32_t, int8_t, uint8_t
from libc.stdlib cimport malloc, free

from ._masks import MAX_KERNEL_N, slot_masks, swap_masks, sym_pairs, full_mask

cnp.import_array()

BACKEND = "cython"


cdef struct Act:
    int n
    uint64_t full
    uint64_t hi[6]
    uint64_t sa[5]
    uint64_t sb[5]


cdef Act _make_act(int n) except *:
    cdef Act act
    cdef int j
    act.n = n
    act.full = <uint64_t>full_mask(n)
    hi = slot_masks(n)
    for j in range(n):
        act.hi[j] = <uint64_t>hi[j]
    sw = swap_masks(n)
    for j in range(n - 1):
        act.sa[j] = <uint64_t>sw[j][0]
        act.sb[j] = <uint64_t>sw[j][1]
    return act


cdef inline uint64_t _apply(uint64_t z, int g, Act* act) noexcept nogil:
    cdef int n = act.n
    cdef int j
    cdef uint64_t s, h, a, b
    if g < n:
        s = (<uint64_t>1) << g
        h = act.hi[g]
        return ((z & h) >> s) | ((z & ~h & act.full) << s)
    if g < 2 * n:
        j = g - n
        return z ^ ((z & act.hi[j]) >> ((<uint64_t>1) << j))
    j = g - 2 * n
    a = act.sa[j]
    b = act.sb[j]
    s = (<uint64_t>1) << j
    return (z & ~(a | b)) | ((z & a) << s) | ((z & b) >> s)


cdef inline int _independent(uint64_t* v, int k) noexcept nogil:
    # Gaussian elimination on k vectors; destroys v.
    cdef int i, r, top
    cdef uint64_t piv, low
    for i in range(k):
        piv = v[i]
        if piv == 0:
            return 0
        low = piv & (~piv + 1)
        for r in range(i + 1, k):
            if v[r] & low:
                v[r] ^= piv
    return 1


cdef uint64_t _minor_bits(uint64_t* mus, uint64_t* nus, int n) noexcept nogil:
    cdef uint64_t out = 0
    cdef uint64_t m = ((<uint64_t>1) << n) - 1
    cdef uint64_t keep
    cdef uint64_t v[6]
    cdef int T, j
    for T in range(1 << n):
        keep = m & ~(<uint64_t>T)
        for j in range(n):
            v[j] = (mus[j] & keep) | (nus[j] & <uint64_t>T)
        if _independent(v, n):
            out |= (<uint64_t>1) << T
    return out


def minor_bits(cols, int n):
    """All special minors of the 2n x n matrix with the given columns."""
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError("minor_bits kernel supports 1 <= n <= 6")
    cdef uint64_t mus[6]
    cdef uint64_t nus[6]
    cdef int j = 0
    cdef uint64_t m = ((<uint64_t>1) << n) - 1
    cdef uint64_t c
    if len(cols) != n:
        raise ValueError("expected n columns")
    for col in cols:
        c = <uint64_t>col
        mus[j] = c & m
        nus[j] = (c >> n) & m
        j += 1
    return int(_minor_bits(mus, nus, n))


cdef inline int _det_sub(uint8_t* rows, int n, int T) noexcept nogil:
    # determinant of the principal submatrix on T
    cdef uint8_t v[6]
    cdef int k = 0
    cdef int t, i, r
    cdef uint8_t piv, bit, tmp
    for t in range(n):
        if (T >> t) & 1:
            v[k] = rows[t] & <uint8_t>T
            k += 1
    for t in range(n):
        if not ((T >> t) & 1):
            continue
        bit = <uint8_t>(1 << t)
        # find a pivot among rows not yet used; rows used so far are packed at the front
        r = -1
        for i in range(k):
            if v[i] & bit:
                r = i
                break
        if r < 0:
            return 0
        piv = v[r]
        v[r] = v[k - 1]
        k -= 1
        for i in range(k):
            if v[i] & bit:
                v[i] ^= piv
    return 1


def chart_points(int n, bint loops=True):
    """Minor vector of ``[I; S]`` for every symmetric S; see the Python fallback."""
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError("chart_points supports 1 <= n <= 6")
    pairs = [(i, j) for i, j in sym_pairs(n) if loops or i != j]
    cdef int P = len(pairs)
    cdef int64_t N = (<int64_t>1) << P
    cdef int pi_[21]
    cdef int pj_[21]
    cdef int b
    for b in range(P):
        pi_[b] = pairs[b][0]
        pj_[b] = pairs[b][1]
    out = np.empty(N, dtype=np.uint64)
    cdef uint64_t[::1] ov = out
    cdef int64_t code
    cdef uint8_t rows[6]
    cdef int i, T
    cdef uint64_t z
    with nogil:
        for code in range(N):
            for i in range(n):
                rows[i] = 0
            for b in range(P):
                if (code >> b) & 1:
                    rows[pi_[b]] |= <uint8_t>(1 << pj_[b])
                    rows[pj_[b]] |= <uint8_t>(1 << pi_[b])
            z = 1
            for T in range(1, 1 << n):
                if _det_sub(rows, n, T):
                    z |= (<uint64_t>1) << T
            ov[code] = z
    return out


cdef inline uint64_t _hash(uint64_t key) noexcept nogil:
    key ^= key >> 33
    key *= <uint64_t>0xff51afd7ed558ccd
    key ^= key >> 33
    key *= <uint64_t>0xc4ceb9fe1a85ec53
    key ^= key >> 33
    return key


cdef class _KeySet:
    """Open-addressing set of nonzero uint64 keys, storing indices into a key array."""
    cdef int32_t* table
    cdef uint64_t mask

    def __cinit__(self, int64_t expected):
        cdef int64_t cap = 16
        while cap < 2 * expected:
            cap <<= 1
        self.table = <int32_t*>malloc(cap * sizeof(int32_t))
        if self.table == NULL:
            raise MemoryError()
        self.mask = <uint64_t>(cap - 1)
        cdef int64_t i
        for i in range(cap):
            self.table[i] = -1

    def __dealloc__(self):
        if self.table != NULL:
            free(self.table)

    cdef inline int32_t find_or_insert(self, uint64_t key, uint64_t* keys, int32_t new_index) noexcept nogil:
        # returns the existing index, or -1 after inserting new_index
        cdef uint64_t h = _hash(key) & self.mask
        cdef int32_t idx
        while True:
            idx = self.table[h]
            if idx < 0:
                self.table[h] = new_index
                return -1
            if keys[idx] == key:
                return idx
            h = (h + 1) & self.mask


def orbit_bfs(uint64_t start, int n, int64_t capacity):
    """Breadth-first orbit of ``start`` with parent links; see the Python fallback."""
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError("orbit_bfs kernel supports 1 <= n <= 6")
    cdef Act act = _make_act(n)
    cdef int G = 3 * n - 1
    keys_a = np.empty(capacity, dtype=np.uint64)
    par_a = np.empty(capacity, dtype=np.int64)
    gen_a = np.empty(capacity, dtype=np.int8)
    cdef uint64_t[::1] keys = keys_a
    cdef int64_t[::1] par = par_a
    cdef int8_t[::1] gen = gen_a
    cdef _KeySet seen = _KeySet(capacity)
    cdef int64_t head = 0, tail = 1
    cdef int g
    cdef uint64_t z, w
    keys[0] = start
    par[0] = -1
    gen[0] = -1
    seen.find_or_insert(start, &keys[0], 0)
    with nogil:
        while head < tail:
            z = keys[head]
            for g in range(G):
                w = _apply(z, g, &act)
                keys[tail] = w
                if seen.find_or_insert(w, &keys[0], <int32_t>tail) < 0:
                    par[tail] = head
                    gen[tail] = <int8_t>g
                    tail += 1
                    if tail >= capacity:
                        with gil:
                            raise RuntimeError("orbit exceeds capacity")
            head += 1
    return keys_a[:tail].copy(), par_a[:tail].copy(), gen_a[:tail].copy()


def partition(int n, seeds, int64_t total):
    """Orbit closure of ``seeds``; returns ``(keys, labels)`` sorted by key.

    ``total`` bounds the size of the closure (the number of points of the
    variety).
    """
    if not 1 <= n <= MAX_KERNEL_N:
        raise ValueError("partition kernel supports 1 <= n <= 6")
    cdef Act act = _make_act(n)
    cdef int G = 3 * n - 1
    seed_arr = np.unique(np.asarray(seeds, dtype=np.uint64))
    cdef uint64_t[::1] sv = seed_arr
    keys_a = np.empty(total + 1, dtype=np.uint64)
    lab_a = np.empty(total + 1, dtype=np.int64)
    cdef uint64_t[::1] keys = keys_a
    cdef int64_t[::1] lab = lab_a
    cdef _KeySet seen = _KeySet(total + 1)
    cdef int64_t count = 0, head, i
    cdef int64_t label = 0
    cdef int64_t ns = sv.shape[0]
    cdef int g
    cdef uint64_t z, w
    cdef int overflow = 0
    with nogil:
        for i in range(ns):
            keys[count] = sv[i]
            if seen.find_or_insert(sv[i], &keys[0], <int32_t>count) >= 0:
                continue
            lab[count] = label
            head = count
            count += 1
            while head < count:
                z = keys[head]
                for g in range(G):
                    w = _apply(z, g, &act)
                    if count > total:
                        overflow = 1
                        break
                    keys[count] = w
                    if seen.find_or_insert(w, &keys[0], <int32_t>count) < 0:
                        lab[count] = label
                        count += 1
                if overflow:
                    break
                head += 1
            if overflow:
                break
            label += 1
    if overflow:
        raise RuntimeError("closure exceeds the stated total")
    keys_out = keys_a[:count]
    order = np.argsort(keys_out, kind="stable")
    return keys_out[order].copy(), lab_a[:count][order].copy()

"""Orbits of the principal-minor variety under SL(2,F2)^n x| S_n.

The census works on 2^n-bit integer keys: it seeds the closure with the
minor vectors of all symmetric matrices (every orbit meets the standard
chart) and runs breadth-first search under the 3n - 1 generators in the
kernel backend. Each orbit is represented by its smallest key; orbits are
numbered 1, 2, ... in order of (size, smallest key).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import _kernels
from ._kernels._masks import MAX_KERNEL_N, lagrangian_count
from .errors import BoundExceeded, NotOnVariety
from .graphstates import Graph, graph_to_point, parse_graph
from .groupaction import GroupElement, act_on_bits, compose, generators
from .lagrangian import Lagrangian, graph_form, lagrangian_from_group
from .minorvariety import MinorPoint, is_on_variety, lagrangian_from_point, minor_point
from .pauli import StabilizerGroup
from .published import rows_for

PARTITION_BOUND = MAX_KERNEL_N


class StateCounts(NamedTuple):
    published: int
    derived: int


@dataclass(frozen=True)
class OrbitReport:
    n: int
    orbit_id: int
    size: int
    canonical_point: MinorPoint
    representative_graph: Graph
    label: str | None = None

    @property
    def published_state_count(self) -> int:
        """4^n |O|, the figure printed in the published n = 4 table."""
        return 4**self.n * self.size

    @property
    def derived_state_count(self) -> int:
        """2^n |O|: one state per sign vector of a +Hermitian generating set."""
        return 2**self.n * self.size


def state_counts(r: OrbitReport) -> StateCounts:
    return StateCounts(r.published_state_count, r.derived_state_count)


class Classification(NamedTuple):
    orbit_id: int
    witness: GroupElement | None
    point: MinorPoint
    canonical_point: MinorPoint


@dataclass(frozen=True)
class Census:
    n: int
    reports: tuple[OrbitReport, ...]
    keys: np.ndarray  # every point of the variety, sorted
    orbit_index: np.ndarray  # keys[i] lies in reports[orbit_index[i]]

    def lookup(self, bits: int) -> int | None:
        pos = int(np.searchsorted(self.keys, np.uint64(bits)))
        if pos < len(self.keys) and int(self.keys[pos]) == bits:
            return int(self.orbit_index[pos])
        return None

    def report(self, orbit_id: int) -> OrbitReport:
        return self.reports[orbit_id - 1]

    def by_label(self, label: str) -> OrbitReport:
        for r in self.reports:
            if r.label and label in r.label.split(","):
                return r
        raise KeyError(label)


def _check_n(n: int) -> None:
    if not 1 <= n <= PARTITION_BOUND:
        raise BoundExceeded(f"orbit census supports 1 <= n <= {PARTITION_BOUND}")


@lru_cache(maxsize=None)
def census(n: int) -> Census:
    """Full orbit partition of the variety for ``n`` qubits (cached)."""
    _check_n(n)
    # every state is locally equivalent to a graph state, so graphs seed every orbit
    seeds = _kernels.chart_points(n, loops=False)
    keys, labels = _kernels.partition(n, seeds)
    if len(keys) != lagrangian_count(n):
        raise AssertionError("orbit closure does not match the number of Lagrangians")
    n_orb = int(labels.max()) + 1
    sizes = np.bincount(labels, minlength=n_orb)
    mins = np.full(n_orb, np.iinfo(np.uint64).max, dtype=np.uint64)
    np.minimum.at(mins, labels, keys)
    order = sorted(range(n_orb), key=lambda o: (int(sizes[o]), int(mins[o])))
    rank = np.empty(n_orb, dtype=np.int64)
    for pos, o in enumerate(order):
        rank[o] = pos
    orbit_index = rank[labels]

    label_of = _published_labels(n, keys, orbit_index)
    reports = []
    for pos, o in enumerate(order):
        canon = MinorPoint(n, int(mins[o]))
        theta, _ = graph_form(lagrangian_from_point(canon))
        reports.append(
            OrbitReport(
                n=n,
                orbit_id=pos + 1,
                size=int(sizes[o]),
                canonical_point=canon,
                representative_graph=Graph(n, theta),
                label=label_of.get(pos),
            )
        )
    return Census(n, tuple(reports), keys, orbit_index)


def _published_labels(n: int, keys: np.ndarray, orbit_index: np.ndarray) -> dict[int, str]:
    try:
        rows = rows_for(n)
    except KeyError:
        return {}
    # rows that share an orbit keep both labels, e.g. "O5,O8"
    out: dict[int, list[str]] = {}
    for row in rows:
        bits = graph_to_point(parse_graph(row.edges, n)).bits
        pos = int(np.searchsorted(keys, np.uint64(bits)))
        out.setdefault(int(orbit_index[pos]), []).append(row.label)
    return {k: ",".join(v) for k, v in out.items()}


def partition(n: int) -> list[OrbitReport]:
    return list(census(n).reports)


def orbit_of(p: MinorPoint) -> frozenset[int]:
    """The orbit of ``p`` as a set of integer keys (bitmask order)."""
    keys, _, _ = _kernels.orbit_bfs(p.bits, p.n)
    return frozenset(int(k) for k in keys)


def to_point(x) -> MinorPoint:
    if isinstance(x, MinorPoint):
        return x
    if isinstance(x, Graph):
        return graph_to_point(x)
    if isinstance(x, StabilizerGroup):
        return minor_point(lagrangian_from_group(x))
    if isinstance(x, Lagrangian):
        return minor_point(x)
    raise TypeError(f"cannot classify {type(x).__name__}")


def classify(x, witness: bool = True) -> Classification:
    """Orbit of ``x`` (point, graph, stabilizer group or Lagrangian).

    With ``witness=True`` also returns a group element mapping the point of
    ``x`` to the orbit's canonical point; it is checked before returning.
    """
    p = to_point(x)
    _check_n(p.n)
    c = census(p.n)
    idx = c.lookup(p.bits)
    if idx is None:
        if not is_on_variety(p):
            raise NotOnVariety("point is not on the principal-minor variety")
        raise AssertionError("point on the variety missing from the census")
    report = c.reports[idx]
    w = None
    if witness:
        w = find_witness(p, report.canonical_point)
    return Classification(report.orbit_id, w, p, report.canonical_point)


def find_witness(p: MinorPoint, target: MinorPoint) -> GroupElement:
    """Group element taking ``p`` to ``target`` along a shortest generator path."""
    keys, parent, gen = _kernels.orbit_bfs(p.bits, p.n)
    hits = np.nonzero(keys == (np.uint64(target.bits) if keys.dtype != object else target.bits))[0]
    if len(hits) == 0:
        raise ValueError("target is not in the orbit of p")
    path = []
    i = int(hits[0])
    while parent[i] >= 0:
        path.append(int(gen[i]))
        i = int(parent[i])
    gens = generators(p.n)
    w = GroupElement.identity(p.n)
    for g in reversed(path):
        w = compose(gens[g], w)
    if act_on_bits(w, p.bits) != target.bits:
        raise AssertionError("witness failed verification")
    return w


def total_size(reports) -> int:
    return sum(r.size for r in reports)

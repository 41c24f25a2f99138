"""Graphs, graph-state stabilizer groups and loopless reduction.

A graph on vertices 1..n is its symmetric adjacency matrix theta over F2;
diagonal entries are loops. Two generator conventions are supported:

* ``standard``: generator i is X on vertex i and Z on its neighbours, so
  the (mu | nu) column matrix is ``[theta; I]``. A loop at i turns the X
  into Y.
* ``minor-table``: Z on vertex i and X on its neighbours, column matrix
  ``[I; theta]``. Its minor vector is exactly the vector of principal
  minors of theta.

The two are exchanged by HAD on every slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, LoopsPresent, NotSymmetric, ParseError
from .f2core import BitMatrix, bits_of, low_mask
from .groupaction import GroupElement
from .lagrangian import Lagrangian
from .minorvariety import MinorPoint, from_symmetric
from .pauli import PauliOp, StabilizerGroup, group_from_generators

CONVENTIONS = ("standard", "minor-table")


@dataclass(frozen=True)
class Graph:
    n: int
    theta: BitMatrix

    def __post_init__(self):
        if self.theta.rows != self.n or self.theta.cols != self.n:
            raise ValueError("theta must be n x n")
        if not self.theta.is_symmetric():
            raise NotSymmetric("adjacency matrix must be symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Edges as 1-based vertex pairs; ``(i, i)`` is a loop."""
        rows = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"vertex out of range in edge {i}-{j} (n={n})")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(n, BitMatrix(n, n, tuple(rows)))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "Graph":
        M = BitMatrix.from_lists(rows)
        return cls(M.rows, M)

    def edges(self) -> list[tuple[int, int]]:
        """1-based edges ``i <= j``, loops included."""
        out = []
        for i in range(self.n):
            for j in bits_of(self.theta.data[i]):
                if j >= i:
                    out.append((i + 1, j + 1))
        return out

    def loops(self) -> int:
        return self.theta.diagonal()

    def has_loops(self) -> bool:
        return self.loops() != 0

    def neighbours(self, v: int) -> int:
        """Neighbour bit set of 0-based vertex ``v``, loop excluded."""
        return self.theta.data[v] & ~(1 << v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``i`` becomes vertex ``perm[i]`` (0-based)."""
        rows = [0] * self.n
        for i in range(self.n):
            for j in bits_of(self.theta.data[i]):
                rows[perm[i]] |= 1 << perm[j]
        return Graph(self.n, BitMatrix(self.n, self.n, tuple(rows)))

    def edge_string(self) -> str:
        return format_edges(self)

    def __str__(self) -> str:
        return format_edges(self) or "(empty)"


_EDGE_RE = re.compile(r"^(\d+)-(\d+)$")


def parse_graph(s: str, n: int) -> Graph:
    """Parse ``"1-2,2-3"``; an empty string is the empty graph."""
    s = s.strip()
    edges = []
    if s:
        for tok in s.split(","):
            tok = tok.strip()
            m = _EDGE_RE.match(tok)
            if not m:
                raise ParseError(f"malformed edge token {tok!r}")
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"vertex out of range in {tok!r} (n={n})")
            edges.append((i, j))
    return Graph.from_edges(n, edges)


def format_edges(G: Graph) -> str:
    return ",".join(f"{i}-{j}" for i, j in G.edges())


def to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(1, G.n + 1):
        attrs = ' [peripheries=2, xlabel="loop"]' if (G.loops() >> (v - 1)) & 1 else ""
        lines.append(f"  {v}{attrs};")
    for i, j in G.edges():
        if i != j:
            lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_generators(G: Graph, convention: str = "standard") -> StabilizerGroup:
    """Positive Hermitian generators of the graph-state group."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    n = G.n
    gens = []
    for i in range(n):
        col = G.theta.column(i)
        if convention == "standard":
            mu, nu = col, 1 << i
        else:
            mu, nu = 1 << i, col
        gens.append(PauliOp(n, 3 * (mu & nu).bit_count(), mu, nu))
    return group_from_generators(gens, n)


def graph_lagrangian(G: Graph, convention: str = "standard") -> Lagrangian:
    n = G.n
    if convention == "standard":
        vecs = [G.theta.column(j) | (1 << (n + j)) for j in range(n)]
    elif convention == "minor-table":
        vecs = [(1 << j) | (G.theta.column(j) << n) for j in range(n)]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return Lagrangian.from_vectors(n, vecs, check=False)


def graph_to_point(G: Graph) -> MinorPoint:
    """Principal minors of theta, ``[1 : theta_ii : theta_[ij] : ... : det theta]``."""
    return from_symmetric(G.theta)


def loopless(G: Graph) -> tuple[Graph, GroupElement]:
    """Clear the diagonal; the witness is SQZ on each loop vertex.

    The witness maps the standard-convention Lagrangian of ``G`` to that of
    the returned graph.
    """
    loops = G.loops()
    rows = tuple(r & ~(1 << i) for i, r in enumerate(G.theta.data))
    return Graph(G.n, BitMatrix(G.n, G.n, rows)), GroupElement.local(G.n, sqz=loops)


def local_complementation(G: Graph, v: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of 1-based vertex ``v``."""
    if G.has_loops():
        raise LoopsPresent("local complementation needs a loopless graph")
    if not 1 <= v <= G.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    nb = G.neighbours(v - 1)
    rows = list(G.theta.data)
    for a in bits_of(nb):
        rows[a] ^= nb & ~(1 << a)
    return Graph(G.n, BitMatrix(G.n, G.n, tuple(rows)))


def all_graphs(n: int, loops: bool = False) -> Iterable[Graph]:
    """Every graph on n labelled vertices (test oracle, small n)."""
    pairs = [(i, j) for i in range(n) for j in range(i if loops else i + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if (code >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, BitMatrix(n, n, tuple(rows)))


def random_graph(n: int, rng, p_edge: float = 0.5, p_loop: float = 0.0) -> Graph:
    rows = [0] * n
    for i in range(n):
        if rng.random() < p_loop:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if rng.random() < p_edge:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, BitMatrix(n, n, tuple(rows)))


def complete_graph(n: int) -> Graph:
    m = low_mask(n)
    return Graph(n, BitMatrix(n, n, tuple(m & ~(1 << i) for i in range(n))))

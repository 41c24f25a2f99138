"""Local Clifford orbits of stabilizer states via principal minors over F2.

The chain implemented here is

    stabilizer group  ->  Lagrangian subspace of F2^{2n}  ->  minor vector in F2^{2^n}

with the group SL(2,F2)^n x| S_n acting compatibly at every stage. Orbits
of minor vectors classify stabilizer states up to local Clifford
operations and qubit relabelling.
"""

from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .f2core import BitMatrix, BitVector, column_canonical, det, minor, rref
from .graphstates import (
    Graph,
    graph_generators,
    graph_lagrangian,
    graph_to_point,
    local_complementation,
    loopless,
    parse_graph,
    to_dot,
)
from .groupaction import (
    GroupElement,
    Local2,
    act_on_group,
    act_on_lagrangian,
    act_on_pauli,
    act_on_point,
    compose,
    format_element,
    generators,
    parse_element,
)
from .lagrangian import (
    Lagrangian,
    chart_form,
    enumerate_lagrangians,
    graph_form,
    is_isotropic,
    lagrangian_from_group,
)
from .minorvariety import (
    IndexOrder,
    MinorPoint,
    from_symmetric,
    index_convert,
    lagrangian_from_point,
    minor_point,
    parse_point,
    reconstruct_symmetric,
)
from .orbits import OrbitReport, classify, orbit_of, partition, state_counts
from .pauli import (
    PauliOp,
    StabilizerGroup,
    contains_minus_identity,
    format_pauli,
    group_from_generators,
    parse_pauli,
    pauli_mul,
    sign_normalize,
    symplectic_form,
    to_point,
)

__all__ = [
    "KERNEL_BACKEND",
    "BitMatrix",
    "BitVector",
    "column_canonical",
    "det",
    "minor",
    "rref",
    "Graph",
    "graph_generators",
    "graph_lagrangian",
    "graph_to_point",
    "local_complementation",
    "loopless",
    "parse_graph",
    "to_dot",
    "GroupElement",
    "Local2",
    "act_on_group",
    "act_on_lagrangian",
    "act_on_pauli",
    "act_on_point",
    "compose",
    "format_element",
    "generators",
    "parse_element",
    "Lagrangian",
    "chart_form",
    "enumerate_lagrangians",
    "graph_form",
    "is_isotropic",
    "lagrangian_from_group",
    "IndexOrder",
    "MinorPoint",
    "from_symmetric",
    "index_convert",
    "lagrangian_from_point",
    "minor_point",
    "parse_point",
    "reconstruct_symmetric",
    "OrbitReport",
    "classify",
    "orbit_of",
    "partition",
    "state_counts",
    "PauliOp",
    "StabilizerGroup",
    "contains_minus_identity",
    "format_pauli",
    "group_from_generators",
    "parse_pauli",
    "pauli_mul",
    "sign_normalize",
    "symplectic_form",
    "to_point",
]

"""Hexagonal and triangular lattice networks and their general (a,b)-Zagreb index."""

from .graph import (
    DuplicateEdgeError,
    EdgePartition,
    Graph,
    GraphError,
    SelfLoopError,
    VertexError,
    degree_pair_partition,
    format_edgelist,
    new_graph,
    parse_edgelist,
)
from .lattice import (
    FAMILIES,
    Boundary,
    Family,
    LatticeError,
    LatticeSpec,
    expected_partition,
    generate,
    hex_cylindrical,
    hex_free,
    hex_toroidal,
    parse_spec,
    tri_cylindrical,
    tri_free,
    tri_toroidal,
)
from .zagreb import (
    DerivedIndex,
    Exponents,
    IndexKind,
    closed_form,
    corollary_value,
    derived_index,
    general_zagreb_bruteforce,
    general_zagreb_from_partition,
    pow_degree,
)

__version__ = "0.1.0"

"""Hexagonal and triangular lattice networks under three boundary conditions.

Vertex id layouts (stable, relied on by exported edge lists):

* hexagonal ``(m, n)``: brick-wall drawing with ``m + 1`` zigzag rows of
  ``2n + 2`` vertices each; vertex ``(r, p)`` has id ``r * (2n + 2) + p``.
* triangular ``(m, n)``: ``m`` rows of ``n`` vertices; vertex ``(i, j)`` has
  id ``i * n + j``. Every diagonal runs from ``(i, j)`` to ``(i + 1, j + 1)``.

Under these layouts the free lattice's edge set is a subset of the
cylindrical one, which is a subset of the toroidal one.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable

from .graph import EdgePartition, Graph

MIN_SIZE = 3


class LatticeError(ValueError):
    """Raised for lattice parameters outside ``m, n >= 3``."""


class SpecSyntaxError(ValueError):
    """Raised for a malformed ``<family>:<boundary>:<m>x<n>`` string."""


class Family(enum.Enum):
    HEXAGONAL = "hex"
    TRIANGULAR = "tri"


class Boundary(enum.Enum):
    FREE = "free"
    CYLINDRICAL = "cyl"
    TOROIDAL = "torus"


FAMILIES: tuple[tuple[Family, Boundary], ...] = tuple(
    (f, b) for f in Family for b in Boundary
)


@dataclass(frozen=True)
class LatticeSpec:
    family: Family
    boundary: Boundary
    m: int
    n: int

    def __post_init__(self) -> None:
        check_size(self.m, self.n)

    def __str__(self) -> str:
        return f"{self.family.value}:{self.boundary.value}:{self.m}x{self.n}"

    @property
    def kind(self) -> tuple[Family, Boundary]:
        return self.family, self.boundary

    def sort_key(self) -> tuple[int, int, int]:
        return FAMILIES.index(self.kind), self.m, self.n


def check_size(m: int, n: int) -> None:
    for name, val in (("m", m), ("n", n)):
        if isinstance(val, bool) or not isinstance(val, int):
            raise LatticeError(f"{name} must be an integer, got {val!r}")
        if val < MIN_SIZE:
            raise LatticeError(f"{name} must be >= {MIN_SIZE} (cycles C_m, C_n need m, n >= 3), got {val}")


_SPEC_RE = re.compile(r"^(hex|tri):(free|cyl|torus):(\d+)x(\d+)$")


def parse_spec(text: str) -> LatticeSpec:
    """Parse ``hex:torus:4x5``-style strings.

    Raises :class:`SpecSyntaxError` for bad syntax and :class:`LatticeError`
    when the sizes are below 3.
    """
    match = _SPEC_RE.match(text.strip())
    if match is None:
        raise SpecSyntaxError(
            f"bad lattice spec {text!r}; expected <hex|tri>:<free|cyl|torus>:<m>x<n>"
        )
    fam, bnd, m, n = match.groups()
    return LatticeSpec(Family(fam), Boundary(bnd), int(m), int(n))


# -- hexagonal -------------------------------------------------------------


def _hex_edges(m: int, n: int, boundary: Boundary) -> list[tuple[int, int]]:
    width = 2 * n + 2

    def vid(r: int, p: int) -> int:
        return r * width + p

    edges = []
    for r in range(m + 1):
        for p in range(width - 1):
            edges.append((vid(r, p), vid(r, p + 1)))
        if boundary is not Boundary.FREE:
            edges.append((vid(r, width - 1), vid(r, 0)))
    for r in range(m):
        for p in range(1, width, 2):
            edges.append((vid(r, p), vid(r + 1, p - 1)))
    if boundary is Boundary.TOROIDAL:
        for p in range(1, width, 2):
            edges.append((vid(m, p), vid(0, p - 1)))
    return edges


def _build(vertex_count: int, edges: list[tuple[int, int]]) -> Graph:
    g = Graph(vertex_count)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def hex_free(m: int, n: int) -> Graph:
    check_size(m, n)
    return _build(2 * (m + 1) * (n + 1), _hex_edges(m, n, Boundary.FREE))


def hex_cylindrical(m: int, n: int) -> Graph:
    """Hexagonal lattice whose zigzag rows are closed into cycles of length ``2n + 2``."""
    check_size(m, n)
    return _build(2 * (m + 1) * (n + 1), _hex_edges(m, n, Boundary.CYLINDRICAL))


def hex_toroidal(m: int, n: int) -> Graph:
    """3-regular hexagonal torus: the cylinder plus rungs from the last row back to row 0."""
    check_size(m, n)
    return _build(2 * (m + 1) * (n + 1), _hex_edges(m, n, Boundary.TOROIDAL))


# -- triangular ------------------------------------------------------------


def _tri_edges(m: int, n: int, boundary: Boundary) -> list[tuple[int, int]]:
    def vid(i: int, j: int) -> int:
        return i * n + j

    wrap_j = boundary is not Boundary.FREE
    wrap_i = boundary is Boundary.TOROIDAL
    edges = []
    for i in range(m):
        for j in range(n):
            has_right = wrap_j or j < n - 1
            has_down = wrap_i or i < m - 1
            if has_right:
                edges.append((vid(i, j), vid(i, (j + 1) % n)))
            if has_down:
                edges.append((vid(i, j), vid((i + 1) % m, j)))
            if has_right and has_down:
                edges.append((vid(i, j), vid((i + 1) % m, (j + 1) % n)))
    return edges


def tri_free(m: int, n: int) -> Graph:
    check_size(m, n)
    return _build(m * n, _tri_edges(m, n, Boundary.FREE))


def tri_cylindrical(m: int, n: int) -> Graph:
    check_size(m, n)
    return _build(m * n, _tri_edges(m, n, Boundary.CYLINDRICAL))


def tri_toroidal(m: int, n: int) -> Graph:
    """Cartesian product ``C_m x C_n`` with one diagonal added to every square."""
    check_size(m, n)
    return _build(m * n, _tri_edges(m, n, Boundary.TOROIDAL))


_GENERATORS: dict[tuple[Family, Boundary], Callable[[int, int], Graph]] = {
    (Family.HEXAGONAL, Boundary.FREE): hex_free,
    (Family.HEXAGONAL, Boundary.CYLINDRICAL): hex_cylindrical,
    (Family.HEXAGONAL, Boundary.TOROIDAL): hex_toroidal,
    (Family.TRIANGULAR, Boundary.FREE): tri_free,
    (Family.TRIANGULAR, Boundary.CYLINDRICAL): tri_cylindrical,
    (Family.TRIANGULAR, Boundary.TOROIDAL): tri_toroidal,
}


def generate(spec: LatticeSpec) -> Graph:
    return _GENERATORS[spec.kind](spec.m, spec.n)


# -- published counts ------------------------------------------------------


def expected_vertex_count(spec: LatticeSpec) -> int:
    m, n = spec.m, spec.n
    if spec.family is Family.HEXAGONAL:
        return 2 * (m + 1) * (n + 1)
    return m * n


def expected_edge_count(spec: LatticeSpec) -> int:
    m, n = spec.m, spec.n
    return {
        (Family.HEXAGONAL, Boundary.FREE): m * (n + 1) + (m + 1) * (2 * n + 1),
        (Family.HEXAGONAL, Boundary.CYLINDRICAL): (n + 1) * (3 * m + 2),
        (Family.HEXAGONAL, Boundary.TOROIDAL): 3 * (m + 1) * (n + 1),
        (Family.TRIANGULAR, Boundary.FREE): m * (n - 1) + n * (m - 1) + (n - 1) * (m - 1),
        (Family.TRIANGULAR, Boundary.CYLINDRICAL): 3 * m * n - 2 * n,
        (Family.TRIANGULAR, Boundary.TOROIDAL): 3 * m * n,
    }[spec.kind]


def expected_partition_raw(spec: LatticeSpec) -> EdgePartition:
    """Published edge-partition counts evaluated at ``(m, n)``, zero rows kept."""
    m, n = spec.m, spec.n
    kind = spec.kind
    if kind == (Family.HEXAGONAL, Boundary.FREE):
        return {
            (2, 3): 4 * m + 4 * n - 4,
            (3, 3): m * (n - 1) + (2 * n - 1) * (m - 1),
            (1, 3): 2,
            (2, 2): 2,
        }
    if kind == (Family.HEXAGONAL, Boundary.CYLINDRICAL):
        return {(3, 3): (n + 1) * (3 * m - 2), (2, 3): 4 * (n + 1)}
    if kind == (Family.HEXAGONAL, Boundary.TOROIDAL):
        return {(3, 3): 3 * (m + 1) * (n + 1)}
    if kind == (Family.TRIANGULAR, Boundary.FREE):
        return {
            (2, 4): 4,
            (3, 4): 4,
            (3, 6): 2,
            (4, 4): 2 * (m + n - 5),
            (4, 6): 4 * (m + n - 5),
            (6, 6): 3 * (m * n + 7) - 8 * (m + n),
        }
    if kind == (Family.TRIANGULAR, Boundary.CYLINDRICAL):
        return {(4, 4): 2 * n, (4, 6): 4 * n, (6, 6): 3 * m * n - 8 * n}
    return {(6, 6): 3 * m * n}


def expected_partition(spec: LatticeSpec) -> EdgePartition:
    """Published edge partition with empty classes dropped, sorted by degree pair.

    Empty classes are dropped so the result compares directly against
    :func:`~lattice_zagreb.graph.degree_pair_partition`, which never reports a
    zero count (``tri:free:3x3`` has no ``(6, 6)`` edges, for instance).
    """
    raw = expected_partition_raw(spec)
    negative = {k: v for k, v in raw.items() if v < 0}
    if negative:
        raise LatticeError(f"published counts negative at {spec}: {negative}")
    return dict(sorted((k, v) for k, v in raw.items() if v))

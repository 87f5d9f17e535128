"""General (a, b)-Zagreb index and the degree-based indices it specialises to.

``Z_{a,b}(G) = sum over edges uv of d(u)^a d(v)^b + d(u)^b d(v)^a``.

Values are :class:`fractions.Fraction` when both exponents are integers and
``float`` otherwise. Three independent evaluation routes exist:

* :func:`general_zagreb_bruteforce` sums over the edges of a graph and is the
  ground truth everything else is checked against;
* :func:`general_zagreb_from_partition` weights degree-pair classes;
* :func:`closed_form` evaluates the published closed forms per lattice.

:func:`corollary_value` evaluates the published specialised formulas exactly
as printed, errors included; it is never normalised against the closed forms.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Union

from .graph import EdgePartition, Graph
from .lattice import Boundary, Family, LatticeSpec

IndexValue = Union[Fraction, float]
Number = Union[int, Fraction, float]


class ExponentError(ValueError):
    """Raised when a specialised index is requested with a forbidden exponent."""


def _normalize(x: Number) -> Union[int, float]:
    if isinstance(x, bool):
        raise TypeError("exponent must be a number, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        if x.denominator == 1:
            return int(x.numerator)
        return float(x)
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"exponent must be finite, got {x}")
    if x.is_integer():
        return int(x)
    return x


@dataclass(frozen=True)
class Exponents:
    """Exponent pair ``(a, b)``. Integral inputs (``2.0``, ``Fraction(4, 2)``) become ``int``."""

    a: Union[int, float]
    b: Union[int, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _normalize(self.a))
        object.__setattr__(self, "b", _normalize(self.b))

    @property
    def exact(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    def swapped(self) -> "Exponents":
        return Exponents(self.b, self.a)

    def __str__(self) -> str:
        return f"Z({_fmt_exp(self.a)},{_fmt_exp(self.b)})"


def _fmt_exp(x: Union[int, float]) -> str:
    return str(x) if isinstance(x, int) else repr(x)


ExponentsLike = Union[Exponents, tuple[Number, Number]]


def as_exponents(e: ExponentsLike) -> Exponents:
    return e if isinstance(e, Exponents) else Exponents(*e)


@lru_cache(maxsize=4096)
def _pow_exact(d: int, e: int) -> Fraction:
    return Fraction(d) ** e


def pow_degree(d: int, e: Number) -> IndexValue:
    """``d ** e`` for a vertex degree ``d >= 1``.

    Exact for integer ``e`` (negative powers give ``1 / d**|e|``), float otherwise.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    e = _normalize(e)
    if isinstance(e, int):
        return _pow_exact(d, e)
    return math.exp(e * math.log(d))


def _zero(e: Exponents) -> IndexValue:
    return Fraction(0) if e.exact else 0.0


def general_zagreb_bruteforce(g: Graph, e: ExponentsLike) -> IndexValue:
    """Literal edge sum; the oracle for every other route."""
    e = as_exponents(e)
    deg = g.degrees()
    if e.exact:
        total = Fraction(0)
        for u, v in g.edges():
            du, dv = deg[u], deg[v]
            total += pow_degree(du, e.a) * pow_degree(dv, e.b) + pow_degree(du, e.b) * pow_degree(dv, e.a)
        return total
    return math.fsum(
        float(pow_degree(deg[u], e.a)) * float(pow_degree(deg[v], e.b))
        + float(pow_degree(deg[u], e.b)) * float(pow_degree(deg[v], e.a))
        for u, v in g.edges()
    )


def general_zagreb_from_partition(p: EdgePartition, e: ExponentsLike) -> IndexValue:
    e = as_exponents(e)
    terms = [
        count * (pow_degree(lo, e.a) * pow_degree(hi, e.b) + pow_degree(lo, e.b) * pow_degree(hi, e.a))
        for (lo, hi), count in p.items()
    ]
    if e.exact:
        return sum(terms, Fraction(0))
    return math.fsum(float(t) for t in terms)


# -- closed forms ----------------------------------------------------------


def _closed_hex_free(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    return (
        (3 * m * n - 2 * m - 2 * n + 1) * (2 * P(3, a + b))
        + P(2, a + b + 2)
        + (4 * m + 4 * n - 4) * (P(3, a) * P(2, b) + P(3, b) * P(2, a))
        + 2 * (P(3, a) + P(3, b))
    )


def _closed_hex_cyl(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    return 2 * (n + 1) * (3 * m - 2) * P(3, a + b) + 4 * (n + 1) * (P(3, a) * P(2, b) + P(3, b) * P(2, a))


def _closed_hex_torus(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    return 6 * (m + 1) * (n + 1) * P(3, a + b)


def _closed_tri_free(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    six_six = 3 * (m * n + 7) - 8 * (m + n)
    side = m + n - 5
    return (
        4 * (P(2, a + 2 * b) + P(2, 2 * a + b))
        + 2 * six_six * P(6, a + b)
        + 2 * (P(3, a) * P(6, b) + P(3, b) * P(6, a))
        + side * P(2, 2 * (a + b + 1))
        + 4 * side * (P(4, a) * P(6, b) + P(4, b) * P(6, a))
        + 4 * (P(3, a) * P(4, b) + P(3, b) * P(4, a))
    )


def _closed_tri_cyl(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    return (
        n * P(2, 2 * (a + b + 1))
        + 4 * n * (P(4, a) * P(6, b) + P(4, b) * P(6, a))
        + 2 * (3 * m * n - 8 * n) * P(6, a + b)
    )


def _closed_tri_torus(m: int, n: int, a: Number, b: Number, P: Callable) -> IndexValue:
    return 6 * m * n * P(6, a + b)


_CLOSED_FORMS = {
    (Family.HEXAGONAL, Boundary.FREE): _closed_hex_free,
    (Family.HEXAGONAL, Boundary.CYLINDRICAL): _closed_hex_cyl,
    (Family.HEXAGONAL, Boundary.TOROIDAL): _closed_hex_torus,
    (Family.TRIANGULAR, Boundary.FREE): _closed_tri_free,
    (Family.TRIANGULAR, Boundary.CYLINDRICAL): _closed_tri_cyl,
    (Family.TRIANGULAR, Boundary.TOROIDAL): _closed_tri_torus,
}


def _float_pow(d: int, e: Number) -> float:
    return float(pow_degree(d, e))


def closed_form(spec: LatticeSpec, e: ExponentsLike) -> IndexValue:
    """Evaluate the published closed form of ``Z_{a,b}`` for ``spec``'s lattice."""
    e = as_exponents(e)
    P = pow_degree if e.exact else _float_pow
    value = _CLOSED_FORMS[spec.kind](spec.m, spec.n, e.a, e.b, P)
    return Fraction(value) if e.exact else float(value)


# -- specialised indices ---------------------------------------------------


class IndexKind(enum.Enum):
    M1 = "m1"
    M2 = "m2"
    F = "f"
    REZM = "rezm"
    GENERAL_FIRST_ZAGREB = "ma"
    GENERAL_RANDIC = "ra"
    SDD = "sdd"


_PARAMETRIC = {IndexKind.GENERAL_FIRST_ZAGREB, IndexKind.GENERAL_RANDIC}


@dataclass(frozen=True)
class DerivedIndex:
    """One specialised index; ``a`` is the exponent of ``M^a`` or ``R_a``."""

    kind: IndexKind
    a: Union[int, float, None] = None

    def __post_init__(self) -> None:
        if self.kind in _PARAMETRIC:
            if self.a is None:
                raise ExponentError(f"{self.kind.name} needs an exponent")
            a = _normalize(self.a)
            object.__setattr__(self, "a", a)
            if self.kind is IndexKind.GENERAL_FIRST_ZAGREB and a in (0, 1):
                raise ExponentError(f"general first Zagreb index needs a != 0, 1 (got {a})")
            if self.kind is IndexKind.GENERAL_RANDIC and a == 0:
                raise ExponentError("general Randic index needs a != 0")
        elif self.a is not None:
            raise ExponentError(f"{self.kind.name} takes no exponent")

    def __str__(self) -> str:
        if self.kind is IndexKind.GENERAL_FIRST_ZAGREB:
            return f"M^{_fmt_exp(self.a)}"
        if self.kind is IndexKind.GENERAL_RANDIC:
            return f"R_{_fmt_exp(self.a)}"
        return {IndexKind.REZM: "ReZM"}.get(self.kind, self.kind.name)

    def reduction(self) -> tuple[Fraction, Exponents]:
        """``(scale, (a, b))`` with ``index = scale * Z_{a,b}``."""
        half, one = Fraction(1, 2), Fraction(1)
        k = self.kind
        if k is IndexKind.M1:
            return one, Exponents(1, 0)
        if k is IndexKind.M2:
            return half, Exponents(1, 1)
        if k is IndexKind.F:
            return one, Exponents(2, 0)
        if k is IndexKind.REZM:
            return one, Exponents(2, 1)
        if k is IndexKind.GENERAL_FIRST_ZAGREB:
            return one, Exponents(self.a - 1, 0)
        if k is IndexKind.GENERAL_RANDIC:
            return half, Exponents(self.a, self.a)
        return one, Exponents(1, -1)


M1 = DerivedIndex(IndexKind.M1)
M2 = DerivedIndex(IndexKind.M2)
F = DerivedIndex(IndexKind.F)
REZM = DerivedIndex(IndexKind.REZM)
SDD = DerivedIndex(IndexKind.SDD)


def general_first_zagreb(a: Number) -> DerivedIndex:
    return DerivedIndex(IndexKind.GENERAL_FIRST_ZAGREB, a)


def general_randic(a: Number) -> DerivedIndex:
    return DerivedIndex(IndexKind.GENERAL_RANDIC, a)


def _scale(scale: Fraction, value: IndexValue) -> IndexValue:
    return scale * value if isinstance(value, Fraction) else float(scale) * value


def derived_index(source: Union[Graph, LatticeSpec], kind: DerivedIndex) -> IndexValue:
    """Specialised index via its ``Z_{a,b}`` reduction.

    A :class:`Graph` source goes through the brute-force sum, a
    :class:`LatticeSpec` through the closed form.
    """
    scale, e = kind.reduction()
    if isinstance(source, LatticeSpec):
        return _scale(scale, closed_form(source, e))
    return _scale(scale, general_zagreb_bruteforce(source, e))


# -- printed corollary formulas ----------------------------------------------


def _corollary_hex_free(m, n, k: DerivedIndex, P):
    a = k.a
    if k.kind is IndexKind.M1:
        return 18 * m * n + 8 * m + 8 * n + 2
    if k.kind is IndexKind.M2:
        return 27 * m * n + 6 * m + 6 * n - 1
    if k.kind is IndexKind.F:
        return 54 * m * n + 16 * m + 16 * n + 2
    if k.kind is IndexKind.REZM:
        return 162 * m * n + 12 * m + 12 * n - 10
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return 6 * m * n * P(3, a - 1) + P(2, a + 1) + 2 + P(2, a - 1) * (4 * m + 4 * n - 4)
    if k.kind is IndexKind.GENERAL_RANDIC:
        return (
            P(3, 2 * a) * (3 * m * n - 2 * m - 2 * n + 1)
            + P(2, 2 * a + 1)
            + P(2, a) * P(3, a) * (4 * m + 4 * n - 4)
            + 2 * P(3, a)
        )
    return 2 * (3 * m * n - 2 * m - 2 * n + 1) + Fraction(13, 6) * (4 * m + 4 * n - 4) + Fraction(32, 3)


def _corollary_hex_cyl(m, n, k: DerivedIndex, P):
    a = k.a
    if k.kind is IndexKind.M1:
        return 2 * (n + 1) * (9 * m + 4)
    if k.kind is IndexKind.M2:
        return 3 * (n + 1) * (9 * m + 2)
    if k.kind is IndexKind.F:
        return 2 * (n + 1) * (27 * m + 8)
    if k.kind is IndexKind.REZM:
        return 6 * (n + 1) * (27 * m + 2)
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return 2 * (n + 1) * (3 * m - 2) * P(3, a - 1) + 4 * (n + 1) * (P(3, a - 1) + P(2, a - 1))
    if k.kind is IndexKind.GENERAL_RANDIC:
        return (n + 1) * (3 * m - 2) * P(3, 2 * a) + 4 * (n + 1) * P(3, a) * P(2, a)
    return 2 * (n + 1) * (3 * m + Fraction(7, 3))


def _corollary_hex_torus(m, n, k: DerivedIndex, P):
    a = k.a
    if k.kind is IndexKind.M1:
        return 18 * (m + 1) * (n + 1)
    if k.kind is IndexKind.M2:
        return 27 * (m + 1) * (n + 1)
    if k.kind is IndexKind.F:
        return 54 * (m + 1) * (n + 1)
    if k.kind is IndexKind.REZM:
        return 162 * (m + 1) * (n + 1)
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return 6 * (m + 1) * (n + 1) * P(3, a - 1)
    if k.kind is IndexKind.GENERAL_RANDIC:
        return (m + 1) * (n + 1) * P(3, 2 * a + 1)
    return 6 * (m + 1) * (n + 1)


def _corollary_tri_free(m, n, k: DerivedIndex, P):
    a = k.a
    six_six = 3 * (m * n + 7) - 8 * (m + n)
    side = m + n - 5
    if k.kind is IndexKind.M1:
        return 12 * six_six + 56 * side + 70
    if k.kind is IndexKind.M2:
        return 36 * six_six + 128 * side + 116
    if k.kind is IndexKind.F:
        return 72 * six_six + 272 * side + 270
    if k.kind is IndexKind.REZM:
        return 432 * six_six + 1216 * side + 852
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return (
            2 * six_six * P(6, a - 1)
            + 2 * (P(3, a - 1) + P(6, a - 1))
            + 4 * (P(3, a - 1) + P(4, a - 1))
            + 4 * (P(2, a - 1) + P(2, 2 * (a - 1)))
            + side * (P(2, 2 * a) + 4 * (P(4, a - 1) + P(6, a - 1)))
        )
    if k.kind is IndexKind.GENERAL_RANDIC:
        return (
            six_six * P(6, 2 * a)
            + 4 * P(2, 3 * a)
            + side * P(2, 4 * a + 1)
            + 2 * P(3, a) * P(6, a)
            + 4 * side * P(4, a) * P(6, a)
            + 4 * P(3, a) * P(4, a)
        )
    return 2 * six_six + Fraction(38, 3) * side + Fraction(70, 3)


def _corollary_tri_cyl(m, n, k: DerivedIndex, P):
    a = k.a
    six_six = 3 * m * n - 8 * n
    if k.kind is IndexKind.M1:
        return 56 * n + 12 * six_six
    if k.kind is IndexKind.M2:
        return 128 * n + 36 * six_six
    if k.kind is IndexKind.F:
        return 272 * n + 72 * six_six
    if k.kind is IndexKind.REZM:
        return 1216 * n + 432 * six_six
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return n * P(2, 2 * a) + 4 * n * (P(4, a - 1) + P(6, a - 1)) + 2 * six_six * P(6, a - 1)
    if k.kind is IndexKind.GENERAL_RANDIC:
        return n * P(2, 4 * a + 1) + 4 * n * P(4, a) * P(6, a) + six_six * P(6, 2 * a)
    return Fraction(38, 3) * n + 2 * six_six


def _corollary_tri_torus(m, n, k: DerivedIndex, P):
    a = k.a
    if k.kind is IndexKind.M1:
        return 36 * m * n
    if k.kind is IndexKind.M2:
        # printed as 18mn; the closed form gives 108mn
        return 18 * m * n
    if k.kind is IndexKind.F:
        return 216 * m * n
    if k.kind is IndexKind.REZM:
        return 1296 * m * n
    if k.kind is IndexKind.GENERAL_FIRST_ZAGREB:
        return 6 * m * n * P(6, a - 1)
    if k.kind is IndexKind.GENERAL_RANDIC:
        return 3 * m * n * P(6, 2 * a)
    return 6 * m * n


_COROLLARIES = {
    (Family.HEXAGONAL, Boundary.FREE): _corollary_hex_free,
    (Family.HEXAGONAL, Boundary.CYLINDRICAL): _corollary_hex_cyl,
    (Family.HEXAGONAL, Boundary.TOROIDAL): _corollary_hex_torus,
    (Family.TRIANGULAR, Boundary.FREE): _corollary_tri_free,
    (Family.TRIANGULAR, Boundary.CYLINDRICAL): _corollary_tri_cyl,
    (Family.TRIANGULAR, Boundary.TOROIDAL): _corollary_tri_torus,
}


def corollary_value(spec: LatticeSpec, kind: DerivedIndex) -> IndexValue:
    """Published specialised formula for ``spec``'s lattice, evaluated verbatim."""
    _, e = kind.reduction()
    P = pow_degree if e.exact else _float_pow
    value = _COROLLARIES[spec.kind](spec.m, spec.n, kind, P)
    return Fraction(value) if e.exact else float(value)


# -- direct definitions (no Z_{a,b} involved) ---------------------------------


def first_zagreb_vertex_sum(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def first_zagreb_edge_sum(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] + deg[v] for u, v in g.edges())


def forgotten_vertex_sum(g: Graph) -> int:
    return sum(d**3 for d in g.degrees())


def forgotten_edge_sum(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] ** 2 + deg[v] ** 2 for u, v in g.edges())


def second_zagreb_edge_sum(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def redefined_zagreb_edge_sum(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] * (deg[u] + deg[v]) for u, v in g.edges())


def sdd_edge_sum(g: Graph) -> Fraction:
    deg = g.degrees()
    return sum((Fraction(deg[u], deg[v]) + Fraction(deg[v], deg[u]) for u, v in g.edges()), Fraction(0))


def general_first_zagreb_vertex_sum(g: Graph, a: int) -> Fraction:
    """``sum d(v)^a`` over non-isolated vertices."""
    return sum((Fraction(d) ** a for d in g.degrees() if d), Fraction(0))


def general_randic_edge_sum(g: Graph, a: int) -> Fraction:
    deg = g.degrees()
    return sum((Fraction(deg[u] * deg[v]) ** a for u, v in g.edges()), Fraction(0))


def direct_index(g: Graph, kind: DerivedIndex) -> IndexValue:
    """Specialised index from its own definition, for integer exponents."""
    k = kind.kind
    if k is IndexKind.M1:
        return Fraction(first_zagreb_vertex_sum(g))
    if k is IndexKind.M2:
        return Fraction(second_zagreb_edge_sum(g))
    if k is IndexKind.F:
        return Fraction(forgotten_vertex_sum(g))
    if k is IndexKind.REZM:
        return Fraction(redefined_zagreb_edge_sum(g))
    if k is IndexKind.SDD:
        return sdd_edge_sum(g)
    if not isinstance(kind.a, int):
        raise ExponentError(f"direct {kind} is only defined here for integer exponents")
    if k is IndexKind.GENERAL_FIRST_ZAGREB:
        return general_first_zagreb_vertex_sum(g, kind.a)
    return general_randic_edge_sum(g, kind.a)


# -- formatting --------------------------------------------------------------


def format_value(value: IndexValue) -> str:
    """``p/q`` (or bare ``p``) for exact values, 17 significant digits for floats."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return format(value, ".17g")

"""Cross-checks: generated lattices against published partitions, closed forms
and printed formulas against the brute-force oracle.

Mismatches are data, never exceptions. A mismatch is *expected* only when it
is listed in the erratum allowlist (``errata.json`` shipped with the package,
or a user-supplied file of the same shape).
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .graph import EdgePartition, Graph, degree_pair_partition
from .lattice import FAMILIES, MIN_SIZE, Boundary, Family, LatticeSpec, expected_partition, generate
from .zagreb import (
    F,
    M1,
    M2,
    REZM,
    SDD,
    DerivedIndex,
    Exponents,
    IndexValue,
    closed_form,
    corollary_value,
    direct_index,
    first_zagreb_edge_sum,
    first_zagreb_vertex_sum,
    forgotten_edge_sum,
    forgotten_vertex_sum,
    format_value,
    general_first_zagreb,
    general_randic,
    general_zagreb_bruteforce,
)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_REAL_PAIRS: tuple[tuple[float, float], ...] = ((0.5, -0.5), (1.5, 2.5), (-0.5, -0.5))

# M^a and R_a are probed at a = 3; R_a additionally at a = -1.
COROLLARY_PROBES: tuple[DerivedIndex, ...] = (
    M1,
    M2,
    F,
    REZM,
    general_first_zagreb(3),
    general_randic(3),
    general_randic(-1),
    SDD,
)

REDUCTION_PROBES: tuple[DerivedIndex, ...] = COROLLARY_PROBES

CSV_COLUMNS = ("family", "boundary", "m", "n", "check_kind", "subject", "lhs", "rhs", "verdict", "rel_diff", "erratum")


class ConfigError(ValueError):
    pass


class CheckKind(enum.Enum):
    PARTITION = "partition"
    THEOREM = "theorem"
    COROLLARY = "corollary"
    REDUCTION = "reduction-identity"


MATCH = "match"
MISMATCH = "mismatch"

Operand = Union[IndexValue, int, EdgePartition]


@dataclass(frozen=True)
class VerificationRecord:
    """One comparison. ``lhs`` is the value under test, ``rhs`` the reference."""

    spec: Optional[LatticeSpec]
    check_kind: CheckKind
    subject: str
    lhs: Operand
    rhs: Operand
    verdict: str
    abs_diff: Optional[IndexValue] = None
    rel_diff: Optional[IndexValue] = None
    allowlisted: bool = False

    @property
    def matched(self) -> bool:
        return self.verdict == MATCH

    @property
    def unexpected(self) -> bool:
        return not self.matched and not self.allowlisted

    @property
    def summary_subject(self) -> str:
        # theorem checks at different exponents share one summary line
        return "Z" if self.check_kind is CheckKind.THEOREM else self.subject

    def partition_differences(self) -> dict[tuple[int, int], tuple[int, int]]:
        if self.check_kind is not CheckKind.PARTITION:
            return {}
        keys = sorted(set(self.lhs) | set(self.rhs))
        return {k: (self.lhs.get(k, 0), self.rhs.get(k, 0)) for k in keys if self.lhs.get(k, 0) != self.rhs.get(k, 0)}

    def as_dict(self) -> dict:
        spec = self.spec
        row = {
            "family": spec.family.value if spec else "",
            "boundary": spec.boundary.value if spec else "",
            "m": spec.m if spec else "",
            "n": spec.n if spec else "",
            "check_kind": self.check_kind.value,
            "subject": self.subject,
            "lhs": format_operand(self.lhs),
            "rhs": format_operand(self.rhs),
            "verdict": self.verdict,
            "rel_diff": "" if self.rel_diff is None else format_value(self.rel_diff),
            "erratum": "allowlisted" if self.allowlisted else "",
        }
        return row


def format_operand(x: Operand) -> str:
    if isinstance(x, dict):
        return ";".join(f"({lo},{hi}):{count}" for (lo, hi), count in sorted(x.items()))
    return format_value(x)


def compare_values(lhs: IndexValue, rhs: IndexValue, tolerance: float = DEFAULT_TOLERANCE):
    """Return ``(verdict, abs_diff, rel_diff)``.

    Two exact values must be equal; if either side is a float the relative
    difference must not exceed ``tolerance``.
    """
    exact = isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction))
    if exact:
        diff = abs(Fraction(lhs) - Fraction(rhs))
        if rhs:
            rel = diff / abs(Fraction(rhs))
        else:
            rel = Fraction(0) if diff == 0 else math.inf
        return (MATCH if diff == 0 else MISMATCH), diff, rel
    lf, rf = float(lhs), float(rhs)
    diff = abs(lf - rf)
    if rf:
        rel = diff / abs(rf)
    else:
        rel = 0.0 if diff == 0 else math.inf
    return (MATCH if rel <= tolerance else MISMATCH), diff, rel


def _value_record(spec, kind, subject, lhs, rhs, tolerance) -> VerificationRecord:
    verdict, diff, rel = compare_values(lhs, rhs, tolerance)
    return VerificationRecord(spec, kind, subject, lhs, rhs, verdict, diff, rel)


# -- single checks -------------------------------------------------------------


def verify_partition(spec: LatticeSpec, graph: Optional[Graph] = None) -> VerificationRecord:
    g = generate(spec) if graph is None else graph
    got = degree_pair_partition(g)
    want = expected_partition(spec)
    return VerificationRecord(spec, CheckKind.PARTITION, "partition", got, want, MATCH if got == want else MISMATCH)


def verify_theorem(
    spec: LatticeSpec,
    e: Union[Exponents, tuple],
    graph: Optional[Graph] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationRecord:
    e = e if isinstance(e, Exponents) else Exponents(*e)
    g = generate(spec) if graph is None else graph
    return _value_record(
        spec, CheckKind.THEOREM, str(e), closed_form(spec, e), general_zagreb_bruteforce(g, e), tolerance
    )


def _oracle_index(g: Graph, kind: DerivedIndex) -> IndexValue:
    scale, e = kind.reduction()
    value = general_zagreb_bruteforce(g, e)
    return scale * value if isinstance(value, Fraction) else float(scale) * value


def verify_corollaries(
    spec: LatticeSpec,
    graph: Optional[Graph] = None,
    probes: Sequence[DerivedIndex] = COROLLARY_PROBES,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[VerificationRecord]:
    g = generate(spec) if graph is None else graph
    return [
        _value_record(spec, CheckKind.COROLLARY, str(k), corollary_value(spec, k), _oracle_index(g, k), tolerance)
        for k in probes
    ]


def verify_reductions(
    g: Graph,
    spec: Optional[LatticeSpec] = None,
    probes: Sequence[DerivedIndex] = REDUCTION_PROBES,
) -> list[VerificationRecord]:
    """Each index from its own definition against its ``Z_{a,b}`` reduction.

    Also checks the vertex-sum and edge-sum forms of M1 and F against each other.
    """
    kind = CheckKind.REDUCTION
    records = [
        _value_record(spec, kind, "M1:vertex=edge", Fraction(first_zagreb_vertex_sum(g)),
                      Fraction(first_zagreb_edge_sum(g)), 0.0),
        _value_record(spec, kind, "F:vertex=edge", Fraction(forgotten_vertex_sum(g)),
                      Fraction(forgotten_edge_sum(g)), 0.0),
    ]
    for k in probes:
        records.append(_value_record(spec, kind, str(k), direct_index(g, k), _oracle_index(g, k), 0.0))
    return records


# -- sweeps --------------------------------------------------------------------


def _family_token(kind: tuple[Family, Boundary]) -> str:
    return f"{kind[0].value}:{kind[1].value}"


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[tuple[Family, Boundary], ...] = FAMILIES
    m_range: tuple[int, int] = (3, 8)
    n_range: tuple[int, int] = (3, 8)
    integer_exponent_box: int = 3
    real_exponent_samples: tuple[tuple[float, float], ...] = DEFAULT_REAL_PAIRS
    tolerance: float = DEFAULT_TOLERANCE
    reductions: bool = True

    def validate(self) -> None:
        for fam in self.families:
            if fam not in FAMILIES:
                raise ConfigError(f"unknown lattice family {fam!r}")
        for name, (lo, hi) in (("m", self.m_range), ("n", self.n_range)):
            if lo <= hi and lo < MIN_SIZE:
                raise ConfigError(f"{name} range {lo}..{hi} goes below {MIN_SIZE}")
        if self.integer_exponent_box < 0:
            raise ConfigError("integer exponent box must be >= 0")
        if not (isinstance(self.tolerance, (int, float)) and math.isfinite(self.tolerance) and self.tolerance > 0):
            raise ConfigError(f"tolerance must be a positive finite number, got {self.tolerance!r}")
        for pair in self.real_exponent_samples:
            if len(pair) != 2 or not all(math.isfinite(float(x)) for x in pair):
                raise ConfigError(f"bad real exponent pair {pair!r}")

    def specs(self) -> list[LatticeSpec]:
        order = [f for f in FAMILIES if f in set(self.families)]
        return [
            LatticeSpec(fam, bnd, m, n)
            for fam, bnd in order
            for m in range(self.m_range[0], self.m_range[1] + 1)
            for n in range(self.n_range[0], self.n_range[1] + 1)
        ]

    def exponents(self) -> list[Exponents]:
        box = self.integer_exponent_box
        pairs = [Exponents(a, b) for a in range(-box, box + 1) for b in range(-box, box + 1)]
        pairs.extend(Exponents(a, b) for a, b in self.real_exponent_samples)
        return pairs

    def as_dict(self) -> dict:
        return {
            "families": [_family_token(f) for f in FAMILIES if f in set(self.families)],
            "m_range": list(self.m_range),
            "n_range": list(self.n_range),
            "integer_exponent_box": self.integer_exponent_box,
            "real_exponent_samples": [[repr(float(a)), repr(float(b))] for a, b in self.real_exponent_samples],
            "tolerance": repr(float(self.tolerance)),
            "reductions": self.reductions,
        }


@dataclass(frozen=True)
class Erratum:
    family: str
    boundary: str
    check_kind: str
    subject: str

    def covers(self, rec: VerificationRecord) -> bool:
        return (
            rec.spec is not None
            and rec.spec.family.value == self.family
            and rec.spec.boundary.value == self.boundary
            and rec.check_kind.value == self.check_kind
            and rec.subject == self.subject
        )


def load_allowlist(path: Union[str, Path, None] = None) -> tuple[Erratum, ...]:
    if path is None:
        text = resources.files(__package__).joinpath("errata.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
        return tuple(
            Erratum(e["family"], e["boundary"], e["check_kind"], e["subject"]) for e in data["errata"]
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"malformed erratum allowlist: {exc}") from exc


def apply_allowlist(records: Iterable[VerificationRecord], errata: Sequence[Erratum]) -> list[VerificationRecord]:
    out = []
    for rec in records:
        if not rec.matched and any(e.covers(rec) for e in errata):
            rec = replace(rec, allowlisted=True)
        out.append(rec)
    return out


def check_point(spec: LatticeSpec, cfg: SweepConfig) -> list[VerificationRecord]:
    """All checks for one grid point, in report order."""
    g = generate(spec)
    records = [verify_partition(spec, g)]
    records.extend(verify_theorem(spec, e, g, cfg.tolerance) for e in cfg.exponents())
    records.extend(verify_corollaries(spec, g, tolerance=cfg.tolerance))
    if cfg.reductions:
        records.extend(verify_reductions(g, spec))
    return records


def _check_point_args(args: tuple[LatticeSpec, SweepConfig]) -> list[VerificationRecord]:
    return check_point(*args)


@dataclass
class Report:
    config: SweepConfig
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def unexpected(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.unexpected]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def totals(self) -> dict[str, int]:
        c = Counter()
        for r in self.records:
            c["records"] += 1
            c[r.verdict] += 1
            if r.allowlisted:
                c["allowlisted"] += 1
        return {
            "records": c["records"],
            "match": c[MATCH],
            "mismatch": c[MISMATCH],
            "allowlisted": c["allowlisted"],
            "unexpected": c[MISMATCH] - c["allowlisted"],
        }

    def summary(self) -> list[dict]:
        """Match/mismatch counts per ``(family, boundary, check_kind, subject)``, in record order."""
        rows: dict[tuple, dict] = {}
        for r in self.records:
            key = (
                r.spec.family.value if r.spec else "",
                r.spec.boundary.value if r.spec else "",
                r.check_kind.value,
                r.summary_subject,
            )
            row = rows.setdefault(
                key,
                {"family": key[0], "boundary": key[1], "check_kind": key[2], "subject": key[3],
                 "match": 0, "mismatch": 0, "allowlisted": 0},
            )
            row[r.verdict] += 1
            row["allowlisted"] += r.allowlisted
        return list(rows.values())

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("# lattice-zagreb verification report\n")
        buf.write(f"# config: {json.dumps(self.config.as_dict(), sort_keys=True)}\n")
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in self.records:
            writer.writerow(r.as_dict())
        return buf.getvalue()

    def to_json(self) -> str:
        records = []
        for r in self.records:
            d = r.as_dict()
            d["abs_diff"] = "" if r.abs_diff is None else format_value(r.abs_diff)
            records.append(d)
        doc = {
            "config": self.config.as_dict(),
            "records": records,
            "summary": {"totals": self.totals(), "subjects": self.summary()},
        }
        return json.dumps(doc, indent=1, sort_keys=False) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ConfigError(f"unknown report format {fmt!r}")


def run_sweep(
    cfg: SweepConfig,
    workers: int = 1,
    allowlist: Optional[Sequence[Erratum]] = None,
) -> Report:
    """Run partition, theorem, corollary (and reduction) checks over the grid.

    Grid points are independent and may run in ``workers`` processes; record
    order is always (family, m, n, check kind, subject) regardless.
    """
    cfg.validate()
    errata = load_allowlist() if allowlist is None else allowlist
    specs = cfg.specs()
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_check_point_args, [(s, cfg) for s in specs]))
    else:
        chunks = [check_point(s, cfg) for s in specs]
    records = [rec for chunk in chunks for rec in chunk]
    return Report(cfg, apply_allowlist(records, errata))

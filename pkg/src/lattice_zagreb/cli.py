"""Command-line front end.

Exit codes:
  0  success (and, for verify/sweep, no unexpected mismatches)
  1  verify/sweep found a mismatch that is not allowlisted
  2  bad lattice spec syntax, bad flags or sweep configuration
  3  lattice size outside m, n >= 3
  4  file I/O failure
  5  exponent not allowed for the requested derived index
"""

from __future__ import annotations

import json
import os
import re
import sys
from pathlib import Path
from typing import Optional

import click

from . import __version__
from .graph import GraphError, degree_pair_partition, format_edgelist, parse_edgelist
from .lattice import FAMILIES, Boundary, Family, LatticeError, LatticeSpec, SpecSyntaxError, expected_partition, generate, parse_spec
from .verify import (
    DEFAULT_REAL_PAIRS,
    DEFAULT_TOLERANCE,
    ConfigError,
    Report,
    SweepConfig,
    apply_allowlist,
    check_point,
    format_operand,
    load_allowlist,
    run_sweep,
)
from .zagreb import (
    DerivedIndex,
    Exponents,
    ExponentError,
    IndexKind,
    closed_form,
    derived_index,
    format_value,
    general_zagreb_bruteforce,
)

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4
EXIT_EXPONENT = 5

THREADS_ENV = "LATTICE_ZAGREB_THREADS"


class CLIError(click.ClickException):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def _spec(text: str):
    try:
        return parse_spec(text)
    except SpecSyntaxError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    except LatticeError as exc:
        raise CLIError(str(exc), EXIT_DOMAIN) from exc


def _write(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        click.echo(text, nl=False)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot write {output}: {exc}", EXIT_IO) from exc


def _number(text: str, flag: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise CLIError(f"{flag}: cannot parse {text!r} as a number", EXIT_USAGE) from None


def _range(text: str, flag: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if m is None:
        raise CLIError(f"{flag}: expected lo..hi, got {text!r}", EXIT_USAGE)
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def _families(text: str) -> tuple[tuple[Family, Boundary], ...]:
    chosen = set()
    for token in filter(None, (t.strip() for t in text.split(","))):
        if token == "all":
            chosen.update(FAMILIES)
            continue
        fam, _, bnd = token.partition(":")
        try:
            family = Family(fam)
            bounds = [Boundary(bnd)] if bnd else list(Boundary)
        except ValueError:
            raise CLIError(f"--families: unknown family {token!r}", EXIT_USAGE) from None
        chosen.update((family, b) for b in bounds)
    return tuple(f for f in FAMILIES if f in chosen)


def _real_pairs(text: str) -> tuple[tuple[float, float], ...]:
    if text.strip().lower() in ("", "none"):
        return ()
    pairs = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise CLIError(f"--real-pairs: expected a,b pairs separated by ';', got {chunk!r}", EXIT_USAGE)
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise CLIError(f"--real-pairs: cannot parse {chunk!r}", EXIT_USAGE) from None
    return tuple(pairs)


def _workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise CLIError(f"{THREADS_ENV} must be a positive integer, got {raw!r}", EXIT_USAGE) from None
    if value < 1:
        raise CLIError(f"{THREADS_ENV} must be a positive integer, got {raw!r}", EXIT_USAGE)
    return value


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="lattice-zagreb")
def main() -> None:
    """Lattice networks and their general (a,b)-Zagreb index."""


@main.command()
@click.argument("spec")
@click.option("-o", "--output", default=None, help="Output path (default: stdout).")
@click.option("--format", "fmt", type=click.Choice(["edgelist", "json"]), default="edgelist", show_default=True)
def gen(spec: str, output: Optional[str], fmt: str) -> None:
    """Generate a lattice, e.g. hex:torus:4x5 or tri:free:6x6."""
    g = generate(_spec(spec))
    if fmt == "edgelist":
        text = format_edgelist(g)
    else:
        text = json.dumps({"vertices": g.vertex_count, "edges": [list(e) for e in g.edges()]}) + "\n"
    _write(text, output)


@main.command()
@click.argument("spec")
@click.option("--expected", is_flag=True, help="Show the published counts next to the generated ones.")
def partition(spec: str, expected: bool) -> None:
    """Print the degree-pair edge partition of a lattice."""
    s = _spec(spec)
    got = degree_pair_partition(generate(s))
    if not expected:
        for (lo, hi), count in got.items():
            click.echo(f"({lo},{hi}) {count}")
        return
    want = expected_partition(s)
    for key in sorted(set(got) | set(want)):
        g, w = got.get(key, 0), want.get(key, 0)
        click.echo(f"({key[0]},{key[1]}) {g} {w} {'match' if g == w else 'mismatch'}")


_DERIVED_NAMES = [k.value for k in IndexKind]


@main.command()
@click.argument("source")
@click.option("--a", "a_text", default=None, help="First exponent (also the parameter of ma / ra).")
@click.option("--b", "b_text", default=None, help="Second exponent.")
@click.option("--derived", type=click.Choice(_DERIVED_NAMES, case_sensitive=False), default=None,
              help="Specialised index instead of the raw Z(a,b).")
@click.option("--closed-form", "use_closed", is_flag=True,
              help="Use the published closed form instead of the edge sum (lattice specs only).")
def index(source: str, a_text: Optional[str], b_text: Optional[str], derived: Optional[str], use_closed: bool) -> None:
    """Compute Z(a,b) or a derived index for a lattice spec or an edge-list file."""
    if os.path.exists(source):
        if use_closed:
            raise CLIError("--closed-form needs a lattice spec, not a file", EXIT_USAGE)
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise CLIError(f"cannot read {source}: {exc}", EXIT_IO) from exc
        try:
            target = parse_edgelist(text)
        except GraphError as exc:
            raise CLIError(f"{source}: {exc}", EXIT_USAGE) from exc
    else:
        spec = _spec(source)
        target = spec if use_closed else generate(spec)

    if derived is not None:
        kind = IndexKind(derived.lower())
        parametric = kind in (IndexKind.GENERAL_FIRST_ZAGREB, IndexKind.GENERAL_RANDIC)
        if b_text is not None or (a_text is not None and not parametric):
            raise CLIError(f"--derived {derived} does not take these exponents", EXIT_EXPONENT)
        a = None if a_text is None else _number(a_text, "--a")
        try:
            d = DerivedIndex(kind, a)
        except ExponentError as exc:
            raise CLIError(str(exc), EXIT_EXPONENT) from exc
        click.echo(format_value(derived_index(target, d)))
        return

    if a_text is None or b_text is None:
        raise CLIError("both --a and --b are required without --derived", EXIT_USAGE)
    e = Exponents(_number(a_text, "--a"), _number(b_text, "--b"))
    if isinstance(target, LatticeSpec):
        value = closed_form(target, e)
    else:
        value = general_zagreb_bruteforce(target, e)
    click.echo(format_value(value))


def _text_report(records) -> str:
    lines = []
    for r in records:
        flag = " (allowlisted erratum)" if r.allowlisted else ""
        lines.append(f"{r.check_kind.value:<18} {r.subject:<16} {format_operand(r.lhs)} | "
                     f"{format_operand(r.rhs)} -> {r.verdict}{flag}")
    return "\n".join(lines) + "\n"


@main.command()
@click.argument("spec")
@click.option("--int-box", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--tol", type=float, default=DEFAULT_TOLERANCE, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text", show_default=True)
def verify(spec: str, int_box: int, tol: float, fmt: str) -> None:
    """Run every check for a single lattice."""
    s = _spec(spec)
    cfg = SweepConfig(families=(s.kind,), m_range=(s.m, s.m), n_range=(s.n, s.n),
                      integer_exponent_box=int_box, tolerance=tol)
    try:
        cfg.validate()
        records = apply_allowlist(check_point(s, cfg), load_allowlist())
    except ConfigError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    if fmt == "text":
        click.echo(_text_report(records), nl=False)
    else:
        click.echo(Report(cfg, records).render(fmt), nl=False)
    if any(r.unexpected for r in records):
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--families", "families_text", default="all", show_default=True,
              help="Comma list of hex, tri, hex:free, tri:torus, ...")
@click.option("--m", "m_text", default="3..8", show_default=True, help="Inclusive range lo..hi.")
@click.option("--n", "n_text", default="3..8", show_default=True, help="Inclusive range lo..hi.")
@click.option("--int-box", type=int, default=3, show_default=True, help="Integer exponents with |a|,|b| <= box.")
@click.option("--real-pairs", "real_text", default=";".join(f"{a},{b}" for a, b in DEFAULT_REAL_PAIRS),
              show_default=True, help="Real exponent pairs 'a,b;a,b' or 'none'.")
@click.option("--tol", type=float, default=DEFAULT_TOLERANCE, show_default=True)
@click.option("--report", "report_path", default=None, help="Report path (default: stdout).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--allowlist", "allowlist_path", default=None, help="Erratum allowlist JSON (default: bundled).")
@click.option("--no-reductions", is_flag=True, help="Skip reduction-identity checks.")
def sweep(families_text, m_text, n_text, int_box, real_text, tol, report_path, fmt, allowlist_path,
          no_reductions) -> None:
    """Verify partitions, closed forms and printed formulas over a grid."""
    cfg = SweepConfig(
        families=_families(families_text),
        m_range=_range(m_text, "--m"),
        n_range=_range(n_text, "--n"),
        integer_exponent_box=int_box,
        real_exponent_samples=_real_pairs(real_text),
        tolerance=tol,
        reductions=not no_reductions,
    )
    try:
        cfg.validate()
        errata = load_allowlist(allowlist_path)
    except ConfigError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    except OSError as exc:
        raise CLIError(f"cannot read allowlist: {exc}", EXIT_IO) from exc
    workers = _workers()
    report = run_sweep(cfg, workers=workers, allowlist=errata)
    _write(report.render(fmt), report_path)

    for row in report.summary():
        if row["mismatch"]:
            note = "allowlisted erratum" if row["allowlisted"] == row["mismatch"] else "UNEXPECTED"
            click.echo(f"{row['family']}:{row['boundary']} {row['check_kind']} {row['subject']}: "
                       f"{row['mismatch']} mismatch(es), {note}", err=True)
    t = report.totals()
    click.echo(f"{t['records']} checks, {t['match']} match, {t['mismatch']} mismatch "
               f"({t['allowlisted']} allowlisted, {t['unexpected']} unexpected)", err=True)
    if not report.ok:
        sys.exit(EXIT_MISMATCH)


if __name__ == "__main__":  # pragma: no cover
    main()

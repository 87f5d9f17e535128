import csv
import io
import json
from fractions import Fraction

import pytest

from lattice_zagreb.lattice import Boundary, Family, parse_spec
from lattice_zagreb.verify import (
    MATCH,
    MISMATCH,
    CheckKind,
    ConfigError,
    Erratum,
    SweepConfig,
    compare_values,
    load_allowlist,
    run_sweep,
    verify_corollaries,
    verify_partition,
    verify_reductions,
    verify_theorem,
)
from lattice_zagreb.graph import graph_from_edges

HEX = Family.HEXAGONAL
TRI = Family.TRIANGULAR


def test_verify_partition_examples():
    rec = verify_partition(parse_spec("tri:free:5x5"))
    assert rec.verdict == MATCH
    assert rec.lhs[(6, 6)] == 16
    rec = verify_partition(parse_spec("hex:torus:3x3"))
    assert rec.verdict == MATCH and rec.lhs == {(3, 3): 48}
    rec = verify_partition(parse_spec("tri:cyl:3x3"))
    assert rec.lhs == rec.rhs == {(4, 4): 6, (4, 6): 12, (6, 6): 3}


def test_verify_partition_lists_differences():
    spec = parse_spec("hex:free:3x3")
    broken = graph_from_edges(32, [(0, 1)])
    rec = verify_partition(spec, broken)
    assert rec.verdict == MISMATCH
    diffs = rec.partition_differences()
    assert diffs[(1, 1)] == (1, 0)
    assert diffs[(3, 3)] == (0, 16)
    assert set(diffs) == {(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)}


def test_verify_theorem_examples():
    rec = verify_theorem(parse_spec("hex:free:4x6"), (2, 1))
    assert rec.verdict == MATCH and rec.lhs == rec.rhs == 3998
    rec = verify_theorem(parse_spec("tri:torus:3x3"), (0, 0))
    assert rec.lhs == rec.rhs == 54
    rec = verify_theorem(parse_spec("tri:free:3x3"), (1, -1))
    assert rec.lhs == rec.rhs == 36
    rec = verify_theorem(parse_spec("hex:free:5x5"), (0.5, -0.5))
    assert rec.verdict == MATCH and rec.rel_diff <= 1e-9
    assert rec.subject == "Z(0.5,-0.5)"


def test_verify_corollaries_hex_torus_all_match():
    recs = verify_corollaries(parse_spec("hex:torus:3x3"))
    assert [r.subject for r in recs] == ["M1", "M2", "F", "ReZM", "M^3", "R_3", "R_-1", "SDD"]
    assert all(r.verdict == MATCH for r in recs)


def test_verify_corollaries_flags_tri_torus_m2():
    recs = {r.subject: r for r in verify_corollaries(parse_spec("tri:torus:3x3"))}
    assert recs["M2"].verdict == MISMATCH
    assert (recs["M2"].lhs, recs["M2"].rhs) == (162, 972)
    assert all(r.verdict == MATCH for s, r in recs.items() if s != "M2")


def test_hex_cyl_sdd_corollary():
    recs = {r.subject: r for r in verify_corollaries(parse_spec("hex:cyl:3x3"))}
    assert recs["SDD"].verdict == MATCH
    assert recs["SDD"].lhs == Fraction(272, 3)


def test_verify_reductions_on_small_graph():
    path = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    recs = verify_reductions(path)
    assert all(r.verdict == MATCH for r in recs)
    assert recs[0].subject == "M1:vertex=edge" and recs[0].lhs == 10


def test_compare_values():
    assert compare_values(Fraction(1, 3), Fraction(1, 3))[0] == MATCH
    verdict, diff, rel = compare_values(Fraction(162), Fraction(972))
    assert verdict == MISMATCH and diff == 810 and rel == Fraction(5, 6)
    assert compare_values(1.0, 1.0 + 1e-12)[0] == MATCH
    assert compare_values(1.0, 1.0 + 1e-8)[0] == MISMATCH
    assert compare_values(0, 0)[2] == 0


def test_empty_sweep():
    report = run_sweep(SweepConfig(m_range=(5, 4)))
    assert report.records == []
    assert report.totals() == {"records": 0, "match": 0, "mismatch": 0, "allowlisted": 0, "unexpected": 0}
    assert report.ok


@pytest.mark.parametrize(
    "cfg",
    [
        SweepConfig(tolerance=0),
        SweepConfig(tolerance=-1e-9),
        SweepConfig(tolerance=float("nan")),
        SweepConfig(m_range=(2, 5)),
        SweepConfig(n_range=(1, 4)),
        SweepConfig(integer_exponent_box=-1),
        SweepConfig(families=(("hex", "free"),)),
    ],
)
def test_config_errors_raise_before_running(cfg):
    with pytest.raises(ConfigError):
        run_sweep(cfg)


def test_real_samples_sweep():
    cfg = SweepConfig(
        families=((HEX, Boundary.FREE),), m_range=(5, 5), n_range=(5, 5),
        integer_exponent_box=0, real_exponent_samples=((0.5, -0.5), (1.5, 2.5)),
    )
    report = run_sweep(cfg)
    theorems = [r for r in report.records if r.check_kind is CheckKind.THEOREM]
    assert [r.subject for r in theorems] == ["Z(0,0)", "Z(0.5,-0.5)", "Z(1.5,2.5)"]
    assert all(r.verdict == MATCH for r in theorems)
    assert all(r.rel_diff <= 1e-9 for r in theorems)


def small_cfg(**kw):
    base = dict(m_range=(3, 4), n_range=(3, 4), integer_exponent_box=1)
    base.update(kw)
    return SweepConfig(**base)


def test_record_order():
    report = run_sweep(small_cfg())
    keys = [(r.spec.sort_key()) for r in report.records]
    assert keys == sorted(keys)
    first = report.records[: 1 + 9 + 3 + 8 + 10]
    assert [r.check_kind for r in first] == (
        [CheckKind.PARTITION] + [CheckKind.THEOREM] * 12 + [CheckKind.COROLLARY] * 8 + [CheckKind.REDUCTION] * 10
    )


def test_allowlist_marks_only_the_erratum():
    report = run_sweep(small_cfg())
    mism = [r for r in report.records if r.verdict == MISMATCH]
    assert len(mism) == 4
    assert all(r.allowlisted for r in mism)
    assert {(r.spec.family, r.spec.boundary, r.subject) for r in mism} == {(TRI, Boundary.TOROIDAL, "M2")}
    assert report.ok


def test_without_allowlist_the_erratum_fails_the_sweep():
    report = run_sweep(small_cfg(), allowlist=())
    assert not report.ok
    assert len(report.unexpected) == 4


def test_bundled_allowlist():
    assert load_allowlist() == (Erratum("tri", "torus", "corollary", "M2"),)


def test_custom_allowlist(tmp_path):
    path = tmp_path / "errata.json"
    path.write_text(json.dumps({"version": 1, "errata": []}))
    assert load_allowlist(path) == ()
    path.write_text("{}")
    with pytest.raises(ConfigError):
        load_allowlist(path)


def test_parallel_sweep_matches_serial():
    cfg = small_cfg()
    serial = run_sweep(cfg, workers=1)
    parallel = run_sweep(cfg, workers=2)
    assert parallel.to_csv() == serial.to_csv()
    assert parallel.to_json() == serial.to_json()


def test_csv_report():
    text = run_sweep(small_cfg(families=((TRI, Boundary.TOROIDAL),))).to_csv()
    lines = text.splitlines()
    assert lines[0].startswith("# ")
    assert lines[1].startswith("# config: ")
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[2:]))))
    assert list(rows[0]) == ["family", "boundary", "m", "n", "check_kind", "subject", "lhs", "rhs",
                             "verdict", "rel_diff", "erratum"]
    m2 = [r for r in rows if r["check_kind"] == "corollary" and r["subject"] == "M2"]
    assert m2[0] == {
        "family": "tri", "boundary": "torus", "m": "3", "n": "3", "check_kind": "corollary", "subject": "M2",
        "lhs": "162", "rhs": "972", "verdict": "mismatch", "rel_diff": "5/6", "erratum": "allowlisted",
    }
    assert rows[0]["lhs"] == "(6,6):27"


def test_json_report():
    report = run_sweep(small_cfg(families=((HEX, Boundary.FREE),), real_exponent_samples=((0.5, 0.25),)))
    doc = json.loads(report.to_json())
    assert doc["config"]["families"] == ["hex:free"]
    assert len(doc["records"]) == len(report.records)
    assert doc["summary"]["totals"]["mismatch"] == 0
    real = [r for r in doc["records"] if r["subject"] == "Z(0.5,0.25)"][0]
    assert real["verdict"] == "match"
    assert real["lhs"] == format(float(real["lhs"]), ".17g")
    subjects = {(s["check_kind"], s["subject"]) for s in doc["summary"]["subjects"]}
    assert ("theorem", "Z") in subjects
    assert ("corollary", "R_-1") in subjects


def test_reports_are_deterministic():
    cfg = small_cfg()
    assert run_sweep(cfg).to_csv() == run_sweep(cfg).to_csv()
    assert run_sweep(cfg).to_json() == run_sweep(cfg).to_json()

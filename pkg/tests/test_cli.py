import io
import os
import subprocess
import sys

import pytest

from degenlab.catalog import catalog_hash
from degenlab.cli import run
from degenlab.cli.report import Record, Report, ReportFormatError, parse_report, record
from degenlab.cli.suites import (
    automorphism_records,
    component_records,
    degeneration_records,
    dimension_records,
    identity_records,
    isomorphism_records,
    nondegeneration_records,
)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def verify_report(tmp_path_factory, monkeypatch_module):
    path = tmp_path_factory.mktemp("verify") / "r.jsonl"
    code, out, _ = cli("verify", "all", "--report", str(path))
    return code, out, path.read_text(encoding="utf-8")


@pytest.fixture(scope="module")
def monkeypatch_module():
    mp = pytest.MonkeyPatch()
    mp.setenv("DEGENLAB_THREADS", "1")
    yield mp
    mp.undo()


# exit codes ------------------------------------------------------------------------


def test_unknown_variety_is_usage_error():
    code, _, err = cli("catalog", "list", "--variety", "nonexistent")
    assert code == 2 and "unknown variety" in err


def test_missing_subcommand_is_usage_error():
    assert cli()[0] == 2
    assert cli("check", "nothing")[0] == 2
    assert cli("check", "dimensions", "--samples", "0")[0] == 2


def test_help_exits_zero():
    assert cli("--help")[0] == 0


def test_unreadable_catalog_is_usage_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json", encoding="utf-8")
    code, _, err = cli("catalog", "list", "--catalog", str(bad))
    assert code == 2 and "error" in err
    assert cli("catalog", "list", "--catalog", str(tmp_path / "missing.json"))[0] == 2


def test_dimensions_pass():
    code, out, _ = cli("check", "dimensions")
    assert code == 0
    assert "fail 0," in out


def test_failure_gives_exit_one():
    code, out, _ = cli("check", "nondegenerations", "--variety", "comm-pre-lie")
    assert code == 1 and "FAIL" in out


def test_catalog_list():
    code, out, _ = cli("catalog", "list", "--variety", "transposed-leibniz-poisson")
    ids = [line.split("\t")[1] for line in out.splitlines()]
    assert code == 0 and ids == ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "C8"]


# reports ---------------------------------------------------------------------------


def test_verify_all_counts(verify_report, context):
    code, out, text = verify_report
    rep = parse_report(text)
    assert code == 1
    suites = (
        identity_records(context),
        automorphism_records(context),
        degeneration_records(context),
        nondegeneration_records(context),
        dimension_records(context),
        isomorphism_records(context),
        component_records(context),
    )
    assert rep.summary.total == sum(len(s) for s in suites)
    passes = sum(r.status == "pass" for s in suites for r in s)
    assert rep.summary.counts["pass"] == passes
    assert f"pass {passes}," in out


def test_verify_all_touches_every_row_once(verify_report, catalog):
    rep = parse_report(verify_report[2])
    ids = [r.id for r in rep.records]
    assert len(ids) == len(set(ids))
    assert {f"degeneration:{w.id}" for w in catalog.witnesses} <= set(ids)
    assert {f"nondegeneration:{r.id}" for r in catalog.nondegen} <= set(ids)
    assert {f"identity:{e.variety}:{e.id}" for e in catalog.entries} <= set(ids)
    assert sum(i.startswith("degeneration:") for i in ids) == len(catalog.witnesses)
    assert sum(i.startswith("nondegeneration:") for i in ids) == len(catalog.nondegen)


def test_header_and_summary(verify_report, catalog):
    rep = parse_report(verify_report[2])
    assert rep.catalog_hash == catalog_hash(catalog)
    assert rep.seed == 0 and rep.command == "verify all --samples 3"
    assert sum(rep.summary.counts.values()) == rep.summary.total


def test_reports_byte_identical(verify_report, tmp_path):
    path = tmp_path / "again.jsonl"
    env = dict(os.environ, DEGENLAB_THREADS="3")
    proc = subprocess.run(
        [sys.executable, "-m", "degenlab", "verify", "all", "--report", str(path)],
        env=env,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert path.read_text(encoding="utf-8") == verify_report[2]


def test_report_round_trip():
    recs = [record("b", "k", "fail", ["oops"], x=1), record("a", "k", "pass")]
    rep = Report.build("cmd", 4, "h", recs)
    assert [r.id for r in rep.records] == ["a", "b"]
    again = parse_report(rep.text())
    assert again == rep and again.text() == rep.text()


def test_tampered_summary_rejected():
    text = Report.build("cmd", 0, "h", [record("a", "k", "pass")]).text()
    with pytest.raises(ReportFormatError):
        parse_report(text.replace('"total": 1', '"total": 2'))
    with pytest.raises(ReportFormatError):
        parse_report(text.splitlines()[1])


def test_unknown_status_rejected():
    with pytest.raises(ValueError):
        Record("a", "k", "maybe")


# graphs and catalog override ------------------------------------------------------------


def test_graph_to_stdout_and_file(tmp_path):
    code, out, _ = cli("graph", "--variety", "leibniz-poisson", "--dot", "-")
    assert code == 0 and out.startswith('digraph "leibniz-poisson" {')
    path = tmp_path / "g.dot"
    assert cli("graph", "--variety", "leibniz-poisson", "--dot", str(path))[0] == 0
    assert path.read_text(encoding="utf-8") == out


def test_figure_graph():
    code, out, _ = cli("graph", "--variety", "transposed-leibniz-poisson", "--dot", "-", "--figure")
    assert code == 0 and "style=dashed" not in out
    assert cli("graph", "--variety", "comm-assoc", "--dot", "-", "--figure")[0] == 2
    assert cli("graph", "--dot", "-")[0] == 2


def test_exported_catalog_override(tmp_path):
    path = tmp_path / "cat.json"
    assert cli("catalog", "export", str(path))[0] == 0
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    assert cli("check", "identities", "--variety", "leibniz-poisson", "--report", str(a))[0] == 0
    assert cli("check", "identities", "--variety", "leibniz-poisson", "--catalog", str(path), "--report", str(b))[0] == 0
    assert a.read_text(encoding="utf-8") == b.read_text(encoding="utf-8")


def test_seed_recorded(tmp_path):
    path = tmp_path / "s.jsonl"
    cli("check", "isomorphisms", "--seed", "5", "--report", str(path))
    assert parse_report(path.read_text(encoding="utf-8")).seed == 5

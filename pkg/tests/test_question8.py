#!/usr/bin/env python3
"""
Test script for the tree-sign inequality scan and its reports.
"""

import json

from src.corpus.two_bridge import two_bridge_corpus
from src.quasipos.question8 import (
    MISSING_BRAID_DATA,
    Question8Scanner,
    ScanEntry,
    ScanRecord,
    question8_scan,
    scan_entry,
)
from src.quasipos.verdicts import BraidData, QuasipositivityCertifier
from src.utils.json_to_md import scan_report_to_markdown, write_markdown
from src.utils.report_generator import ReportGenerator


def small_corpus(fig8, kink, pos_trefoil, neg_trefoil):
    return [
        (fig8, BraidData(3, 0, "DHL-internal")),
        (kink, BraidData(2, 1)),
        (pos_trefoil, None),
        # r+ = 1 exceeds d+ / 2, r- = 0: the inequality still holds
        (pos_trefoil, BraidData(1, 2), "plus_side_only"),
        # r- = 1 against d- = 1
        (neg_trefoil, BraidData(1, -2), "forced_violation"),
        (pos_trefoil, BraidData(2, 0), "bad_parity"),
    ]


def test_scan_entry_statuses(fig8, kink, pos_trefoil, neg_trefoil):
    report = question8_scan(small_corpus(fig8, kink, pos_trefoil, neg_trefoil))
    ok, reduced, missing, plus_side, violation, parity = report.records

    assert ok.status == "ok" and ok.holds and ok.plus_holds
    assert (ok.s, ok.b, ok.w_d, ok.w_beta, ok.r_plus, ok.r_minus) == (3, 3, 0, 0, 0, 0)
    assert (ok.d, ok.d_plus, ok.d_minus) == (0, 1, 1)

    assert reduced.status == "error"
    assert reduced.error == "HypothesisViolated(reduced)"

    assert missing.status == "skipped"
    assert missing.error == MISSING_BRAID_DATA

    assert plus_side.holds is True
    assert plus_side.plus_holds is False
    assert not plus_side.is_violation
    assert (plus_side.r_plus, plus_side.r_minus, plus_side.d_plus) == (1, 0, 1)

    assert violation.name == "forced_violation"
    assert violation.is_violation
    assert (violation.r_plus, violation.r_minus, violation.d_minus) == (0, 1, 1)

    assert parity.error == "ParityError"


def test_plus_side_excess_is_not_a_violation(fig8):
    record = scan_entry(ScanEntry(0, "fig8", fig8, BraidData(1, -2, "table")))
    assert (record.r_plus, record.r_minus) == (2, 0)
    assert (record.d_plus, record.d_minus) == (1, 1)
    assert record.holds is True
    assert record.plus_holds is False
    assert question8_scan([(fig8, BraidData(1, -2, "table"))]).summary["violations"] == 0


def test_summary_and_ordering(fig8, kink, pos_trefoil, neg_trefoil):
    report = question8_scan(small_corpus(fig8, kink, pos_trefoil, neg_trefoil))
    assert report.summary == {
        "total": 6,
        "evaluated": 3,
        "holds": 2,
        "violations": 1,
        "errors": 2,
        "skipped": 1,
        "tree_dependent": 0,
    }
    data = report.to_dict()
    assert list(data)[0] == "violations"
    assert [v["name"] for v in data["violations"]] == ["forced_violation"]
    assert [r["index"] for r in data["records"]] == [0, 1, 2, 3, 4, 5]


def test_empty_scan():
    report = question8_scan([])
    assert report.records == []
    assert report.summary["total"] == 0
    assert report.to_frame().empty


def test_tree_check_fills_flag(fig8):
    record = scan_entry(ScanEntry(0, "fig8", fig8, BraidData(3, 0, "DHL-internal")), tree_trials=10, seed=1)
    assert record.tree_independent is True


def test_internal_data_always_holds():
    certifier = QuasipositivityCertifier()
    corpus = [(d, certifier.braid_data_for(d)) for _, d in two_bridge_corpus(8)]
    report = question8_scan(corpus)
    with_data = [r for r in report.records if r.status == "ok"]
    assert with_data
    assert all(r.holds and r.r_plus == 0 and r.r_minus == 0 for r in with_data)
    assert report.summary["skipped"] == sum(1 for _, bd in corpus if bd is None)


def test_workers_give_same_records():
    certifier = QuasipositivityCertifier()
    corpus = [(d, certifier.braid_data_for(d)) for _, d in two_bridge_corpus(6)]
    serial = question8_scan(corpus, workers=1)
    parallel = Question8Scanner({"workers": 2}).run(corpus)
    assert parallel.records == serial.records


def test_frame_columns(fig8, kink, pos_trefoil, neg_trefoil):
    frame = question8_scan(small_corpus(fig8, kink, pos_trefoil, neg_trefoil)).to_frame()
    assert list(frame.columns) == list(ScanRecord.__dataclass_fields__)
    assert len(frame) == 6


# --------------------------------------------------
# Reports
# --------------------------------------------------

def test_report_files(tmp_path, fig8, kink, pos_trefoil, neg_trefoil):
    report = question8_scan(small_corpus(fig8, kink, pos_trefoil, neg_trefoil))
    generator = ReportGenerator(
        {"reports_dir": "reports", "save_records_csv": True, "quiet": True},
        project_root=str(tmp_path),
    )
    config = {"name": "unit", "scan": {"workers": 1}}
    saved = generator.save_scan_report(config, report, {"table": None})
    assert saved is not None
    assert saved.startswith(str(tmp_path / "reports" / "question8"))

    with open(saved, encoding="utf-8") as f:
        data = json.load(f)
    assert data["report_metadata"]["report_type"] == "question8_scan"
    assert data["summary"]["violations"] == 1
    assert list((tmp_path / "reports" / "question8").glob("*.csv"))

    md_path = write_markdown(saved)
    text = md_path.read_text(encoding="utf-8")
    assert "## Violations" in text
    assert "forced_violation" in text
    assert "HypothesisViolated(reduced)" in text


def test_report_disabled(tmp_path):
    generator = ReportGenerator({"save_execution_report": False}, project_root=str(tmp_path))
    assert generator.save_scan_report({}, question8_scan([]), {}) is None


def test_markdown_without_violations():
    text = scan_report_to_markdown(question8_scan([]).to_dict())
    assert "None found." in text

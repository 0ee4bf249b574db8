"""
Corpus scan of the tree-sign inequality

    2 r- <= d-(D)

over connected reduced alternating diagrams with known braid data. The
mirror-side count d+(D) >= 2 r+ is recorded separately as ``plus_holds``
and never counts as a violation.

Per-entry failures are recorded and the scan moves on; violations are
listed first in the report.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from src.diagram.link_diagram import LinkDiagram, writhe
from src.errors import HypothesisViolated, KnotToolError
from src.quasipos.verdicts import BraidData, require_hypotheses, r_pm
from src.seifert.seifert_graph import seifert_circles, seifert_graph, tree_independence, tree_stats

logger = logging.getLogger(__name__)

MISSING_BRAID_DATA = "MissingBraidData"


@dataclass(frozen=True)
class ScanEntry:
    index: int
    name: str
    diagram: LinkDiagram
    braid_data: Optional[BraidData]


@dataclass
class ScanRecord:
    index: int
    name: str
    status: str = "ok"
    s: Optional[int] = None
    b: Optional[int] = None
    w_d: Optional[int] = None
    w_beta: Optional[int] = None
    source: Optional[str] = None
    r_plus: Optional[int] = None
    r_minus: Optional[int] = None
    d: Optional[int] = None
    d_plus: Optional[int] = None
    d_minus: Optional[int] = None
    holds: Optional[bool] = None
    plus_holds: Optional[bool] = None
    tree_independent: Optional[bool] = None
    error: Optional[str] = None
    message: Optional[str] = None

    @property
    def is_violation(self) -> bool:
        return self.status == "ok" and self.holds is False

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class ScanReport:
    records: List[ScanRecord] = field(default_factory=list)

    @property
    def violations(self) -> List[ScanRecord]:
        return [r for r in self.records if r.is_violation]

    @property
    def summary(self) -> dict:
        evaluated = [r for r in self.records if r.status == "ok"]
        skipped = [r for r in self.records if r.status == "skipped"]
        return {
            "total": len(self.records),
            "evaluated": len(evaluated),
            "holds": sum(1 for r in evaluated if r.holds),
            "violations": len(self.violations),
            "errors": sum(1 for r in self.records if r.status == "error"),
            "skipped": len(skipped),
            "tree_dependent": sum(1 for r in evaluated if r.tree_independent is False),
        }

    def to_dict(self) -> dict:
        return {
            "violations": [r.to_dict() for r in self.violations],
            "summary": self.summary,
            "records": [r.to_dict() for r in self.records],
        }

    def to_frame(self) -> pd.DataFrame:
        columns = list(ScanRecord.__dataclass_fields__)
        return pd.DataFrame([r.to_dict() for r in self.records], columns=columns)


def scan_entry(entry: ScanEntry, tree_trials: int = 0, seed: int = 0) -> ScanRecord:
    record = ScanRecord(entry.index, entry.name)
    if entry.braid_data is None:
        record.status = "skipped"
        record.error = MISSING_BRAID_DATA
        record.message = "no braid index / braid writhe available"
        return record
    try:
        require_hypotheses(entry.diagram)
        circles = seifert_circles(entry.diagram)
        graph = seifert_graph(entry.diagram, circles)
        stats = tree_stats(graph)
        w = writhe(entry.diagram)
        r = r_pm(circles.s, w, entry.braid_data)
        if tree_trials > 0:
            record.tree_independent, _ = tree_independence(graph, tree_trials, seed)
    except KnotToolError as exc:
        record.status = "error"
        record.error = type(exc).__name__
        if isinstance(exc, HypothesisViolated):
            record.error = f"HypothesisViolated({exc.hypothesis})"
        record.message = str(exc)
        return record

    record.s, record.w_d = circles.s, w
    record.b, record.w_beta, record.source = entry.braid_data.b, entry.braid_data.w_beta, entry.braid_data.source
    record.r_plus, record.r_minus = r.r_plus, r.r_minus
    record.d, record.d_plus, record.d_minus = stats.d, stats.d_plus, stats.d_minus
    record.holds = 2 * r.r_minus <= stats.d_minus
    record.plus_holds = 2 * r.r_plus <= stats.d_plus
    return record


def _scan_chunk(args: Tuple[Sequence[ScanEntry], int, int]) -> List[ScanRecord]:
    entries, tree_trials, seed = args
    return [scan_entry(e, tree_trials, seed) for e in entries]


def _entries(corpus: Iterable) -> List[ScanEntry]:
    entries = []
    for i, item in enumerate(corpus):
        if isinstance(item, ScanEntry):
            entries.append(item)
            continue
        diagram, bd, *rest = item
        name = rest[0] if rest else (diagram.name or f"entry_{i}")
        entries.append(ScanEntry(i, name, diagram, bd))
    return entries


def question8_scan(corpus: Iterable, workers: int = 1, tree_trials: int = 0, seed: int = 0) -> ScanReport:
    """
    Scan ``corpus``: ScanEntry objects or (diagram, braid_data[, name])
    tuples. With workers > 1 the entries are split into chunks evaluated in
    separate processes; records come back in corpus order either way.
    """
    entries = _entries(corpus)
    if workers > 1 and len(entries) > 1:
        size = -(-len(entries) // workers)
        chunks = [(entries[i:i + size], tree_trials, seed) for i in range(0, len(entries), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [r for chunk in pool.map(_scan_chunk, chunks) for r in chunk]
    else:
        records = _scan_chunk((entries, tree_trials, seed))

    report = ScanReport(sorted(records, key=lambda r: r.index))
    summary = report.summary
    logger.info(
        f"Scanned {summary['total']} entries: {summary['evaluated']} evaluated, "
        f"{summary['violations']} violations, {summary['errors']} errors, {summary['skipped']} skipped"
    )
    for v in report.violations:
        logger.warning(f"Inequality fails on {v.name}: d+={v.d_plus}, d-={v.d_minus}, r+={v.r_plus}, r-={v.r_minus}")
    return report


class Question8Scanner:
    """Config-driven wrapper around ``question8_scan`` (``scan`` config section)."""

    def __init__(self, config: Optional[dict] = None):
        self.config = config or {}
        self.workers = int(self.config.get("workers", 1))
        self.tree_trials = int(self.config.get("tree_check", 0))
        self.seed = int(self.config.get("seed", 0))

    def run(self, corpus: Iterable) -> ScanReport:
        return question8_scan(corpus, self.workers, self.tree_trials, self.seed)

"""
Command implementations behind ``python -m src.main``.

Each ``cmd_*`` returns a JSON-serialisable dict; rendering, logging setup
and exit codes live in ``src.main``. Input files may hold PD text (strict or
inferred dialect), diagram JSON, braid JSON or braid text with a
``strands: n`` header; braids are turned into their closure diagrams.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from src.braid.braid_word import braid_from_json, closure_to_diagram, parse_braid_text, serialize_braid_text
from src.braid.vogel import vogel_transform
from src.config.paths import PROJECT_ROOT
from src.corpus.table_ingest import TableIngestor
from src.corpus.two_bridge import ContinuedFraction, two_bridge, two_bridge_corpus
from src.diagram.link_diagram import (
    LinkDiagram,
    component_count,
    connected_components,
    is_alternating,
    is_positive_diagram,
    link_component_count,
    writhe,
)
from src.diagram.pd_codec import from_json_dict, parse_pd, serialize_pd
from src.errors import FileUnreadable, InputError, MalformedSyntax
from src.invariants.signature import link_signature, verify_traczyk
from src.quasipos.question8 import Question8Scanner, ScanEntry
from src.quasipos.verdicts import BraidData, QuasipositivityCertifier
from src.seifert.seifert_graph import (
    is_dhl,
    is_reduced,
    is_special,
    seifert_circles,
    seifert_graph,
    tree_independence,
    tree_stats,
)
from src.utils.json_to_md import write_markdown
from src.utils.report_generator import create_report_generator

logger = logging.getLogger(__name__)


def read_input(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc


def load_diagram(path, dialect: str = "auto") -> LinkDiagram:
    text = read_input(path)
    name = Path(path).stem
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedSyntax(f"invalid JSON in {path}: {exc}") from exc
        if "crossings" in data:
            return from_json_dict(data).with_name(data.get("name") or name)
        if "strands" in data:
            return closure_to_diagram(braid_from_json(data), name)
        raise MalformedSyntax(f"{path}: JSON holds neither a diagram nor a braid")
    if stripped.lower().startswith("strands"):
        return closure_to_diagram(parse_braid_text(stripped), name)
    return parse_pd(stripped, dialect=dialect, name=name)


def classify_diagram(d: LinkDiagram, tree_trials: int = 0, seed: int = 0) -> dict:
    """Seifert data and diagram flags; connectivity-dependent flags are taken per split part."""
    parts = [p for p in connected_components(d) if p.crossings]
    alternating = is_alternating(d)
    s = seifert_circles(d).s
    d_value = d_plus = d_minus = 0
    reduced = special = dhl = True
    tree_independent = True
    for part in parts:
        graph = seifert_graph(part)
        stats = tree_stats(graph)
        d_value, d_plus, d_minus = d_value + stats.d, d_plus + stats.d_plus, d_minus + stats.d_minus
        reduced = reduced and is_reduced(graph)
        special = special and is_special(part)
        if alternating:
            dhl = dhl and is_dhl(part, graph)
        if tree_trials:
            tree_independent = tree_independent and tree_independence(graph, tree_trials, seed)[0]

    report = {
        "name": d.name,
        "crossings": len(d.crossings),
        "components": link_component_count(d),
        "split_parts": component_count(d),
        "s": s,
        "w": writhe(d),
        # tree-sign counts are only meaningful on alternating diagrams
        "d": d_value if alternating else None,
        "d_plus": d_plus if alternating else None,
        "d_minus": d_minus if alternating else None,
        "alternating": alternating,
        "reduced": reduced,
        "positive": is_positive_diagram(d),
        "special": special,
        "dhl": dhl if alternating else None,
    }
    if tree_trials:
        report["tree_independent"] = tree_independent
    return report


def cmd_classify(path, config: Optional[dict] = None, seed: Optional[int] = None) -> dict:
    config = config or {}
    d = load_diagram(path, config.get("diagram", {}).get("pd_dialect", "auto"))
    seifert_cfg = config.get("seifert", {})
    trials = int(seifert_cfg.get("randomized_trees", 0))
    if seed is None:
        seed = int(seifert_cfg.get("seed", 0))
    return classify_diagram(d, trials, seed)


def cmd_certify(path, b: Optional[int] = None, wbeta: Optional[int] = None, config: Optional[dict] = None) -> dict:
    config = config or {}
    if (b is None) != (wbeta is None):
        raise InputError("--b and --wbeta must be given together")
    d = load_diagram(path, config.get("diagram", {}).get("pd_dialect", "auto"))
    bd = BraidData(b, wbeta, "user") if b is not None else None
    verdict = QuasipositivityCertifier(config.get("certify", {})).certify(d, bd)
    return {"name": d.name, "verdict": verdict.label, **verdict.to_dict()}


def cmd_invariants(path, config: Optional[dict] = None) -> dict:
    config = config or {}
    d = load_diagram(path, config.get("diagram", {}).get("pd_dialect", "auto"))
    report = link_signature(d).to_dict()
    try:
        checked = verify_traczyk(d)
        report.update({"traczyk_sigma": checked.traczyk_sigma, "agreement": checked.agreement})
    except InputError as exc:
        logger.info(f"Closed-form signature not applicable: {exc}")
    return {"name": d.name, **report}


def cmd_braid(path, config: Optional[dict] = None) -> dict:
    config = config or {}
    d = load_diagram(path, config.get("diagram", {}).get("pd_dialect", "auto"))
    word = vogel_transform(d, int(config.get("braid", {}).get("max_move_factor", 4)))
    return {"name": d.name, **word.to_dict(), "text": serialize_braid_text(word)}


def cmd_gen_two_bridge(terms: Sequence[int]) -> dict:
    cf = ContinuedFraction(tuple(terms))
    d = two_bridge(cf)
    return {
        "terms": list(cf.terms),
        "fraction": str(cf.value()),
        "crossings": len(d.crossings),
        "pd": serialize_pd(d),
    }


def build_scan_corpus(config: dict, table: Optional[str] = None, two_bridge_max: Optional[int] = None):
    """
    Scan entries from the table and the two-bridge generator. Generated
    diagrams take braid data from a table row with the same name or the
    same continued fraction (compared in odd-length form), and otherwise
    from the diagram itself when it realizes its braid index.
    """
    scan_cfg = config.get("scan", {})
    certifier = QuasipositivityCertifier(config.get("certify", {}))
    entries: List[ScanEntry] = []
    table_data: Dict[str, BraidData] = {}
    rational_data: Dict[Tuple[int, ...], BraidData] = {}
    info = {"table": None, "table_rows": 0, "table_skipped": 0, "two_bridge_max_sum": None, "two_bridge_entries": 0}

    table = table if table is not None else scan_cfg.get("table")
    if table:
        table_path = Path(table)
        if not table_path.is_absolute() and not table_path.exists():
            table_path = PROJECT_ROOT / table_path
        ingestor = TableIngestor(config.get("diagram", {}))
        rows = ingestor.ingest(table_path)
        info.update({"table": str(table), "table_rows": len(rows), "table_skipped": len(ingestor.skipped)})
        for row in rows:
            bd = BraidData(row.braid_index, row.w_beta, "table") if row.w_beta is not None else None
            if bd is not None:
                table_data[row.name] = bd
                if row.rational:
                    rational_data[ContinuedFraction(row.rational).odd_length()] = bd
            entries.append(ScanEntry(len(entries), row.name, row.diagram, bd or certifier.braid_data_for(row.diagram)))

    tb_cfg = scan_cfg.get("two_bridge", {})
    if two_bridge_max is None and tb_cfg.get("enabled", False):
        two_bridge_max = int(tb_cfg.get("max_sum", 8))
    if two_bridge_max:
        corpus = two_bridge_corpus(two_bridge_max)
        info.update({"two_bridge_max_sum": two_bridge_max, "two_bridge_entries": len(corpus)})
        for cf, d in corpus:
            bd = table_data.get(d.name) or rational_data.get(cf.odd_length()) or certifier.braid_data_for(d)
            entries.append(ScanEntry(len(entries), d.name, d, bd))
    return entries, info


def cmd_scan(
    config: dict,
    table: Optional[str] = None,
    two_bridge_max: Optional[int] = None,
    workers: Optional[int] = None,
    output: Optional[str] = None,
    seed: Optional[int] = None,
    quiet: bool = False,
) -> dict:
    scan_cfg = dict(config.get("scan", {}))
    if workers is not None:
        scan_cfg["workers"] = workers
    if seed is not None:
        scan_cfg["seed"] = seed

    entries, info = build_scan_corpus(config, table, two_bridge_max)
    report = Question8Scanner(scan_cfg).run(entries)

    generator = create_report_generator(config)
    generator.quiet = quiet
    saved = generator.save_scan_report(config, report, info, output)
    if saved and config.get("output", {}).get("save_markdown", False):
        write_markdown(saved)
    return {"summary": report.summary, "report": saved, "corpus": info}

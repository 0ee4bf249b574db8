"""
Render a saved scan report (JSON) as Markdown.

    python -m src.utils.json_to_md outputs/reports/question8/scan_X.json
"""
import argparse
import json
from pathlib import Path
from typing import Optional

RECORD_COLUMNS = ["name", "s", "b", "w_d", "w_beta", "r_plus", "r_minus", "d_plus", "d_minus"]


def _cell(value) -> str:
    return "" if value is None else str(value)


def scan_report_to_markdown(data: dict) -> str:
    md = []

    # --------------------------------------------------
    # Header
    # --------------------------------------------------
    meta = data.get("report_metadata", {})
    cfg = data.get("configuration", {})

    md.append(f"# Tree-Sign Inequality Scan: {cfg.get('name', 'Unnamed')}")
    md.append("")
    if meta:
        md.append(f"**Generated at:** {meta.get('generated_at', 'n/a')}")
        md.append("")

    # --------------------------------------------------
    # Corpus
    # --------------------------------------------------
    corpus = data.get("corpus", {})
    if corpus:
        md.append("## Corpus")
        md.append("")
        for key, value in corpus.items():
            md.append(f"- **{key.replace('_', ' ').title()}:** {value}")
        md.append("")

    # --------------------------------------------------
    # Summary
    # --------------------------------------------------
    summary = data["summary"]
    md.append("## Summary")
    md.append("")
    md.append("| Measure | Count |")
    md.append("|---------|------:|")
    for key in ("total", "evaluated", "holds", "violations", "errors", "skipped", "tree_dependent"):
        md.append(f"| {key.replace('_', ' ').title()} | {summary.get(key, 0)} |")
    md.append("")

    # --------------------------------------------------
    # Violations
    # --------------------------------------------------
    md.append("## Violations")
    md.append("")
    violations = data.get("violations", [])
    if not violations:
        md.append("None found.")
    else:
        md.append("| " + " | ".join(RECORD_COLUMNS) + " |")
        md.append("|" + "---|" * len(RECORD_COLUMNS))
        for v in violations:
            md.append("| " + " | ".join(_cell(v.get(c)) for c in RECORD_COLUMNS) + " |")
    md.append("")

    # --------------------------------------------------
    # Errors and skipped entries
    # --------------------------------------------------
    problems = [r for r in data.get("records", []) if r.get("status") != "ok"]
    if problems:
        md.append("## Errors and Skipped Entries")
        md.append("")
        md.append("| Entry | Status | Error | Message |")
        md.append("|-------|--------|-------|---------|")
        for r in problems:
            md.append(f"| {r['name']} | {r['status']} | {_cell(r.get('error'))} | {_cell(r.get('message'))} |")
        md.append("")

    return "\n".join(md)


def write_markdown(json_path, md_path: Optional[str] = None) -> Path:
    json_path = Path(json_path)
    md_path = Path(md_path) if md_path else json_path.with_suffix(".md")
    with open(json_path, "r", encoding="utf-8") as f:
        data = json.load(f)

    md_path.parent.mkdir(parents=True, exist_ok=True)
    with open(md_path, "w", encoding="utf-8") as f:
        f.write(scan_report_to_markdown(data))
    return md_path


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Render a scan report as Markdown")
    parser.add_argument("report", help="JSON scan report")
    parser.add_argument("--output", default=None, help="Markdown file (default: next to the report)")
    args = parser.parse_args()
    print(f"Markdown report generated: {write_markdown(args.report, args.output)}")

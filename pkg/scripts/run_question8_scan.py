"""
Tree-Sign Scan Runner - table + two-bridge corpus, certification summary and reports
"""
import logging
import sys
from pathlib import Path

# Get project root
project_root = Path(__file__).resolve().parent.parent

# Add to Python path
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))


def run_question8_scan(config_path: str, verbose: bool = False):
    from src.cli.commands import build_scan_corpus
    from src.config.settings import load_config
    from src.quasipos.question8 import Question8Scanner
    from src.quasipos.verdicts import QuasipositivityCertifier
    from src.utils.json_to_md import write_markdown
    from src.utils.report_generator import create_report_generator

    print("\n" + "="*70)
    print("🚀 TREE-SIGN INEQUALITY SCAN (Table + Two-Bridge Corpus)")
    print("="*70 + "\n")

    # 1. Load Configuration
    config = load_config(config_path)
    verbose = verbose or config['output'].get('verbose', False)
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING)
    print(f"📋 Configuration: {config.get('name', 'Unnamed')}")

    # 2. Build Corpus
    entries, info = build_scan_corpus(config)
    with_data = sum(1 for e in entries if e.braid_data is not None)
    print(f"📊 Corpus: {len(entries):,} diagrams ({with_data:,} with braid data)")
    if info['table']:
        print(f"   📄 Table: {info['table']} ({info['table_rows']} rows, {info['table_skipped']} skipped)")
    if info['two_bridge_max_sum']:
        print(f"   🔗 Two-bridge: {info['two_bridge_entries']} diagrams, up to {info['two_bridge_max_sum']} crossings")

    # 3. Certify every entry
    certifier = QuasipositivityCertifier(config.get('certify', {}))
    outcomes = {}
    for entry in entries:
        label = certifier.certify(entry.diagram).label
        outcomes[label] = outcomes.get(label, 0) + 1

    print("\n" + "="*70)
    print("⚡ STEP 1: VERDICTS (pair-criterion route)")
    print("-"*70)
    for label, count in sorted(outcomes.items()):
        print(f"  {label:<40} {count:>5}")
    print("="*70 + "\n")

    # 4. Scan
    report = Question8Scanner(config.get('scan', {})).run(entries)
    generator = create_report_generator(config)

    print("="*70)
    print("🔍 STEP 2: TREE-SIGN INEQUALITY 2 r- <= d-")
    print("-"*70)
    generator.print_minimal_summary(report.summary)
    for v in report.violations:
        print(f"  ❌ {v.name}: d+={v.d_plus} d-={v.d_minus} r+={v.r_plus} r-={v.r_minus}")
    print("="*70 + "\n")

    # 5. Reports
    report_path = generator.save_scan_report(config, report, info)
    if report_path and config['output'].get('save_markdown', False):
        md_path = write_markdown(report_path)
        print(f"   📝 Markdown: {md_path.name}")

    if report_path:
        print(f"\n📂 JSON Report: {Path(report_path).relative_to(project_root)}")
    status = "✅" if not report.violations else "❌"
    print(f"\n{status} Scan completed: {len(report.violations)} violations\n")
    return report


if __name__ == "__main__":
    if len(sys.argv) > 1:
        run_question8_scan(sys.argv[1], verbose='--verbose' in sys.argv)
    else:
        print("❌ Usage: python scripts/run_question8_scan.py <config_path> [--verbose]")

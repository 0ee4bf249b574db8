"""
Knot Table Validator
Checks a table file before it is used for scans: schema, PD codes,
signature column against the computed signature, braid data against the
diagram's Seifert data.
Can be run standalone or called from a scan runner.
"""
import sys
from pathlib import Path

# Get project root
project_root = Path(__file__).resolve().parent.parent.parent

# Add to Python path
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.corpus.table_ingest import TableIngestor
from src.diagram.link_diagram import writhe
from src.errors import InputError
from src.invariants.signature import link_signature
from src.quasipos.verdicts import BraidData, r_pm
from src.seifert.seifert_graph import seifert_circles


class KnotTableValidator:
    """
    Validates a knot table.
    Focuses only on data quality and consistency checks.
    """

    def __init__(self, table_path: str, verbose: bool = False):
        """
        Args:
            table_path: CSV or JSON table
            verbose: Detailed output mode
        """
        self.table_path = Path(table_path)
        if not self.table_path.is_absolute() and not self.table_path.exists():
            self.table_path = project_root / self.table_path
        self.verbose = verbose
        self.rows = []
        self.validation_results = {}

    def load_table(self):
        print(f"📋 Loading table {self.table_path.name}...")
        ingestor = TableIngestor()
        self.rows = ingestor.ingest(self.table_path)
        self.validation_results['parsed_rows'] = len(self.rows)
        self.validation_results['skipped_rows'] = ingestor.skipped
        print(f"   ✅ {len(self.rows)} rows parsed, {len(ingestor.skipped)} skipped")
        for skipped in ingestor.skipped:
            print(f"   ⚠️  {skipped['name']}: {skipped['error']}: {skipped['message']}")

    def check_signatures(self):
        print("🔍 Checking signature column...")
        mismatches = []
        for row in self.rows:
            if row.signature is None:
                continue
            computed = link_signature(row.diagram).sigma
            if computed != row.signature:
                mismatches.append({'name': row.name, 'table': row.signature, 'computed': computed})
                print(f"   ❌ {row.name}: table {row.signature}, computed {computed}")
            elif self.verbose:
                print(f"   ✅ {row.name}: {computed}")
        self.validation_results['signature_mismatches'] = mismatches
        if not mismatches:
            print("   ✅ All signatures match")

    def check_braid_data(self):
        print("🔍 Checking braid data...")
        problems = []
        for row in self.rows:
            if row.w_beta is None:
                continue
            try:
                r = r_pm(seifert_circles(row.diagram).s, writhe(row.diagram), BraidData(row.braid_index, row.w_beta, 'table'))
                if self.verbose:
                    print(f"   ✅ {row.name}: r+={r.r_plus}, r-={r.r_minus}")
            except InputError as e:
                problems.append({'name': row.name, 'error': type(e).__name__, 'message': str(e)})
                print(f"   ❌ {row.name}: {type(e).__name__}: {e}")
        self.validation_results['braid_data_problems'] = problems
        if not problems:
            print("   ✅ Braid data consistent")

    def run_validation(self) -> bool:
        print("\n" + "="*70)
        print("🧪 KNOT TABLE VALIDATION")
        print("="*70)
        self.load_table()
        self.check_signatures()
        self.check_braid_data()
        ok = not (
            self.validation_results['skipped_rows']
            or self.validation_results['signature_mismatches']
            or self.validation_results['braid_data_problems']
        )
        print("="*70)
        print("✅ Table is valid" if ok else "❌ Table has problems")
        print("="*70 + "\n")
        return ok


if __name__ == "__main__":
    if len(sys.argv) > 1:
        valid = KnotTableValidator(sys.argv[1], verbose='--verbose' in sys.argv).run_validation()
        sys.exit(0 if valid else 1)
    else:
        print("❌ Usage: python scripts/validation_scripts/validate_knot_table.py <table_path> [--verbose]")

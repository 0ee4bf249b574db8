# src/config/paths.py
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

CONFIGS_DIR = PROJECT_ROOT / "configs"
DEFAULT_CONFIG_PATH = CONFIGS_DIR / "knot_analysis.yaml"

DATA_DIR = PROJECT_ROOT / "data"
TABLES_DIR = DATA_DIR / "tables"
SAMPLE_TABLE = TABLES_DIR / "sample_links.csv"

OUTPUTS_DIR = PROJECT_ROOT / "outputs"
REPORTS_DIR = OUTPUTS_DIR / "reports"

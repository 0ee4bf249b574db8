"""
Configuration loading.

A YAML file is deep-merged over DEFAULT_CONFIG, so consumers can read any
section with ``.get(key, default)`` whether or not the file sets it.
"""
import copy
import logging
from pathlib import Path
from typing import Optional

import yaml

from src.config.paths import DEFAULT_CONFIG_PATH, PROJECT_ROOT
from src.errors import FileUnreadable, MalformedSyntax

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    "diagram": {
        "pd_dialect": "auto",
    },
    "seifert": {
        "randomized_trees": 0,
        "seed": 0,
    },
    "braid": {
        "max_move_factor": 4,
    },
    "scan": {
        "workers": 1,
        "table": "data/tables/sample_links.csv",
        "two_bridge": {"enabled": True, "max_sum": 8},
        "tree_check": 0,
        "seed": 0,
    },
    "certify": {
        "verify_certificates": True,
    },
    "output": {
        "reports_dir": "outputs/reports",
        "save_execution_report": True,
        "save_markdown": True,
        "save_records_csv": False,
        "verbose": False,
    },
}


def deep_merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> dict:
    """Load ``path`` (relative paths resolve against the project root)."""
    if path is None:
        if not DEFAULT_CONFIG_PATH.exists():
            return copy.deepcopy(DEFAULT_CONFIG)
        path = DEFAULT_CONFIG_PATH
    path = Path(path)
    if not path.is_absolute() and not path.exists():
        path = PROJECT_ROOT / path
    try:
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
    except OSError as exc:
        raise FileUnreadable(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise MalformedSyntax(f"invalid YAML in {path}: {exc}") from exc
    if not isinstance(loaded, dict):
        raise MalformedSyntax(f"config {path} must be a mapping")
    logger.debug(f"Loaded config {path}")
    return deep_merge(DEFAULT_CONFIG, loaded)

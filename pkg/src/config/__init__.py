"""
Config Package: project paths and YAML configuration loading.
"""

from .paths import CONFIGS_DIR, DEFAULT_CONFIG_PATH, PROJECT_ROOT, REPORTS_DIR, SAMPLE_TABLE, TABLES_DIR
from .settings import DEFAULT_CONFIG, deep_merge, load_config

__all__ = [
    'CONFIGS_DIR', 'DEFAULT_CONFIG_PATH', 'PROJECT_ROOT', 'REPORTS_DIR',
    'SAMPLE_TABLE', 'TABLES_DIR', 'DEFAULT_CONFIG', 'deep_merge', 'load_config',
]

"""
Corpus Package: generated two-bridge diagrams and knot table ingestion.
"""

from .two_bridge import (
    ContinuedFraction,
    compositions,
    continued_fraction_value,
    plat_word,
    two_bridge,
    two_bridge_corpus,
)
from .table_ingest import COLUMNS, TableIngestor, TableRow, ingest_table

__all__ = [
    'ContinuedFraction', 'compositions', 'continued_fraction_value', 'plat_word', 'two_bridge',
    'two_bridge_corpus', 'COLUMNS', 'TableIngestor', 'TableRow', 'ingest_table',
]

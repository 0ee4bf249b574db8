"""
Knot table ingestion.

Reads CSV or JSON tables with columns
    name, pd, braid_index, braid_word, signature, rational
(only name and pd are required). ``rational`` holds the continued fraction
of a two-bridge row, e.g. "[3,2]", so generated diagrams of the same
link can borrow its braid data. Rows whose PD code does not parse are
skipped and recorded in ``TableIngestor.skipped``; the remaining rows keep
their braid data when it is consistent.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd

from src.braid.braid_word import BraidWord, exponent_sum, parse_braid_text, parse_letters
from src.corpus.two_bridge import ContinuedFraction
from src.diagram.link_diagram import LinkDiagram
from src.diagram.pd_codec import parse_pd
from src.errors import FileUnreadable, HeaderMismatch, InputError

logger = logging.getLogger(__name__)

COLUMNS = ["name", "pd", "braid_index", "braid_word", "signature", "rational"]
REQUIRED_COLUMNS = ["name", "pd"]


@dataclass(frozen=True)
class TableRow:
    name: str
    pd_code: str
    diagram: LinkDiagram = field(compare=False, repr=False)
    braid_index: Optional[int] = None
    braid_word: Optional[BraidWord] = None
    signature: Optional[int] = None
    rational: Optional[Tuple[int, ...]] = None

    @property
    def w_beta(self) -> Optional[int]:
        """Writhe of the table braid, only when it realizes the braid index."""
        if self.braid_word is None or self.braid_index is None:
            return None
        if self.braid_word.strands != self.braid_index:
            return None
        return exponent_sum(self.braid_word)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pd": self.pd_code,
            "braid_index": self.braid_index,
            "braid_word": list(self.braid_word.letters) if self.braid_word else None,
            "signature": self.signature,
            "rational": list(self.rational) if self.rational else None,
            "w_beta": self.w_beta,
        }


def _optional_int(value) -> Optional[int]:
    if value is None:
        return None
    text = str(value).strip()
    if not text or text.lower() in ("nan", "none", "null"):
        return None
    return int(float(text))


class TableIngestor:
    """Loads a knot table into ``TableRow`` objects."""

    def __init__(self, config: Optional[dict] = None):
        self.config = config or {}
        self.dialect = self.config.get("pd_dialect", "auto")
        self.skipped: List[Dict[str, str]] = []

    def read_frame(self, path) -> pd.DataFrame:
        path = Path(path)
        try:
            if path.suffix.lower() == ".json":
                frame = pd.read_json(path, orient="records", dtype=False)
            else:
                frame = pd.read_csv(path, dtype=str, keep_default_na=False)
        except (OSError, ValueError) as exc:
            raise FileUnreadable(f"cannot read table {path}: {exc}") from exc

        frame.columns = [str(c).strip().lower() for c in frame.columns]
        missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
        if missing:
            raise HeaderMismatch(f"table {path.name} lacks columns {missing}; expected {COLUMNS}")
        for column in COLUMNS:
            if column not in frame.columns:
                frame[column] = ""
        return frame[COLUMNS].fillna("")

    def _row(self, record: dict) -> TableRow:
        name = str(record["name"]).strip()
        pd_code = str(record["pd"]).strip()
        diagram = parse_pd(pd_code, dialect=self.dialect, name=name)

        braid_index = _optional_int(record["braid_index"])
        braid_word = None
        word = record["braid_word"]
        if isinstance(word, list):
            word = " ".join(str(k) for k in word)
        word = str(word).strip()
        if word:
            braid_word = parse_braid_text(word)
        rational = None
        terms = record["rational"]
        terms = " ".join(str(a) for a in terms) if isinstance(terms, list) else str(terms).strip()
        if terms:
            rational = ContinuedFraction(tuple(parse_letters(terms))).terms
        return TableRow(
            name=name,
            pd_code=pd_code,
            diagram=diagram,
            braid_index=braid_index,
            braid_word=braid_word,
            signature=_optional_int(record["signature"]),
            rational=rational,
        )

    def ingest(self, path) -> List[TableRow]:
        frame = self.read_frame(path)
        self.skipped = []
        rows: List[TableRow] = []
        for record in frame.to_dict(orient="records"):
            try:
                rows.append(self._row(record))
            except (InputError, ValueError) as exc:
                self.skipped.append({"name": str(record.get("name", "")), "error": type(exc).__name__, "message": str(exc)})
                logger.warning(f"Skipping table row {record.get('name')!r}: {type(exc).__name__}: {exc}")

        without_braid = sum(1 for r in rows if r.w_beta is None)
        logger.info(
            f"Ingested {len(rows)} rows from {Path(path).name} "
            f"({len(self.skipped)} skipped, {without_braid} without usable braid data)"
        )
        return rows


def ingest_table(path, config: Optional[dict] = None) -> List[TableRow]:
    return TableIngestor(config).ingest(path)

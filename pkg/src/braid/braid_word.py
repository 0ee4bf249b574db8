"""
Braid words, quasipositive and strongly quasipositive factorizations,
and braid closures.

Letter k stands for the standard generator sigma_|k| when k > 0 and its
inverse when k < 0. Words are never freely reduced implicitly.
"""
from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.diagram.builder import braid_closure
from src.diagram.link_diagram import LinkDiagram
from src.errors import BandIndexInvalid, IndexOutOfRange, MalformedSyntax

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators; letter k is sigma_|k|, negative for the inverse."""
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        if self.strands < 1:
            raise IndexOutOfRange(f"strand count must be positive, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise IndexOutOfRange(f"letter {k} outside ±1..{self.strands - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def to_dict(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}


@dataclass(frozen=True)
class QPFactorization:
    """Product of conjugates w sigma_j w^-1, stored as (w, j) pairs."""
    strands: int
    factors: Tuple[Tuple[Tuple[int, ...], int], ...] = ()


@dataclass(frozen=True)
class SQPFactorization:
    strands: int
    bands: Tuple[Tuple[int, int], ...] = ()


def exponent_sum(b: BraidWord) -> int:
    """Writhe of the closure: positive letters minus negative ones."""
    return sum(1 if k > 0 else -1 for k in b.letters)


def is_positive_word(b: BraidWord) -> bool:
    return all(k > 0 for k in b.letters)


def invert(letters: Sequence[int]) -> List[int]:
    return [-k for k in reversed(letters)]


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent letter pairs k, -k until none remain."""
    stack: List[int] = []
    for k in b.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(b.strands, tuple(stack))


def closure_to_diagram(b: BraidWord, name: Optional[str] = None) -> LinkDiagram:
    """Closed braid as a LinkDiagram; its writhe equals ``exponent_sum(b)``."""
    return braid_closure(b.strands, b.letters, name)


def expand_qp(f: QPFactorization) -> BraidWord:
    """
    Spell out a quasipositive factorization.

    Args:
        f: Conjugator and generator pairs

    Returns:
        BraidWord on ``f.strands`` strands, not freely reduced

    Raises:
        IndexOutOfRange: If a generator or conjugator letter exceeds the strand count
    """
    letters: List[int] = []
    for conjugator, j in f.factors:
        if not 1 <= j <= f.strands - 1:
            raise IndexOutOfRange(f"generator index {j} outside 1..{f.strands - 1}")
        for k in conjugator:
            if k == 0 or abs(k) >= f.strands:
                raise IndexOutOfRange(f"conjugator letter {k} outside ±1..{f.strands - 1}")
        letters.extend(conjugator)
        letters.append(j)
        letters.extend(invert(conjugator))
    return BraidWord(f.strands, tuple(letters))


def band_word(k: int, j: int) -> List[int]:
    """The band generator a_{k,j}: tau sigma_j tau^-1 with tau = sigma_k ... sigma_j."""
    tau = list(range(k, j - 1, -1))
    return tau + [j] + invert(tau)


def expand_sqp(f: SQPFactorization) -> BraidWord:
    letters: List[int] = []
    for k, j in f.bands:
        if not 1 <= j <= k <= f.strands - 1:
            raise BandIndexInvalid(f"band ({k},{j}) needs 1 <= j <= k <= {f.strands - 1}")
        letters.extend(band_word(k, j))
    return BraidWord(f.strands, tuple(letters))


def random_qp(strands: int, factors: int, max_conj: int, seed: Optional[int] = None) -> QPFactorization:
    """Seeded random product of conjugated positive generators."""
    if strands < 2:
        raise IndexOutOfRange("random quasipositive words need at least 2 strands")
    if factors < 0 or max_conj < 0:
        raise IndexOutOfRange("factor count and conjugator length must be non-negative")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(factors):
        j = int(rng.integers(1, strands))
        length = int(rng.integers(0, max_conj + 1))
        generators = rng.integers(1, strands, size=length)
        signs = rng.choice(np.array([-1, 1]), size=length)
        conjugator = tuple(int(g) * int(s) for g, s in zip(generators, signs))
        out.append((conjugator, j))
    return QPFactorization(strands, tuple(out))


# --- text / JSON -----------------------------------------------------------

_HEADER = re.compile(r"^\s*strands\s*:\s*(\d+)\s*$", re.IGNORECASE)


def parse_letters(text: str) -> List[int]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedSyntax(f"braid letters must be integers: {exc}") from exc


def parse_braid_text(text: str, strands: Optional[int] = None) -> BraidWord:
    """
    Read ``strands: n`` followed by whitespace separated letters. Without a
    header the strand count comes from ``strands`` or from the largest
    letter.
    """
    lines = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if lines:
        header = _HEADER.match(lines[0])
        if header:
            strands = int(header.group(1))
            lines = lines[1:]
    letters = parse_letters(" ".join(lines))
    if strands is None:
        strands = max((abs(k) for k in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def serialize_braid_text(b: BraidWord) -> str:
    return f"strands: {b.strands}\n" + " ".join(str(k) for k in b.letters) + "\n"


def braid_from_json(data: dict) -> BraidWord:
    """Read ``{"strands": n, "letters": [...]}``."""
    try:
        return BraidWord(int(data["strands"]), tuple(int(k) for k in data.get("letters", [])))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSyntax(f"invalid braid JSON: {exc}") from exc


def braid_to_json(b: BraidWord) -> str:
    return json.dumps(b.to_dict())

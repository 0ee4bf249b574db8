"""
PD text and JSON codecs.

Two text dialects are read:
  strict    X(a,b,c,d;o) with o the incoming over slot (1 or 3)
  inferred  X(a,b,c,d) in the successor-numbering convention; the
            under-strand of every crossing enters at slot a, which fixes the
            direction of each component it belongs to
Free loops are written O(k). Output is always the strict dialect.
"""
from __future__ import annotations

import json
import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple

from src.diagram.link_diagram import Crossing, LinkDiagram
from src.diagram.validation import ensure_valid
from src.errors import (
    AmbiguousOrientation,
    ArcUsedTwiceError,
    MalformedSyntax,
    OrientationInconsistent,
)

logger = logging.getLogger(__name__)

DIALECTS = ("auto", "strict", "inferred")

_TERM = re.compile(r"([XxOo])\s*[\(\[]([^\)\]]*)[\)\]]")
_SEPARATOR = re.compile(r"[\s,;]*")
_WRAPPER = re.compile(r"^\s*PD\s*\[(.*)\]\s*$", re.DOTALL)

RawCrossing = Tuple[Tuple[int, int, int, int], Optional[int]]


def _parse_int(token: str, where: str) -> int:
    token = token.strip()
    if not re.fullmatch(r"[+-]?\d+", token):
        raise MalformedSyntax(f"{where}: '{token}' is not an integer")
    return int(token)


def _tokenize(text: str) -> Tuple[List[RawCrossing], int]:
    wrapped = _WRAPPER.match(text)
    if wrapped:
        text = wrapped.group(1)
    crossings: List[RawCrossing] = []
    loops = 0
    pos = _SEPARATOR.match(text, 0).end()
    while pos < len(text):
        term = _TERM.match(text, pos)
        if term is None:
            raise MalformedSyntax(f"unexpected text at column {pos}: '{text[pos:pos + 12]}'")
        kind, body = term.group(1).upper(), term.group(2)
        where = f"term at column {pos}"
        if kind == "O":
            count = _parse_int(body, where)
            if count < 0:
                raise MalformedSyntax(f"{where}: negative loop count")
            loops += count
        else:
            marker: Optional[int] = None
            if ";" in body:
                body, marker_text = body.split(";", 1)
                marker = _parse_int(marker_text, where)
                if marker not in (1, 3):
                    raise MalformedSyntax(f"{where}: over marker must be 1 or 3")
            labels = [_parse_int(t, where) for t in body.split(",")]
            if len(labels) != 4:
                raise MalformedSyntax(f"{where}: expected 4 arc labels, got {len(labels)}")
            if any(a < 1 for a in labels):
                raise MalformedSyntax(f"{where}: arc labels must be positive")
            crossings.append((tuple(labels), marker))
        pos = _SEPARATOR.match(text, term.end()).end()
    return crossings, loops


def _check_arc_usage(raw: Sequence[RawCrossing]) -> Dict[int, List[Tuple[int, int]]]:
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for pos, (slots, _) in enumerate(raw):
        for slot, arc in enumerate(slots):
            occ.setdefault(arc, []).append((pos, slot))
    for arc, where in sorted(occ.items()):
        if len(where) != 2:
            raise ArcUsedTwiceError(f"arc {arc} occurs {len(where)} time(s), expected 2")
    return occ


def _strand_cycles(raw, occ) -> List[List[Tuple[int, int, int]]]:
    """
    Unoriented strand components as lists of passes (pos, entry slot, arc
    entering), following arcs straight through each crossing.
    """
    def other(pos, slot):
        arc = raw[pos][0][slot]
        a, b = occ[arc]
        return b if a == (pos, slot) else a

    seen = set()
    cycles = []
    for start_pos in range(len(raw)):
        for start_slot in range(4):
            if (start_pos, start_slot) in seen:
                continue
            passes = []
            pos, slot = start_pos, start_slot
            while (pos, slot) not in seen:
                exit_slot = (slot + 2) % 4
                seen.add((pos, slot))
                seen.add((pos, exit_slot))
                passes.append((pos, slot, raw[pos][0][slot]))
                pos, slot = other(pos, exit_slot)
            cycles.append(passes)
    return cycles


def _successor_direction(passes) -> int:
    """+1 if arcs entering in walk order follow label successors, -1 for predecessors."""
    arcs = [arc for _, _, arc in passes]
    if len(arcs) <= 2:
        raise AmbiguousOrientation(
            f"component through arcs {sorted(arcs)} has no under-pass and too few arcs to orient"
        )
    labels = sorted(arcs)
    succ = {a: labels[(i + 1) % len(labels)] for i, a in enumerate(labels)}
    forward = all(succ[arcs[i]] == arcs[(i + 1) % len(arcs)] for i in range(len(arcs)))
    backward = all(succ[arcs[(i + 1) % len(arcs)]] == arcs[i] for i in range(len(arcs)))
    if forward == backward:
        raise AmbiguousOrientation(
            f"arcs {labels} do not follow successor numbering in either direction"
        )
    return 1 if forward else -1


def _infer_over_slots(raw: Sequence[RawCrossing], occ) -> List[int]:
    over_in: List[Optional[int]] = [None] * len(raw)
    for passes in _strand_cycles(raw, occ):
        entries = {slot for _, slot, _ in passes}
        if 0 in entries and 2 in entries:
            raise OrientationInconsistent(
                "a component enters one crossing under-first and another under-last"
            )
        if 0 in entries:
            direction = 1
        elif 2 in entries:
            direction = -1
        else:
            direction = _successor_direction(passes)
        for pos, slot, _ in passes:
            entry = slot if direction == 1 else (slot + 2) % 4
            if entry in (1, 3):
                over_in[pos] = entry
    return over_in


def parse_pd(text: str, dialect: str = "auto", name: Optional[str] = None) -> LinkDiagram:
    """
    Parse PD text into a validated diagram.

    Args:
        text: Comma separated X(...) terms, optionally followed by O(k) free loops
        dialect: "strict" requires over markers, "inferred" forbids them,
            "auto" accepts either but not a mix
        name: Diagram name

    Returns:
        Validated LinkDiagram

    Raises:
        MalformedSyntax: On bad tokens or a dialect mismatch
        ArcUsedTwiceError: When an arc label does not occur exactly twice
    """
    if dialect not in DIALECTS:
        raise ValueError(f"unknown PD dialect '{dialect}'")
    raw, loops = _tokenize(text or "")
    marked = [m is not None for _, m in raw]
    if any(marked) and not all(marked):
        raise MalformedSyntax("strict and inferred crossings mixed in one input")
    strict = bool(raw) and all(marked)
    if dialect == "strict" and raw and not strict:
        raise MalformedSyntax("strict dialect requires an over marker on every crossing")
    if dialect == "inferred" and strict:
        raise MalformedSyntax("inferred dialect does not take over markers")

    occ = _check_arc_usage(raw)
    if strict:
        over_in = [m for _, m in raw]
    else:
        over_in = _infer_over_slots(raw, occ)

    crossings = tuple(
        Crossing(slots, over, pos) for pos, ((slots, _), over) in enumerate(zip(raw, over_in))
    )
    diagram = ensure_valid(LinkDiagram(crossings, loops, name))
    logger.debug(f"Parsed {len(crossings)} crossings, {loops} free loops ({'strict' if strict else 'inferred'})")
    return diagram


def serialize_pd(d: LinkDiagram) -> str:
    """Strict-dialect PD text, crossings in index order."""
    terms = [
        "X({},{},{},{};{})".format(*c.slots, c.over_in)
        for c in sorted(d.crossings, key=lambda c: c.index)
    ]
    if d.free_loops:
        terms.append(f"O({d.free_loops})")
    return ",".join(terms)


def to_json_dict(d: LinkDiagram) -> dict:
    return {
        "crossings": [
            {"slots": list(c.slots), "over_in": c.over_in}
            for c in sorted(d.crossings, key=lambda c: c.index)
        ],
        "free_loops": d.free_loops,
        "name": d.name or "",
    }


def from_json_dict(data: dict) -> LinkDiagram:
    """Inverse of ``to_json_dict``; the result is validated."""
    if not isinstance(data, dict) or "crossings" not in data:
        raise MalformedSyntax("diagram JSON needs a 'crossings' list")
    crossings = []
    for pos, entry in enumerate(data["crossings"]):
        try:
            slots = tuple(int(a) for a in entry["slots"])
            over = int(entry["over_in"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedSyntax(f"crossing {pos}: {exc}") from exc
        crossings.append(Crossing(slots, over, pos))
    try:
        loops = int(data.get("free_loops", 0))
    except (TypeError, ValueError) as exc:
        raise MalformedSyntax(f"free_loops: {exc}") from exc
    return ensure_valid(LinkDiagram(tuple(crossings), loops, data.get("name") or None))


def dumps(d: LinkDiagram) -> str:
    return json.dumps(to_json_dict(d), sort_keys=True)


def loads(text: str) -> LinkDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSyntax(f"invalid diagram JSON: {exc}") from exc
    return from_json_dict(data)

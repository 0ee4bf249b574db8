"""
Goeritz matrix of the white checkerboard faces and the Gordon-Litherland
correction term.

At every crossing the white faces occupy either corners 0/2 or corners
1/3. The crossing contributes eta = +1 in the first case and -1 in the
second, between the two white faces it touches. A crossing is type II
when eta equals its sign; mu sums eta over type II crossings, and the
link signature is signature(G) - mu.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.diagram.faces import WHITE, CheckerboardColoring, checkerboard
from src.diagram.link_diagram import LinkDiagram, is_connected
from src.errors import DisconnectedInput, InvalidDiagram

logger = logging.getLogger(__name__)

TYPE_I = "I"
TYPE_II = "II"


@dataclass(frozen=True)
class GoeritzData:
    white_faces: Tuple[int, ...]
    basepoint: int
    matrix: Tuple[Tuple[int, ...], ...]
    full_matrix: Tuple[Tuple[int, ...], ...] = field(repr=False)
    type2_correction: int = 0
    crossing_types: Dict[int, str] = field(default_factory=dict, compare=False)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(len(self.matrix), len(self.matrix))


def goeritz(d: LinkDiagram, col: Optional[CheckerboardColoring] = None) -> GoeritzData:
    if not is_connected(d):
        raise DisconnectedInput("Goeritz matrix needs a connected diagram")
    if not d.crossings:
        raise InvalidDiagram("Goeritz matrix needs at least one crossing")
    col = col if col is not None else checkerboard(d)
    face_of = col.face_set.face_of_corner

    white = sorted(col.white_faces)
    row = {f: k for k, f in enumerate(white)}
    size = len(white)
    full: List[List[int]] = [[0] * size for _ in range(size)]
    mu = 0
    types: Dict[int, str] = {}

    for pos, c in enumerate(d.crossings):
        corner_faces = [face_of[(pos, j)] for j in range(4)]
        if col.color[corner_faces[0]] == WHITE:
            eta, a, b = 1, corner_faces[0], corner_faces[2]
        else:
            eta, a, b = -1, corner_faces[1], corner_faces[3]
        if eta == c.sign:
            types[c.index] = TYPE_II
            mu += eta
        else:
            types[c.index] = TYPE_I
        if a != b:
            full[row[a]][row[b]] -= eta
            full[row[b]][row[a]] -= eta

    for i in range(size):
        full[i][i] = -sum(full[i][k] for k in range(size) if k != i)

    basepoint = white[0]
    kept = list(range(1, size))
    matrix = tuple(tuple(full[i][j] for j in kept) for i in kept)
    logger.debug(f"Goeritz matrix {len(kept)}x{len(kept)}, mu={mu}")
    return GoeritzData(
        white_faces=tuple(white[1:]),
        basepoint=basepoint,
        matrix=matrix,
        full_matrix=tuple(tuple(r) for r in full),
        type2_correction=mu,
        crossing_types=types,
    )

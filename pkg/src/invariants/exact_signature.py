"""
Exact symmetric-matrix signature, nullity and determinant.

Congruence diagonalization over the rationals: a nonzero diagonal entry is
eliminated as a 1x1 pivot; when the whole diagonal vanishes an off-diagonal
entry a gives the hyperbolic block [[0, a], [a, 0]] (one positive, one
negative direction) which is eliminated as a 2x2 pivot.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from src.errors import InternalError, NotSymmetric

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int
    det: Fraction

    @property
    def signature(self) -> int:
        return self.positive - self.negative


def _to_fractions(m) -> Matrix:
    rows = np.asarray(m, dtype=object).tolist() if len(m) else []
    n = len(rows)
    if any(not isinstance(r, list) or len(r) != n for r in rows):
        raise NotSymmetric("matrix is not square")
    out = [[Fraction(x) for x in r] for r in rows]
    for i in range(n):
        for j in range(i + 1, n):
            if out[i][j] != out[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    return out


def _first_nonzero_diagonal(a: Matrix) -> int:
    for i, row in enumerate(a):
        if row[i] != 0:
            return i
    return -1


def _first_nonzero_entry(a: Matrix) -> Tuple[int, int]:
    for i, row in enumerate(a):
        for j in range(i + 1, len(a)):
            if row[j] != 0:
                return i, j
    return -1, -1


def inertia(m: Sequence[Sequence[int]]) -> Inertia:
    a = _to_fractions(m)
    positive = negative = zero = 0
    det = Fraction(1)
    while a:
        i = _first_nonzero_diagonal(a)
        if i >= 0:
            p = a[i][i]
            if p > 0:
                positive += 1
            else:
                negative += 1
            det *= p
            rest = [r for r in range(len(a)) if r != i]
            a = [[a[r][c] - a[r][i] * a[i][c] / p for c in rest] for r in rest]
            continue
        i, j = _first_nonzero_entry(a)
        if i < 0:
            zero += len(a)
            det = Fraction(0)
            break
        h = a[i][j]
        positive += 1
        negative += 1
        det *= -h * h
        rest = [r for r in range(len(a)) if r not in (i, j)]
        a = [
            [a[r][c] - (a[r][i] * a[j][c] + a[r][j] * a[i][c]) / h for c in rest]
            for r in rest
        ]
    return Inertia(positive, negative, zero, det)


def symmetric_signature(m: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """(signature, nullity) of a symmetric integer matrix, computed exactly."""
    result = inertia(m)
    return result.signature, result.zero


def determinant_exact(m: Sequence[Sequence[int]]) -> int:
    """|det m| as an integer; the empty matrix has determinant 1."""
    det = inertia(m).det
    if det.denominator != 1:
        raise InternalError(f"integer matrix produced non-integral determinant {det}")
    return abs(det.numerator)

"""
Two-bridge link diagrams from continued fractions.

[a1, ..., am] is drawn as the 4-plat closure of
    sigma_2^a1 sigma_1^-a2 sigma_2^a3 ...
with caps joining positions 1-2 and 3-4 at both ends. The plat needs an
odd number of twist regions; an even-length input is rewritten to the
odd-length expansion of the same fraction first. Components are oriented
upward through the first crossing they meet, so [n] comes out positive.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Tuple

from src.diagram.builder import plat_closure
from src.diagram.link_diagram import LinkDiagram
from src.errors import InvalidTerms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContinuedFraction:
    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise InvalidTerms("continued fraction needs at least one term")
        for a in terms:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise InvalidTerms(f"terms must be positive integers, got {a!r}")
        object.__setattr__(self, "terms", terms)

    def value(self) -> Fraction:
        """a1 + 1/(a2 + 1/(... + 1/am))."""
        value = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            value = a + 1 / value
        return value

    @property
    def numerator(self) -> int:
        return self.value().numerator

    @property
    def crossings(self) -> int:
        return sum(self.terms)

    def odd_length(self) -> Tuple[int, ...]:
        terms = list(self.terms)
        if len(terms) % 2 == 0:
            if terms[-1] == 1:
                terms = terms[:-2] + [terms[-2] + 1]
            else:
                terms = terms[:-1] + [terms[-1] - 1, 1]
        return tuple(terms)


def plat_word(cf: ContinuedFraction) -> List[int]:
    letters: List[int] = []
    for i, a in enumerate(cf.odd_length()):
        letters.extend([2] * a if i % 2 == 0 else [-1] * a)
    return letters


def two_bridge(cf: ContinuedFraction) -> LinkDiagram:
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    name = "two_bridge[" + ",".join(str(a) for a in cf.terms) + "]"
    return plat_closure(4, plat_word(cf), name)


def compositions(total: int) -> Iterator[Tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``total``."""
    if total < 1:
        return
    for cuts in product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def two_bridge_corpus(max_sum: int, min_sum: int = 2) -> List[Tuple[ContinuedFraction, LinkDiagram]]:
    """
    Every diagram with min_sum <= a1+...+am <= max_sum, one per distinct
    odd-length expansion, in order of crossing count.
    """
    seen = set()
    corpus = []
    for total in range(max(min_sum, 1), max_sum + 1):
        for terms in compositions(total):
            cf = ContinuedFraction(terms)
            key = cf.odd_length()
            if key in seen:
                continue
            seen.add(key)
            corpus.append((cf, two_bridge(cf)))
    logger.info(f"Generated {len(corpus)} two-bridge diagrams with {min_sum}..{max_sum} crossings")
    return corpus


def continued_fraction_value(terms) -> Fraction:
    return ContinuedFraction(tuple(terms)).value()

"""
Braid Package: braid words, (strongly) quasipositive factorizations,
closures and the diagram braiding transform.
"""

from .braid_word import (
    BraidWord,
    QPFactorization,
    SQPFactorization,
    band_word,
    braid_from_json,
    braid_to_json,
    closure_to_diagram,
    expand_qp,
    expand_sqp,
    exponent_sum,
    free_reduce,
    invert,
    is_positive_word,
    parse_braid_text,
    parse_letters,
    random_qp,
    serialize_braid_text,
)
from .vogel import FingerMove, apply_move, braid_diagram, find_move, read_braid_word, vogel_transform

__all__ = [
    'BraidWord', 'QPFactorization', 'SQPFactorization', 'band_word',
    'braid_from_json', 'braid_to_json', 'closure_to_diagram', 'expand_qp',
    'expand_sqp', 'exponent_sum', 'free_reduce', 'invert', 'is_positive_word',
    'parse_braid_text', 'parse_letters', 'random_qp', 'serialize_braid_text',
    'FingerMove', 'apply_move', 'braid_diagram', 'find_move', 'read_braid_word',
    'vogel_transform',
]

"""
Invariants Package: exact signature, Goeritz data and signature reports.
"""

from .exact_signature import Inertia, determinant_exact, inertia, symmetric_signature
from .goeritz import TYPE_I, TYPE_II, GoeritzData, goeritz
from .signature import (
    SignatureReport,
    gl_signature,
    gordon_litherland,
    link_signature,
    signature_report_to_json,
    traczyk_signature,
    verify_traczyk,
)

__all__ = [
    'Inertia', 'determinant_exact', 'inertia', 'symmetric_signature',
    'TYPE_I', 'TYPE_II', 'GoeritzData', 'goeritz',
    'SignatureReport', 'gl_signature', 'gordon_litherland', 'link_signature',
    'signature_report_to_json', 'traczyk_signature', 'verify_traczyk',
]

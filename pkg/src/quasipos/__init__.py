"""
Quasipos Package: certified quasipositivity verdicts and the tree-sign
inequality corpus scan.
"""

from .verdicts import (
    BraidData,
    Outcome,
    QuasipositivityCertifier,
    RCounts,
    Verdict,
    dhl_verdict,
    generalized_verdict,
    mt_check,
    proof_chain_check,
    r_pm,
    require_hypotheses,
    verify_certificate,
)
from .question8 import Question8Scanner, ScanEntry, ScanRecord, ScanReport, question8_scan, scan_entry

__all__ = [
    'BraidData', 'Outcome', 'QuasipositivityCertifier', 'RCounts', 'Verdict',
    'dhl_verdict', 'generalized_verdict', 'mt_check', 'proof_chain_check',
    'r_pm', 'require_hypotheses', 'verify_certificate',
    'Question8Scanner', 'ScanEntry', 'ScanRecord', 'ScanReport',
    'question8_scan', 'scan_entry',
]

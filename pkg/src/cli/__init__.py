"""
CLI Package: command implementations and input loading.
"""

from .commands import (
    build_scan_corpus,
    classify_diagram,
    cmd_braid,
    cmd_certify,
    cmd_classify,
    cmd_gen_two_bridge,
    cmd_invariants,
    cmd_scan,
    load_diagram,
)

__all__ = [
    'build_scan_corpus', 'classify_diagram', 'cmd_braid', 'cmd_certify',
    'cmd_classify', 'cmd_gen_two_bridge', 'cmd_invariants', 'cmd_scan',
    'load_diagram',
]

"""
Test suite for the alternating-link quasipositivity toolkit.
"""

__version__ = "1.0.0"

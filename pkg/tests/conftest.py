"""
Shared fixtures: small named diagrams and the generated two-bridge corpus.
"""
import logging
import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.corpus.two_bridge import two_bridge_corpus
from src.diagram.builder import braid_closure
from src.diagram.link_diagram import LinkDiagram
from src.diagram.pd_codec import parse_pd

# Configure logging for test visibility
logging.basicConfig(level=logging.INFO)

NEG_TREFOIL_PD = "X(1,4,2,5;1),X(5,2,6,3;1),X(3,6,4,1;1)"
SAMPLE_TABLE = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'data', 'tables', 'sample_links.csv'))


@pytest.fixture
def pos_trefoil():
    return braid_closure(2, [1, 1, 1], "pos_trefoil")


@pytest.fixture
def pos_hopf():
    return braid_closure(2, [1, 1], "pos_hopf")


@pytest.fixture
def fig8():
    return braid_closure(3, [1, -2, 1, -2], "fig8")


@pytest.fixture
def kink():
    """One-crossing unknot: alternating, but its crossing is a bridge."""
    return braid_closure(2, [1], "kink")


@pytest.fixture
def unknot0():
    return LinkDiagram((), 1, "unknot")


@pytest.fixture
def neg_trefoil():
    return parse_pd(NEG_TREFOIL_PD, name="neg_trefoil")


@pytest.fixture
def sample_table():
    return SAMPLE_TABLE


@pytest.fixture(scope="session")
def two_bridge_10():
    return two_bridge_corpus(10)

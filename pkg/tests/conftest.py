"""Shared fixtures for the test suite."""

import pytest

from vague_membership.connectives import ConnectiveTriple, parse_triple
from vague_membership.factory import reset_defaults
from vague_membership.measure import Judgement
from vague_membership.specio import load_bundled

DUAL_TRIPLES = [
    "standard,min,max",
    "standard,product,probsum",
    "standard,lukasiewicz,boundedsum",
    "standard,drastic,drastic",
]


@pytest.fixture(autouse=True)
def _reset_defaults():
    yield
    reset_defaults()


@pytest.fixture
def height():
    """The bundled Netherlands 2006 height partition (short/medium/tall on [0, 3])."""
    partition, _ = load_bundled("height_nl_2006")
    return partition


@pytest.fixture
def minmax():
    return ConnectiveTriple()


@pytest.fixture(params=DUAL_TRIPLES)
def dual_triple(request):
    return parse_triple(request.param)


@pytest.fixture
def young_old():
    """Direct judgement at x = 35 with young 0.6 and old 0.4."""
    return Judgement.from_degrees({"young": 0.6, "old": 0.4}, x=35)


@pytest.fixture
def crisp_at_25():
    """Crisp five-interval judgement of [0, 200] at x = 25."""
    names = ["b0_40", "b40_80", "b80_120", "b120_160", "b160_200"]
    return Judgement.from_degrees({n: float(i == 0) for i, n in enumerate(names)}, x=25)

"""Shared fixtures: canonical polygons used throughout the test suite."""
import pytest

from twowatchman import validate_polygon


SQUARE_RAW = [(0, 0), (1, 0), (1, 1), (0, 1)]
LSHAPE_RAW = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


@pytest.fixture
def square():
    return validate_polygon(SQUARE_RAW)


@pytest.fixture
def lshape():
    return validate_polygon(LSHAPE_RAW)


@pytest.fixture
def comb3():
    from twowatchman.cli import generate_corpus
    return validate_polygon(generate_corpus("comb", 3, 0)["vertices"])


@pytest.fixture
def staircase4():
    from twowatchman.cli import generate_corpus
    return validate_polygon(generate_corpus("staircase", 4, 0)["vertices"])

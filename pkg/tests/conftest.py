import pathlib

import pytest

from chernlab import Ideal, RingContext, parse_polynomial

PROBLEM_DIR = pathlib.Path(__file__).resolve().parent.parent / "problems"


@pytest.fixture
def ctx4():
    return RingContext(["x", "y", "z", "w"])


@pytest.fixture
def ctx6():
    return RingContext(["x1", "x2", "x3", "x4", "x5", "x6"])


@pytest.fixture
def e1(ctx4):
    """Two transversal planes in four variables with the diagonal sop."""
    i1 = Ideal.from_strings(ctx4, ["x", "y"])
    i2 = Ideal.from_strings(ctx4, ["z", "w"])
    j = Ideal.from_strings(ctx4, ["x + z", "y + w"])
    return ctx4, [i1, i2], j


@pytest.fixture
def e2(ctx6):
    """Two transversal 3-planes in six variables."""
    i1 = Ideal.from_strings(ctx6, ["x1", "x2", "x3"])
    i2 = Ideal.from_strings(ctx6, ["x4", "x5", "x6"])
    j = Ideal.from_strings(ctx6, ["x1 + x4", "x2 + x5", "x3 + x6"])
    return ctx6, [i1, i2], j


@pytest.fixture
def e4(ctx4):
    """Three pairwise transversal planes in four variables."""
    i1 = Ideal.from_strings(ctx4, ["x", "y"])
    i2 = Ideal.from_strings(ctx4, ["z", "w"])
    i3 = Ideal.from_strings(ctx4, ["x + z", "y + w"])
    j = Ideal.from_strings(ctx4, ["x + w", "y - z"])
    return ctx4, [i1, i2, i3], j


def parse(ctx, text):
    return parse_polynomial(text, ctx)

import pytest

from gcluster.cartan import parse_type
from gcluster.colored import ColoredRoot
from gcluster.quiver import alternating_orientation


def cr(*coeffs, color=1):
    return ColoredRoot(tuple(coeffs), color)


@pytest.fixture
def a2():
    return parse_type("A2")


@pytest.fixture
def q_a2(a2):
    # vertex 0 is the source, vertex 1 the sink
    return alternating_orientation(a2)

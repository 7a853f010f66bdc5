import pytest
from hypothesis import given, settings, strategies as st

from gcluster.cartan import parse_type
from gcluster.errors import ParseError
from gcluster.quiver import (
    ValuedQuiver,
    admissible_ordering,
    all_admissible_orderings,
    alternating_orientation,
    is_alternating,
    linear_orientation,
    parse_orientation,
    reflect_orientation,
    sinks,
    sources,
)


def quiver(spec, arrows):
    return parse_orientation(parse_type(spec), arrows)


def test_sinks_and_sources():
    q = quiver("A2", "1>2")
    assert sinks(q) == {1} and sources(q) == {0}
    q = linear_orientation(parse_type("A3"))
    assert sinks(q) == {2} and sources(q) == {0}
    q = quiver("A3", "1>2,3>2")
    assert sinks(q) == {1} and sources(q) == {0, 2}


@pytest.mark.parametrize("spec, before, k, after", [
    ("A2", "1>2", 1, "2>1"),
    ("A3", "1>2,2>3", 2, "1>2,3>2"),
    ("A3", "1>2,3>2", 1, "2>1,2>3"),
])
def test_reflect_orientation(spec, before, k, after):
    assert reflect_orientation(quiver(spec, before), k) == quiver(spec, after)


def test_admissible_ordering_examples():
    assert admissible_ordering(quiver("A2", "1>2")) == (1, 0)
    assert admissible_ordering(quiver("A3", "1>2,3>2")) == (1, 0, 2)
    assert admissible_ordering(alternating_orientation(parse_type("A1"))) == (0,)


def test_alternating_orientation():
    assert str(alternating_orientation(parse_type("A2"))) == "1>2"
    assert str(alternating_orientation(parse_type("A3"))) == "1>2,3>2"
    assert alternating_orientation(parse_type("A1")).arrows == frozenset()
    for spec in ["A4", "D4", "E6", "B3", "F4", "A1xA2"]:
        assert is_alternating(alternating_orientation(parse_type(spec)))


def test_cycle_and_parse_errors():
    c = parse_type("A3")
    with pytest.raises(ParseError):
        parse_orientation(c, "1>3")  # not an edge of the diagram
    with pytest.raises(ParseError):
        parse_orientation(c, "1>2")  # edge 2-3 left unoriented
    with pytest.raises(ParseError):
        parse_orientation(c, "1=2,2>3")


def test_reflection_at_non_sink_is_still_an_orientation():
    q = linear_orientation(parse_type("A3"))
    assert reflect_orientation(reflect_orientation(q, 1), 1) == q


@st.composite
def orientations(draw):
    spec = draw(st.sampled_from(["A3", "A4", "D4", "D5", "E6", "B3", "G2"]))
    c = parse_type(spec)
    arrows = frozenset((i, j) if draw(st.booleans()) else (j, i) for i, j in c.edges())
    return ValuedQuiver(c, arrows)


@settings(max_examples=50, deadline=None)
@given(orientations())
def test_admissible_ordering_is_admissible(q):
    order = admissible_ordering(q)
    assert sorted(order) == list(range(q.rank))
    cur = q
    for k in order:
        assert k in sinks(cur)
        cur = reflect_orientation(cur, k)
    # reflecting at every vertex once returns the orientation
    assert cur == q


@settings(max_examples=20, deadline=None)
@given(orientations())
def test_ordering_is_one_of_all_admissible(q):
    if q.rank <= 5:
        assert admissible_ordering(q) in all_admissible_orderings(q)

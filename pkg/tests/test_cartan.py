from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gcluster.cartan import (
    cartan_matrix,
    classify,
    coxeter_invariants,
    format_root,
    height,
    parse_root,
    parse_type,
    positive_roots,
    root_coefficient,
    root_system,
    simple_reflection,
)
from gcluster.errors import NotFiniteType, NotGeneralizedCartan, NotSymmetrizable, ParseError

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "A1xA1", "A2xB2"]

# |Phi^+| and exponents, standard tables
TABLE = {
    "A1": (1, (1,)), "A2": (3, (1, 2)), "A3": (6, (1, 2, 3)), "A4": (10, (1, 2, 3, 4)),
    "B2": (4, (1, 3)), "B3": (9, (1, 3, 5)), "C3": (9, (1, 3, 5)),
    "D4": (12, (1, 3, 3, 5)), "D5": (20, (1, 3, 4, 5, 7)), "G2": (6, (1, 5)),
    "F4": (24, (1, 5, 7, 11)), "E6": (36, (1, 4, 5, 7, 8, 11)),
    "E7": (63, (1, 5, 7, 9, 11, 13, 17)), "E8": (120, (1, 7, 11, 13, 17, 19, 23, 29)),
}


def _form(cartan):
    a, eps = cartan.matrix, cartan.symmetrizer
    n = cartan.rank
    return lambda x, y: sum(x[i] * eps[i] * a[i][j] * y[j] for i in range(n) for j in range(n))


def _roots_by_length(cartan, bound=6):
    """Positive roots as integer vectors of simple-root length satisfying coroot integrality."""
    n = cartan.rank
    b = _form(cartan)
    simple_len = {b(cartan.simple_root(i), cartan.simple_root(i)) for i in range(n)}
    out = set()
    for k in product(range(bound + 1), repeat=n):
        if not any(k):
            continue
        support = [i for i in range(n) if k[i]]
        # a root lives in one connected component
        comp = next(c for c in cartan.components if support[0] in c)
        if not set(support) <= set(comp):
            continue
        ll = b(k, k)
        if ll not in simple_len:
            continue
        if all(Fraction(k[i] * b(cartan.simple_root(i), cartan.simple_root(i)), ll).denominator == 1
               for i in range(n)):
            if _connected(cartan, support):
                out.add(k)
    return out


def _connected(cartan, support):
    seen, stack = {support[0]}, [support[0]]
    while stack:
        i = stack.pop()
        for j in cartan.neighbors(i):
            if j in support and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == set(support)


def test_classify_a2():
    c = classify([[2, -1], [-1, 2]])
    assert c.type_label == "A2" and c.symmetrizer == (1, 1)


def test_classify_b2_symmetrizer():
    c = classify([[2, -1], [-2, 2]])
    assert c.symmetrizer == (2, 1)
    assert c.type_label[0] in "BC" and not c.simply_laced


@pytest.mark.parametrize("m, err", [
    ([[2, -2], [-2, 2]], NotFiniteType),
    ([[2, 1], [1, 2]], NotGeneralizedCartan),
    ([[2, -1], [0, 2]], NotGeneralizedCartan),
    ([[3, -1], [-1, 2]], NotGeneralizedCartan),
    ([[2, -1, -1], [-1, 2, -2], [-1, -1, 2]], NotSymmetrizable),
])
def test_classify_rejects(m, err):
    with pytest.raises(err):
        classify(m)


@pytest.mark.parametrize("spec", sorted(TABLE))
def test_root_counts_and_exponents(spec):
    rs = root_system(parse_type(spec))
    count, exps = TABLE[spec]
    assert len(rs.positive_roots) == count
    assert rs.exponents == exps
    assert rs.coxeter_number == max(exps) + 1


@pytest.mark.parametrize("spec", TYPES)
def test_positive_roots_match_length_characterisation(spec):
    c = parse_type(spec)
    assert set(positive_roots(c)) == _roots_by_length(c)


def test_positive_roots_small(a2):
    assert positive_roots(parse_type("A1")) == ((1,),)
    assert set(positive_roots(a2)) == {(1, 0), (0, 1), (1, 1)}
    assert len(positive_roots(classify([[2, -1], [-2, 2]]))) == 4


def test_simple_reflection_examples(a2):
    assert simple_reflection(a2, 0, (1, 0)) == (-1, 0)
    assert simple_reflection(a2, 0, (0, 1)) == (1, 1)
    assert simple_reflection(a2, 1, (1, 1)) == (1, 0)


@pytest.mark.parametrize("spec, h, exps", [("A3", 4, (1, 2, 3)), ("G2", 6, (1, 5)), ("A1", 2, (1,))])
def test_coxeter_invariants(spec, h, exps):
    assert coxeter_invariants(parse_type(spec)) == (h, exps)


def test_root_coefficient():
    assert root_coefficient((1, 1), 0) == 1
    assert root_coefficient((1, 0), 1) == 0
    assert root_coefficient((0, -1), 1) == -1


def test_product_type_components():
    c = parse_type("A1xA1")
    assert c.matrix == ((2, 0), (0, 2))
    assert root_system(c).coxeter_numbers == (2, 2)


def test_parse_type_accepts_matrix_json():
    assert parse_type("[[2,-1],[-1,2]]").type_label == "A2"


@pytest.mark.parametrize("bad", ["Q9", "A0", "", "B1", "D3x", "E9"])
def test_parse_type_errors(bad):
    with pytest.raises(ParseError):
        parse_type(bad)


def test_cartan_matrix_g2_convention():
    assert cartan_matrix("G2") == [[2, -3], [-1, 2]]


def test_root_format_round_trip():
    for beta in [(1, 2, 0), (0, 0, 1), (0, -1, 0), (3, 2, 1)]:
        assert parse_root(format_root(beta), 3) == beta
    assert format_root((1, 2, 0)) == "a1+2a2"


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(TYPES), data=st.data())
def test_reflection_is_isometric_involution(spec, data):
    c = parse_type(spec)
    roots = positive_roots(c)
    beta = data.draw(st.sampled_from(roots))
    i = data.draw(st.integers(0, c.rank - 1))
    image = simple_reflection(c, i, beta)
    b = _form(c)
    assert simple_reflection(c, i, image) == beta
    assert b(image, image) == b(beta, beta)
    # s_i permutes Phi^+ minus alpha_i
    if beta != c.simple_root(i):
        assert image in roots
    else:
        assert height(image) == -1

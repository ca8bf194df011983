import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hilbertgeom.rational import (
    DegenerateInputError, PaschSide, RatLine, RatPoint, between, collinear, extend,
    format_point, intersect, line_through, parse_point, parse_rational, pasch_witness,
    random_collinear_triple, theorem3_point,
)

P = RatPoint

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
points = st.builds(RatPoint, rationals, rationals)


def test_parse_rational():
    assert parse_rational("2/3") == F(2, 3)
    assert parse_rational("-1") == -1
    assert parse_rational(" 4 / 6 ") == F(2, 3)
    for bad in ("1.5", "1/0", "", "a/b", "1e3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_parse_and_format_point():
    p = parse_point("( 1/3 , -2 )")
    assert p == P(F(1, 3), -2)
    assert format_point(p) == "(1/3,-2)"
    with pytest.raises(ValueError):
        parse_point("1,2")


def test_points_reject_floats():
    with pytest.raises(TypeError):
        P(0.5, 1)


@pytest.mark.parametrize("p, q, abc", [
    (P(0, 0), P(1, 0), (0, 1, 0)),
    (P(0, 0), P(0, 1), (1, 0, 0)),
    (P(2, 2), P(1, 0), (1, F(-1, 2), -1)),
])
def test_line_through(p, q, abc):
    line = line_through(p, q)
    assert (line.a, line.b, line.c) == abc
    assert line.contains(p) and line.contains(q)


def test_line_through_same_point():
    with pytest.raises(DegenerateInputError):
        line_through(P(1, 1), P(1, 1))


def test_unnormalized_line_rejected():
    with pytest.raises(ValueError):
        RatLine(2, 1, 0)
    with pytest.raises(DegenerateInputError):
        RatLine.from_coefficients(0, 0, 1)


@given(points, points)
def test_line_is_unique_for_pair(p, q):
    if p == q:
        return
    assert line_through(p, q) == line_through(q, p)


def test_intersect_examples():
    x_axis = line_through(P(0, 0), P(1, 0))
    y_axis = line_through(P(0, 0), P(0, 1))
    assert intersect(y_axis, x_axis) == P(0, 0)
    assert intersect(x_axis, line_through(P(0, 1), P(1, 1))) is None
    assert intersect(x_axis, x_axis) is None
    assert intersect(line_through(P(1, 1), P(0, -2)), x_axis) == P(F(2, 3), 0)


@given(points, points, points, points)
def test_intersection_lies_on_both(p, q, r, s):
    if p == q or r == s:
        return
    l1, l2 = line_through(p, q), line_through(r, s)
    x = intersect(l1, l2)
    if x is None:
        assert l1.a * l2.b == l2.a * l1.b
    else:
        assert l1.contains(x) and l2.contains(x)


def test_collinear_examples():
    assert collinear(P(0, 0), P(1, 0), P(2, 0))
    assert not collinear(P(0, 0), P(1, 0), P(1, 1))
    assert collinear(P(0, 0), P(1, 2), P(2, 4))


def test_between_examples():
    assert between(P(0, 0), P(1, 0), P(2, 0))
    assert not between(P(0, 0), P(2, 0), P(1, 0))
    assert between(P(0, 0), P(F(2, 3), 0), P(1, 0))
    assert between(P(0, 0), P(0, 1), P(0, 3))   # vertical: parameter from y
    assert not between(P(0, 0), P(0, 0), P(1, 0))
    assert not between(P(0, 0), P(1, 1), P(2, 0))


def test_extend_examples():
    assert extend(P(0, 0), P(1, 0)) == P(2, 0)
    assert extend(P(1, 1), P(2, 2)) == P(3, 3)
    assert extend(P(0, 0), P(F(1, 3), F(1, 2))) == P(F(2, 3), 1)
    with pytest.raises(DegenerateInputError):
        extend(P(1, 1), P(1, 1))


@given(points, points)
def test_extension_axiom(a, c):
    if a == c:
        return
    assert between(a, c, extend(a, c))


@given(points, points, points)
def test_between_symmetric_and_distinct(a, b, c):
    if between(a, b, c):
        assert between(c, b, a)
        assert len({a, b, c}) == 3 and collinear(a, b, c)
    else:
        assert not between(c, b, a)


def test_collinear_triples_have_exactly_one_middle():
    rng = random.Random(7)
    for _ in range(500):
        p, q, r = random_collinear_triple(rng)
        assert between(q, p, r) + between(p, q, r) + between(p, r, q) == 1


def test_theorem3_examples():
    # F = (0,2), G = (2,-2); line EG is 3x + 2y - 2 = 0
    assert theorem3_point(P(0, 0), P(1, 0), P(0, 1)) == P(F(2, 3), 0)
    # F = (2,2), G = (2,-2); line EG is 3x + y - 4 = 0
    d = theorem3_point(P(0, 0), P(2, 0), P(1, 1))
    assert d == P(F(4, 3), 0) and between(P(0, 0), d, P(2, 0))
    with pytest.raises(DegenerateInputError):
        theorem3_point(P(0, 0), P(0, 0), P(1, 1))
    with pytest.raises(DegenerateInputError):
        theorem3_point(P(0, 0), P(2, 0), P(5, 0))


def test_pasch_examples():
    a, b, c = P(0, 0), P(2, 0), P(1, 2)
    res = pasch_witness(a, b, c, RatLine.from_coefficients(1, 1, F(-3, 2)))
    # s(A) = -3/2, s(C) = 3/2: AC crossed halfway
    assert res.side is PaschSide.CROSSES_AC
    assert res.point == P(F(1, 2), 1)
    assert pasch_witness(a, b, c, line_through(P(0, 3), P(1, 3))).side is PaschSide.NONE_APPLICABLE


def test_pasch_crosses_bc():
    a, b, c = P(0, 0), P(2, 0), P(1, 2)
    res = pasch_witness(a, b, c, line_through(P(F(3, 2), 0), P(F(3, 2), 5)))
    assert res.side is PaschSide.CROSSES_BC
    assert res.point == P(F(3, 2), 1)


def test_pasch_preconditions():
    with pytest.raises(DegenerateInputError):
        pasch_witness(P(0, 0), P(1, 0), P(2, 0), line_through(P(0, 1), P(1, 2)))
    with pytest.raises(DegenerateInputError):
        pasch_witness(P(0, 0), P(2, 0), P(1, 2), line_through(P(0, 0), P(1, 5)))

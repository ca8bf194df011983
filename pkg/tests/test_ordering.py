import random
from fractions import Fraction as F

import pytest

from hilbertgeom.ordering import (
    OracleFault, OrderingResult, brute_force_labelings, is_linear_labeling,
    middle_of_three, order_collinear, verify_theorem5,
)
from hilbertgeom.rational import RatPoint as P, between, random_point, random_rational


class Token:
    """A point with no coordinates; only its hidden rank is known to the oracle."""
    __slots__ = ("_rank",)

    def __init__(self, rank):
        self._rank = rank

    def __repr__(self):
        return f"Token#{id(self) % 1000}"


def token_oracle(a, b, c):
    return a._rank < b._rank < c._rank or c._rank < b._rank < a._rank


def sample_line(rng, n):
    a = random_point(rng)
    c = random_point(rng)
    while c == a:
        c = random_point(rng)
    ts = set()
    while len(ts) < n:
        ts.add(random_rational(rng))
    pts = [a + (c - a).scale(t) for t in ts]
    rng.shuffle(pts)
    return pts, a, c


def coordinate_order(pts, a, c):
    d = c - a
    key = (lambda p: (p - a).x / d.x) if d.x != 0 else (lambda p: (p - a).y / d.y)
    return sorted(pts, key=key)


def test_middle_of_three():
    assert middle_of_three(P(0, 0), P(1, 0), P(2, 0)) == P(1, 0)
    assert middle_of_three(P(5, 5), P(1, 1), P(3, 3)) == P(3, 3)
    with pytest.raises(ValueError):
        middle_of_three(P(0, 0), P(1, 0), P(1, 1))
    with pytest.raises(ValueError):
        middle_of_three(P(0, 0), P(0, 0), P(1, 1))


def test_order_four_points():
    pts = [P(3, 0), P(1, 0), P(2, 0), P(0, 0)]
    res = order_collinear(pts)
    asc = (P(0, 0), P(1, 0), P(2, 0), P(3, 0))
    assert res.labels in (asc, asc[::-1])
    # tie-break: start from the earlier input point, here (3,0)
    assert res.labels == asc[::-1]
    assert res.reversed == asc


def test_two_points():
    p, q = P(0, 0), P(1, 1)
    assert order_collinear([p, q]).labels == (p, q)
    assert order_collinear([q, p]).labels == (q, p)
    assert set(brute_force_labelings([p, q], between)) == {(p, q), (q, p)}


def test_ordering_result_invariant():
    with pytest.raises(ValueError):
        OrderingResult((1, 2, 3), (1, 2, 3))


def test_exactly_two_labelings_brute_force():
    rng = random.Random(17)
    for _ in range(15):
        n = rng.randint(2, 6)
        pts, a, c = sample_line(rng, n)
        valid = brute_force_labelings(pts, between)
        assert len(valid) == 2
        assert valid[0] == valid[1][::-1]
        assert order_collinear(pts).labels in valid


def test_agrees_with_coordinate_order():
    rng = random.Random(5)
    for _ in range(40):
        pts, a, c = sample_line(rng, rng.randint(2, 10))
        labels = list(order_collinear(pts).labels)
        ref = coordinate_order(pts, a, c)
        assert labels in (ref, ref[::-1])


def test_order_uses_only_the_oracle():
    rng = random.Random(1)
    for n in range(2, 12):
        toks = [Token(r) for r in rng.sample(range(100), n)]
        res = order_collinear(toks, token_oracle)
        ranks = [t._rank for t in res.labels]
        assert ranks in (sorted(ranks), sorted(ranks, reverse=True))
        assert is_linear_labeling(res.labels, token_oracle)


def test_oracle_fault_detected():
    toks = [Token(i) for i in range(4)]
    with pytest.raises(OracleFault):
        order_collinear(toks, lambda a, b, c: True)
    with pytest.raises(OracleFault):
        order_collinear(toks, lambda a, b, c: False)


def test_verify_theorem5_examples():
    assert verify_theorem5(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
    assert not verify_theorem5(P(0, 0), P(2, 0), P(1, 0), P(3, 0))


def test_theorem5_on_ordered_output():
    rng = random.Random(23)
    for _ in range(50):
        pts, _, _ = sample_line(rng, 4)
        labels = order_collinear(pts).labels
        assert verify_theorem5(*labels)
        assert verify_theorem5(*labels[::-1])


def test_nested_betweenness_chain():
    # D between A and C, E between A and D  =>  E between A and C
    rng = random.Random(31)
    for _ in range(300):
        a, c = random_point(rng), random_point(rng)
        if a == c:
            continue
        s = F(rng.randint(1, 999), 1000)
        t = F(rng.randint(1, 999), 1000)
        d = a + (c - a).scale(s)
        e = a + (d - a).scale(t)
        assert between(a, d, c) and between(a, e, d)
        assert between(a, e, c)

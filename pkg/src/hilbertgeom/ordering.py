"""Ordering collinear points from betweenness alone."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

from .rational import RatPoint, between, collinear

__all__ = [
    "OrderingResult", "OracleFault", "middle_of_three", "order_collinear",
    "is_linear_labeling", "brute_force_labelings", "verify_theorem5",
]

T = TypeVar("T", bound=Hashable)
Betweenness = Callable[[T, T, T], bool]


class OracleFault(ValueError):
    """The betweenness oracle contradicted itself on the given points."""


@dataclass(frozen=True)
class OrderingResult:
    labels: tuple
    reversed: tuple

    def __post_init__(self):
        if tuple(reversed(self.labels)) != tuple(self.reversed):
            raise ValueError("reversed must be the reversal of labels")


def middle_of_three(p: RatPoint, q: RatPoint, r: RatPoint) -> RatPoint:
    if len({p, q, r}) < 3:
        raise ValueError("points must be distinct")
    if not collinear(p, q, r):
        raise ValueError("points are not collinear")
    middles = [m for m, (x, y) in ((p, (q, r)), (q, (p, r)), (r, (p, q))) if between(x, m, y)]
    if len(middles) != 1:
        raise AssertionError(f"expected exactly one middle point, found {len(middles)}")
    return middles[0]


def is_linear_labeling(labels: Sequence[T], oracle: Betweenness) -> bool:
    """Every point lies between any two points that straddle it."""
    return all(oracle(labels[i], labels[j], labels[k])
               for i, j, k in itertools.combinations(range(len(labels)), 3))


def brute_force_labelings(points: Sequence[T], oracle: Betweenness) -> list[tuple]:
    return [perm for perm in itertools.permutations(points) if is_linear_labeling(perm, oracle)]


def order_collinear(points: Sequence[T], oracle: Betweenness = between) -> OrderingResult:
    """Label collinear points so each lies between every pair straddling it.

    Only ``oracle`` is consulted, never coordinates.  The first two input
    points fix a direction; each other point is placed on one side of the
    first anchor, and points on the same side are compared by asking which
    one lies between the anchor and the other.  Of the two valid labelings,
    the one starting with the earlier input point is returned.
    """
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    o, u = pts[0], pts[1]
    position = {p: i for i, p in enumerate(pts)}

    side = {o: 0, u: 1}
    for p in pts[2:]:
        behind = oracle(p, o, u)        # o between p and u
        inside = oracle(o, p, u)
        beyond = oracle(o, u, p)
        if behind + inside + beyond != 1:
            raise OracleFault(f"no unique middle among {o!r}, {u!r}, {p!r}")
        side[p] = -1 if behind else 1

    def cmp(p, q):
        if side[p] != side[q]:
            return -1 if side[p] < side[q] else 1
        if side[p] == 1:
            # nearer to o comes first
            return -1 if oracle(o, p, q) else 1
        return -1 if oracle(p, q, o) else 1

    labels = sorted(pts, key=functools.cmp_to_key(cmp))
    for x, y, z in zip(labels, labels[1:], labels[2:]):
        if not oracle(x, y, z) or oracle(y, x, z) or oracle(x, z, y):
            raise OracleFault(f"inconsistent betweenness around {y!r}")
    if position[labels[-1]] < position[labels[0]]:
        labels.reverse()
    return OrderingResult(tuple(labels), tuple(reversed(labels)))


def verify_theorem5(a: RatPoint, b: RatPoint, c: RatPoint, d: RatPoint) -> bool:
    return between(a, b, c) and between(a, b, d) and between(a, c, d) and between(b, c, d)

"""Seeded randomized checks of the order axioms in the rational plane.

Each check draws ``samples`` instances from its own generator seeded with
``seed`` and returns the number of instances that failed.  Any nonzero count
is a defect: the arithmetic is exact.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .rational import (
    PaschSide, PaschViolation, between, collinear, extend, intersect, line_through,
    pasch_witness, random_collinear_triple, random_point,
    theorem3_point,
)

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class SuiteResult:
    name: str
    samples: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _distinct_pair(rng):
    a = random_point(rng)
    c = random_point(rng)
    while c == a:
        c = random_point(rng)
    return a, c


def _noncollinear_triple(rng):
    a, b = _distinct_pair(rng)
    c = random_point(rng)
    while collinear(a, b, c):
        c = random_point(rng)
    return a, b, c


def _interior_t(rng, bound: int = 1000) -> Fraction:
    den = rng.randint(2, bound)
    return Fraction(rng.randint(1, den - 1), den)


def check_symmetry(rng: random.Random, samples: int) -> int:
    failures = 0
    for _ in range(samples):
        a, b, c = random_collinear_triple(rng)
        fwd, back = between(a, b, c), between(c, b, a)
        if fwd != back:
            failures += 1
        elif fwd and not (len({a, b, c}) == 3 and collinear(a, b, c)):
            failures += 1
    return failures


def check_extension(rng: random.Random, samples: int) -> int:
    failures = 0
    for _ in range(samples):
        a, c = _distinct_pair(rng)
        b = extend(a, c)
        if not (between(a, c, b) and line_through(a, c).contains(b)):
            failures += 1
    return failures


def check_uniqueness(rng: random.Random, samples: int) -> int:
    """At most one of three collinear points is between the others; with
    the existence half, exactly one."""
    failures = 0
    for _ in range(samples):
        p, q, r = random_collinear_triple(rng)
        placements = between(q, p, r) + between(p, q, r) + between(p, r, q)
        if placements != 1:
            failures += 1
    return failures


def random_pasch_instance(rng: random.Random):
    """Triangle ABC and a line through an interior point of AB missing all vertices."""
    while True:
        a, b, c = _noncollinear_triple(rng)
        x = a + (b - a).scale(_interior_t(rng))
        y = random_point(rng)
        if y == x:
            continue
        line = line_through(x, y)
        if any(line.contains(v) for v in (a, b, c)):
            continue
        return a, b, c, line


def check_pasch(rng: random.Random, samples: int) -> int:
    failures = 0
    for _ in range(samples):
        a, b, c, line = random_pasch_instance(rng)
        try:
            res = pasch_witness(a, b, c, line)
        except PaschViolation:
            failures += 1
            continue
        if res.side is PaschSide.NONE_APPLICABLE or res.point is None:
            failures += 1
            continue
        u, v = (a, c) if res.side is PaschSide.CROSSES_AC else (b, c)
        # independent route: meet the line with the side's carrier
        meet = intersect(line, line_through(u, v))
        if meet != res.point or not between(u, meet, v):
            failures += 1
    return failures


def check_theorem3(rng: random.Random, samples: int) -> int:
    failures = 0
    for _ in range(samples):
        a, c, e = _noncollinear_triple(rng)
        try:
            d = theorem3_point(a, c, e)
        except AssertionError:
            failures += 1
            continue
        if not between(a, d, c):
            failures += 1
    return failures


SUITES: dict[str, Callable[[random.Random, int], int]] = {
    "II,1 symmetry": check_symmetry,
    "II,2 extension": check_extension,
    "II,3 uniqueness": check_uniqueness,
    "II,4 Pasch": check_pasch,
    "Theorem 3 interior point": check_theorem3,
}


def run_suites(seed: int = DEFAULT_SEED, samples: int = 10_000,
               names=None) -> list[SuiteResult]:
    out = []
    for name, fn in SUITES.items():
        if names is not None and name not in names:
            continue
        rng = random.Random(f"{seed}:{name}")
        out.append(SuiteResult(name, samples, fn(rng, samples)))
    return out

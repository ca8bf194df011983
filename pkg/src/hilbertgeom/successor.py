"""Six-point diagrams and the geometric successor function on them.

A diagram is the frame ``A, B, C, D, zero`` plus a moving point ``N``:

* ``A``, ``B`` and ``zero`` are not collinear;
* ``B`` lies between ``A`` and ``C``;
* ``zero`` lies between ``C`` and ``D``;
* ``N`` lies between ``A`` and ``zero``, or ``N == zero``.

The successor keeps the frame and moves ``N``: with ``D'`` the meet of
``CN`` and ``AD``, the new ``N`` is the meet of ``BD'`` and ``A zero``.
Iterating from ``N = zero`` yields an injective, never-returning sequence of
points marching towards ``A``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .rational import (
    RatPoint, between, collinear, format_point, intersect, line_through,
    parse_point, random_point, random_rational,
)

__all__ = [
    "Diagram", "SuccessorStep", "DiagramError", "InternalConsistencyError",
    "CONSTRAINTS", "diagram_violations", "make_diagram", "successor",
    "nat_point", "nat_points", "trace", "verify_injective",
    "reference_seed", "random_seed", "parse_diagram", "format_diagram",
]

CONSTRAINTS = (
    "A, B, zero not collinear",
    "B between A and C",
    "zero between C and D",
    "N between A and zero, or N = zero",
)


class DiagramError(ValueError):
    def __init__(self, violated: list[str]):
        super().__init__("invalid diagram: " + "; ".join(violated))
        self.violated = violated


class InternalConsistencyError(AssertionError):
    """A construction that is provably sound produced a bad result."""


@dataclass(frozen=True)
class Diagram:
    A: RatPoint
    B: RatPoint
    C: RatPoint
    D: RatPoint
    zero: RatPoint
    N: RatPoint

    @property
    def frame(self) -> tuple[RatPoint, ...]:
        return (self.A, self.B, self.C, self.D, self.zero)


@dataclass(frozen=True)
class SuccessorStep:
    input: Diagram
    d_prime: RatPoint
    output: Diagram


def diagram_violations(A, B, C, D, zero, N) -> list[str]:
    checks = (
        not collinear(A, B, zero),
        between(A, B, C),
        between(C, zero, D),
        N == zero or between(A, N, zero),
    )
    return [name for name, ok in zip(CONSTRAINTS, checks) if not ok]


def make_diagram(A, B, C, D, zero, N) -> Diagram:
    bad = diagram_violations(A, B, C, D, zero, N)
    if bad:
        raise DiagramError(bad)
    return Diagram(A, B, C, D, zero, N)


def _meet(p1, p2, q1, q2, what: str) -> RatPoint:
    x = intersect(line_through(p1, p2), line_through(q1, q2))
    if x is None:
        raise InternalConsistencyError(f"{what}: lines are parallel")
    return x


def successor(d: Diagram) -> SuccessorStep:
    A, B, C, D, zero, N = d.A, d.B, d.C, d.D, d.zero, d.N
    d_prime = _meet(C, N, A, D, "D' = CN meet AD")
    s = _meet(B, d_prime, A, zero, "S = BD' meet A0")

    problems = []
    if not collinear(C, d_prime, N):
        problems.append("C, D', N not collinear")
    if not collinear(B, d_prime, s):
        problems.append("B, D', S not collinear")
    if not collinear(A, D, d_prime):
        problems.append("A, D, D' not collinear")
    if not between(A, s, zero):
        problems.append("S not between A and zero")
    if N != zero and not between(A, s, N):
        problems.append("S not between A and N")
    bad = diagram_violations(A, B, C, D, zero, s)
    if problems or bad:
        raise InternalConsistencyError("successor step broke: " + "; ".join(problems + bad))
    return SuccessorStep(d, d_prime, replace(d, N=s))


def trace(d: Diagram, steps: int) -> list[SuccessorStep]:
    out = []
    for _ in range(steps):
        step = successor(d)
        out.append(step)
        d = step.output
    return out


def nat_points(d: Diagram, n: int) -> list[RatPoint]:
    """The orbit ``[N_0, N_1, ..., N_n]`` of a fresh diagram."""
    if d.N != d.zero:
        raise ValueError("nat_point needs a diagram with N = zero")
    if n < 0:
        raise ValueError("n must be nonnegative")
    pts = [d.N]
    for _ in range(n):
        d = successor(d).output
        pts.append(d.N)
    return pts


def nat_point(d: Diagram, n: int) -> RatPoint:
    return nat_points(d, n)[-1]


def verify_injective(d: Diagram, n: int) -> bool:
    """Check the first ``n`` successors are pairwise distinct, nested
    towards ``A``, and never return to ``zero``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    pts = nat_points(d, n)
    if len(set(pts)) != len(pts):
        return False
    if any(p == d.zero for p in pts[1:]):
        return False
    return all(between(d.A, pts[j], pts[i])
               for i in range(len(pts)) for j in range(i + 1, len(pts)))


def reference_seed() -> Diagram:
    P = RatPoint
    return make_diagram(P(0, 0), P(1, 1), P(2, 2), P(0, -2), P(1, 0), P(1, 0))


def random_seed(rng: random.Random, bound: int = 1000) -> Diagram:
    """A random valid diagram with ``N = zero``."""
    A = random_point(rng, bound)
    B = random_point(rng, bound)
    while B == A:
        B = random_point(rng, bound)
    # C beyond B on ray AB, D beyond zero on ray C zero
    t = 1 + abs(random_rational(rng, bound)) + Fraction(1, rng.randint(1, bound))
    C = A + (B - A).scale(t)
    zero = random_point(rng, bound)
    while collinear(A, B, zero):
        zero = random_point(rng, bound)
    u = abs(random_rational(rng, bound)) + Fraction(1, rng.randint(1, bound))
    D = zero + (zero - C).scale(u)
    return make_diagram(A, B, C, D, zero, zero)


_FIELDS = ("A", "B", "C", "D", "zero", "N")


def parse_diagram(text: str) -> Diagram:
    """Parse ``A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)``.

    ``N`` may be omitted and then defaults to ``zero``.
    """
    found: dict[str, RatPoint] = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or key not in _FIELDS:
            raise ValueError(f"bad diagram entry {part.strip()!r}; expected one of {', '.join(_FIELDS)}")
        if key in found:
            raise ValueError(f"diagram point {key} given twice")
        found[key] = parse_point(val)
    found.setdefault("N", found.get("zero"))
    missing = [k for k in _FIELDS if found.get(k) is None]
    if missing:
        raise ValueError("diagram is missing " + ", ".join(missing))
    return make_diagram(*(found[k] for k in _FIELDS))


def format_diagram(d: Diagram) -> str:
    return ";".join(f"{k}={format_point(getattr(d, k))}" for k in _FIELDS)

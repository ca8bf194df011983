"""Exact analytic model of the plane over the rationals.

Points and lines carry :class:`fractions.Fraction` coordinates, so every
predicate here is decided exactly.  The module provides incidence,
betweenness, intersection, and constructive witnesses for segment
extension, the interior point of a segment, and Pasch's axiom.
"""
from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational", "RatPoint", "RatLine", "DegenerateInputError",
    "PaschSide", "PaschResult", "PaschViolation",
    "parse_rational", "parse_point", "format_rational", "format_point",
    "line_through", "intersect", "collinear", "between", "extend",
    "theorem3_point", "pasch_witness", "side_value", "open_segment_crossing",
    "random_rational", "random_point", "random_collinear_triple",
]


class DegenerateInputError(ValueError):
    """Raised when a construction's precondition does not hold."""


_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_POINT_RE = re.compile(r"^\s*\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``.  Decimal notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _as_fraction(v: RationalLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"inexact or unsupported coordinate type: {type(v).__name__}")


@dataclass(frozen=True)
class RatPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))

    def __add__(self, other: RatPoint) -> RatPoint:
        return RatPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: RatPoint) -> RatPoint:
        return RatPoint(self.x - other.x, self.y - other.y)

    def scale(self, t: Fraction) -> RatPoint:
        return RatPoint(self.x * t, self.y * t)

    def __str__(self) -> str:
        return format_point(self)


def parse_point(text: str) -> RatPoint:
    m = _POINT_RE.match(text)
    if m is None:
        raise ValueError(f"not a point literal: {text!r}")
    return RatPoint(parse_rational(m.group(1)), parse_rational(m.group(2)))


def format_point(p: RatPoint) -> str:
    return f"({format_rational(p.x)},{format_rational(p.y)})"


@dataclass(frozen=True)
class RatLine:
    """The locus ``a*x + b*y + c = 0``.

    Construct through :meth:`from_coefficients`, which rescales so that the
    first nonzero of ``(a, b)`` is 1; two equal loci then compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (_as_fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise DegenerateInputError("line needs (a, b) != (0, 0)")
        lead = a if a != 0 else b
        if lead != 1:
            raise ValueError("RatLine is not normalized; use RatLine.from_coefficients")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_coefficients(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> RatLine:
        a, b, c = _as_fraction(a), _as_fraction(b), _as_fraction(c)
        if a == 0 and b == 0:
            raise DegenerateInputError("line needs (a, b) != (0, 0)")
        lead = a if a != 0 else b
        return cls(a / lead, b / lead, c / lead)

    def value(self, p: RatPoint) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: RatPoint) -> bool:
        return self.value(p) == 0


def line_through(p: RatPoint, q: RatPoint) -> RatLine:
    if p == q:
        raise DegenerateInputError(f"no unique line through the single point {p}")
    return RatLine.from_coefficients(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def intersect(l1: RatLine, l2: RatLine) -> Optional[RatPoint]:
    """Common point of two lines, or None when parallel or identical."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return RatPoint(x, y)


def _cross(u: RatPoint, v: RatPoint) -> Fraction:
    return u.x * v.y - u.y * v.x


def collinear(p: RatPoint, q: RatPoint, r: RatPoint) -> bool:
    return _cross(q - p, r - p) == 0


def between(a: RatPoint, b: RatPoint, c: RatPoint) -> bool:
    """True iff ``b`` lies strictly between ``a`` and ``c``."""
    if a == b or b == c or a == c:
        return False
    if not collinear(a, b, c):
        return False
    d = c - a
    e = b - a
    t = e.x / d.x if d.x != 0 else e.y / d.y
    return 0 < t < 1


def extend(a: RatPoint, c: RatPoint) -> RatPoint:
    """A point beyond ``c`` on ray ``ac``: the reflection of ``a`` through ``c``."""
    if a == c:
        raise DegenerateInputError("cannot extend a segment of zero length")
    return c + (c - a)


def theorem3_point(a: RatPoint, c: RatPoint, e: RatPoint) -> RatPoint:
    """Construct a point strictly between ``a`` and ``c`` using only
    extension and intersection.

    ``e`` is any point off line ``ac``.  We extend ``ae`` beyond ``e`` to
    ``f``, extend ``fc`` beyond ``c`` to ``g``, and return where ``eg``
    crosses ``ac``.
    """
    if a == c:
        raise DegenerateInputError("endpoints coincide")
    if collinear(a, c, e):
        raise DegenerateInputError(f"auxiliary point {e} lies on the line through {a} and {c}")
    f = extend(a, e)
    g = extend(f, c)
    d = intersect(line_through(e, g), line_through(a, c))
    if d is None or not between(a, d, c):
        raise AssertionError(f"interior-point construction failed for {a}, {c}, {e}")
    return d


class PaschSide(enum.Enum):
    CROSSES_AC = "crosses_AC"
    CROSSES_BC = "crosses_BC"
    NONE_APPLICABLE = "none_applicable"


@dataclass(frozen=True)
class PaschResult:
    side: PaschSide
    point: Optional[RatPoint] = None


class PaschViolation(AssertionError):
    """A line entered a triangle and never left it.  Cannot happen over Q."""


def side_value(line: RatLine, p: RatPoint) -> Fraction:
    return line.value(p)


def open_segment_crossing(line: RatLine, p: RatPoint, q: RatPoint) -> Optional[RatPoint]:
    """Point where ``line`` crosses the open segment ``pq``, if it does.

    Assumes ``line`` passes through neither endpoint.
    """
    sp, sq = line.value(p), line.value(q)
    if sp * sq >= 0:
        return None
    t = sp / (sp - sq)
    return p + (q - p).scale(t)


def pasch_witness(a: RatPoint, b: RatPoint, c: RatPoint, line: RatLine) -> PaschResult:
    if collinear(a, b, c):
        raise DegenerateInputError("triangle vertices are collinear")
    for name, v in (("A", a), ("B", b), ("C", c)):
        if line.contains(v):
            raise DegenerateInputError(f"line passes through vertex {name}")
    if open_segment_crossing(line, a, b) is None:
        return PaschResult(PaschSide.NONE_APPLICABLE)
    hit = open_segment_crossing(line, a, c)
    if hit is not None:
        return PaschResult(PaschSide.CROSSES_AC, hit)
    hit = open_segment_crossing(line, b, c)
    if hit is not None:
        return PaschResult(PaschSide.CROSSES_BC, hit)
    raise PaschViolation(f"line {line} meets AB but neither AC nor BC")


# -- seeded sampling ---------------------------------------------------------

def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(rng: random.Random, bound: int = 1000) -> RatPoint:
    return RatPoint(random_rational(rng, bound), random_rational(rng, bound))


def random_collinear_triple(rng: random.Random, bound: int = 1000) -> tuple[RatPoint, RatPoint, RatPoint]:
    """Three distinct collinear points in random order."""
    a = random_point(rng, bound)
    c = random_point(rng, bound)
    while c == a:
        c = random_point(rng, bound)
    t = random_rational(rng, bound)
    while t in (0, 1):
        t = random_rational(rng, bound)
    b = a + (c - a).scale(t)
    pts = [a, b, c]
    rng.shuffle(pts)
    return pts[0], pts[1], pts[2]

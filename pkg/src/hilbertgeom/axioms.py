"""Incidence (Group I) and linear order (Group II) axioms as executable
checks over finite structures.

The incidence axioms are taken in their tenth-edition form:

I,1  For every two points A, B there exists a line that contains each of them.
I,2  For every two points A, B there exists no more than one such line.
I,3  There exist at least two points on a line.  There exist at least three
     points that do not lie on a line.
I,4  For any three points A, B, C that do not lie on the same line there
     exists a plane that contains each of them.  Every plane contains a point.
I,5  For any three points A, B, C that do not lie on one and the same line
     there exists no more than one plane that contains each of them.
I,6  If two points A, B of a line a lie in a plane, then every point of a
     lies in that plane.
I,7  If two planes have a point A in common, they have at least one more
     point B in common.
I,8  There exist at least four points which do not lie in a plane.

"Two points" and "three points" always mean distinct points.  Every check is
exhaustive enumeration; a failing report names a violating tuple.

The order axioms are checked on a single line, given betweenness as an
explicit set of ordered triples:

II,1  If B lies between A and C, then A, B, C are distinct and B also lies
      between C and A.
II,2  For two points A and C there is a point B with C between A and B.
II,3  Of any three points, no more than one lies between the other two.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .structures import FiniteIncidenceStructure, MalformedStructureError, ModelParseError

__all__ = [
    "Group", "AxiomId", "Verdict", "AxiomReport",
    "check_group_i", "check_group_ii_linear", "confirm_witness",
    "all_hold", "parse_betweenness", "find_linear_order_models", "LinearOrderSearch",
]


class Group(enum.Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class AxiomId:
    group: Group
    index: int

    def __post_init__(self):
        top = 8 if self.group is Group.I else 4
        if not 1 <= self.index <= top:
            raise ValueError(f"no axiom {self.group.value},{self.index}")

    def __str__(self) -> str:
        return f"{self.group.value},{self.index}"


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class AxiomReport:
    axiom: AxiomId
    verdict: Verdict
    witness: Optional[tuple[str, ...]] = None
    detail: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.FAILS and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def __str__(self) -> str:
        s = f"{self.axiom} {self.verdict.value}"
        if self.witness is not None:
            s += " witness=(" + ", ".join(self.witness) + ")"
        if self.detail:
            s += f"  # {self.detail}"
        return s


def all_hold(reports: Iterable[AxiomReport]) -> bool:
    return all(r.verdict is not Verdict.FAILS for r in reports)


# -- Group I -------------------------------------------------------------------

class _Incidence:
    """Lookup tables over one structure."""

    def __init__(self, s: FiniteIncidenceStructure):
        self.s = s
        self.on_line = {l: set() for l in s.lines}
        self.on_plane = {a: set() for a in s.planes}
        for p, l in s.on_line:
            self.on_line[l].add(p)
        for p, a in s.on_plane:
            self.on_plane[a].add(p)

    def lines_through(self, *pts: str) -> list[str]:
        return [l for l in self.s.lines if all(p in self.on_line[l] for p in pts)]

    def planes_through(self, *pts: str) -> list[str]:
        return [a for a in self.s.planes if all(p in self.on_plane[a] for p in pts)]

    def collinear(self, *pts: str) -> bool:
        return bool(self.lines_through(*pts))

    def noncollinear_triples(self):
        for t in itertools.combinations(self.s.points, 3):
            if not self.collinear(*t):
                yield t


def _fail(ax, witness, detail):
    return AxiomReport(ax, Verdict.FAILS, tuple(witness), detail)


def _i1(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 1)
    pairs = list(itertools.combinations(inc.s.points, 2))
    for p, q in pairs:
        if not inc.lines_through(p, q):
            return _fail(ax, (p, q), f"no line contains {p} and {q}")
    return AxiomReport(ax, Verdict.HOLDS if pairs else Verdict.VACUOUS)


def _i2(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 2)
    pairs = list(itertools.combinations(inc.s.points, 2))
    for p, q in pairs:
        ls = inc.lines_through(p, q)
        if len(ls) > 1:
            return _fail(ax, (p, q, ls[0], ls[1]), f"{p} and {q} lie on two lines")
    return AxiomReport(ax, Verdict.HOLDS if pairs else Verdict.VACUOUS)


def _i3(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 3)
    for l in inc.s.lines:
        if len(inc.on_line[l]) < 2:
            return _fail(ax, (l,), f"line {l} has fewer than two points")
    if next(inc.noncollinear_triples(), None) is None:
        return _fail(ax, (), "no three non-collinear points exist")
    return AxiomReport(ax, Verdict.HOLDS)


def _i4(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 4)
    nonvacuous = bool(inc.s.planes)
    for t in inc.noncollinear_triples():
        nonvacuous = True
        if not inc.planes_through(*t):
            return _fail(ax, t, "no plane contains these non-collinear points")
    for a in inc.s.planes:
        if not inc.on_plane[a]:
            return _fail(ax, (a,), f"plane {a} contains no point")
    return AxiomReport(ax, Verdict.HOLDS if nonvacuous else Verdict.VACUOUS)


def _i5(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 5)
    nonvacuous = False
    for t in inc.noncollinear_triples():
        nonvacuous = True
        ps = inc.planes_through(*t)
        if len(ps) > 1:
            return _fail(ax, (*t, ps[0], ps[1]), "two planes contain these non-collinear points")
    return AxiomReport(ax, Verdict.HOLDS if nonvacuous else Verdict.VACUOUS)


def _i6(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 6)
    s = inc.s
    nonvacuous = False
    for l in s.lines:
        on_l = [p for p in s.points if p in inc.on_line[l]]
        for a in s.planes:
            shared = [p for p in on_l if p in inc.on_plane[a]]
            if len(shared) < 2:
                continue
            nonvacuous = True
            for p in on_l:
                if p not in inc.on_plane[a]:
                    return _fail(ax, (l, a, shared[0], shared[1], p),
                                 f"{shared[0]}, {shared[1]} of {l} lie in {a} but {p} does not")
    return AxiomReport(ax, Verdict.HOLDS if nonvacuous else Verdict.VACUOUS)


def _i7(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 7)
    s = inc.s
    nonvacuous = False
    for a, b in itertools.combinations(s.planes, 2):
        common = [p for p in s.points if p in inc.on_plane[a] and p in inc.on_plane[b]]
        if not common:
            continue
        nonvacuous = True
        if len(common) == 1:
            return _fail(ax, (a, b, common[0]), f"{a} and {b} share only {common[0]}")
    return AxiomReport(ax, Verdict.HOLDS if nonvacuous else Verdict.VACUOUS)


def _i8(inc: _Incidence) -> AxiomReport:
    ax = AxiomId(Group.I, 8)
    for q in itertools.combinations(inc.s.points, 4):
        if not inc.planes_through(*q):
            return AxiomReport(ax, Verdict.HOLDS)
    return _fail(ax, (), "every four points lie in a common plane")


_GROUP_I = (_i1, _i2, _i3, _i4, _i5, _i6, _i7, _i8)


def check_group_i(s: FiniteIncidenceStructure) -> list[AxiomReport]:
    """One report per incidence axiom, I,1 through I,8."""
    s.validate()
    inc = _Incidence(s)
    return [check(inc) for check in _GROUP_I]


def confirm_witness(s: FiniteIncidenceStructure, report: AxiomReport) -> bool:
    """Re-evaluate a failing Group I report's witness against the axiom body.

    Deliberately independent of the checkers above: it reads incidence
    straight from the structure's pair sets.
    """
    if report.verdict is not Verdict.FAILS or report.axiom.group is not Group.I:
        return False
    w = report.witness
    names = set(s.points) | set(s.lines) | set(s.planes)
    if not all(n in names for n in w):
        return False
    L = lambda p, l: (p, l) in s.on_line
    P = lambda p, a: (p, a) in s.on_plane
    coll = lambda *ps: any(all(L(p, l) for p in ps) for l in s.lines)
    distinct = lambda *xs: len(set(xs)) == len(xs)
    i = report.axiom.index
    if i == 1:
        p, q = w
        return distinct(p, q) and not coll(p, q)
    if i == 2:
        p, q, l, m = w
        return distinct(p, q) and l != m and L(p, l) and L(q, l) and L(p, m) and L(q, m)
    if i == 3:
        if len(w) == 1:
            return w[0] in s.lines and sum(L(p, w[0]) for p in s.points) < 2
        return not any(not coll(*t) for t in itertools.combinations(s.points, 3))
    if i == 4:
        if len(w) == 1:
            return w[0] in s.planes and not any(P(p, w[0]) for p in s.points)
        return distinct(*w) and not coll(*w) and not any(all(P(p, a) for p in w) for a in s.planes)
    if i == 5:
        p, q, r, a, b = w
        return (distinct(p, q, r) and not coll(p, q, r) and a != b
                and all(P(x, a) and P(x, b) for x in (p, q, r)))
    if i == 6:
        l, a, p, q, r = w
        return (distinct(p, q) and all(L(x, l) for x in (p, q, r))
                and P(p, a) and P(q, a) and not P(r, a))
    if i == 7:
        a, b, p = w
        common = [x for x in s.points if P(x, a) and P(x, b)]
        return a != b and common == [p]
    if i == 8:
        return not any(not any(all(P(p, a) for p in q) for a in s.planes)
                       for q in itertools.combinations(s.points, 4))
    return False


# -- Group II on one line ------------------------------------------------------

def check_group_ii_linear(points: Sequence[str], between: Iterable[tuple[str, str, str]]) -> list[AxiomReport]:
    """Reports for II,1, II,2 and II,3 of an explicit betweenness relation
    on points that all lie on one line."""
    points = tuple(points)
    known = set(points)
    if len(known) != len(points):
        raise MalformedStructureError("duplicate point name")
    rel = set()
    for t in between:
        t = tuple(t)
        if len(t) != 3:
            raise MalformedStructureError(f"betweenness triple of wrong arity: {t}")
        for p in t:
            if p not in known:
                raise MalformedStructureError(f"betweenness triple references unknown point {p!r}")
        rel.add(t)
    order = {p: i for i, p in enumerate(points)}
    ordered_rel = sorted(rel, key=lambda t: tuple(order[p] for p in t))

    ax1 = AxiomId(Group.II, 1)
    r1 = AxiomReport(ax1, Verdict.HOLDS if rel else Verdict.VACUOUS)
    for a, b, c in ordered_rel:
        if len({a, b, c}) < 3:
            r1 = _fail(ax1, (a, b, c), "betweenness among non-distinct points")
            break
        if (c, b, a) not in rel:
            r1 = _fail(ax1, (a, b, c), f"{b} between {a} and {c} but not between {c} and {a}")
            break

    ax2 = AxiomId(Group.II, 2)
    pairs = list(itertools.permutations(points, 2))
    r2 = AxiomReport(ax2, Verdict.HOLDS if pairs else Verdict.VACUOUS)
    for a, c in pairs:
        if not any((a, c, b) in rel for b in points):
            r2 = _fail(ax2, (a, c), f"no point lies beyond {c} on the ray from {a}")
            break

    ax3 = AxiomId(Group.II, 3)
    triples = list(itertools.combinations(points, 3))
    r3 = AxiomReport(ax3, Verdict.HOLDS if triples else Verdict.VACUOUS)
    for t in triples:
        middles = [m for m in t
                   if any((x, m, y) in rel for x, y in itertools.permutations([p for p in t if p != m]))]
        if len(middles) > 1:
            r3 = _fail(ax3, t, f"{middles[0]} and {middles[1]} both lie between the others")
            break
    return [r1, r2, r3]


def parse_betweenness(text: str) -> tuple[tuple[str, ...], list[tuple[str, str, str]]]:
    """Parse ``points: A B C`` followed by ``between: A B C`` lines."""
    points: Optional[tuple[str, ...]] = None
    triples: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        names = rest.split()
        if not sep:
            raise ModelParseError(lineno, f"expected 'directive: ...', got {line!r}")
        if key == "points":
            if points is not None:
                raise ModelParseError(lineno, "duplicate 'points' header")
            if triples:
                raise ModelParseError(lineno, "'points' header after between lines")
            if len(set(names)) != len(names):
                raise ModelParseError(lineno, "duplicate point name")
            points = tuple(names)
        elif key == "between":
            if len(names) != 3:
                raise ModelParseError(lineno, "'between' takes exactly three names")
            for n in names:
                if points is None or n not in points:
                    raise ModelParseError(lineno, f"dangling reference: {n!r} is not a declared point")
            triples.append((names[0], names[1], names[2]))
        else:
            raise ModelParseError(lineno, f"unknown directive {key!r}")
    return points or (), triples


@dataclass(frozen=True)
class LinearOrderSearch:
    n_points: int
    models: tuple[frozenset, ...]
    relations_covered: int
    nodes_visited: int

    @property
    def total_relations(self) -> int:
        k = self.n_points * (self.n_points - 1) * (self.n_points - 2)
        return 2 ** k


def find_linear_order_models(n: int) -> LinearOrderSearch:
    """Search every betweenness relation on ``n`` collinear points for one
    satisfying II,1, II,2 and II,3 together.

    Relations are subsets of the ordered triples of distinct points.  The
    search decides triples one at a time and abandons a branch as soon as
    the decided triples already violate II,1 or II,3; ``relations_covered``
    counts every relation either reached or discarded with its branch, and
    equals ``2**(n*(n-1)*(n-2))`` when the search is exhaustive.
    """
    pts = list(range(n))
    triples: list[tuple[int, int, int]] = []
    for a, b, c in itertools.permutations(pts, 3):
        if a < c:
            triples += [(a, b, c), (c, b, a)]   # mirror images adjacent
    total = len(triples)
    index = {t: i for i, t in enumerate(triples)}
    value: list[Optional[bool]] = [None] * total
    models = []
    covered = 0
    nodes = 0

    def violates(i: int) -> bool:
        a, b, c = triples[i]
        mirror = value[index[(c, b, a)]]
        if mirror is not None and mirror != value[i]:
            return True
        if value[i]:
            for m in (a, c):
                x, y = [p for p in (a, b, c) if p != m]
                if value[index[(x, m, y)]] or value[index[(y, m, x)]]:
                    return True
        return False

    def extension_holds() -> bool:
        return all(any(value[index[(a, c, b)]] for b in pts if b not in (a, c))
                   for a, c in itertools.permutations(pts, 2))

    def go(i: int) -> None:
        nonlocal covered, nodes
        nodes += 1
        if i == total:
            covered += 1
            if extension_holds():
                models.append(frozenset(t for t, v in zip(triples, value) if v))
            return
        for choice in (False, True):
            value[i] = choice
            if violates(i):
                covered += 2 ** (total - i - 1)
            else:
                go(i + 1)
        value[i] = None

    go(0)
    return LinearOrderSearch(n, tuple(models), covered, nodes)

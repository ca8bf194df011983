"""Bounded exhaustive search for finite models of the incidence axioms.

Candidates are extensional: a line is a set of at least two points and a
plane a set of at least three, no two lines (or planes) with the same point
set.  Points are bitmask positions, so a candidate on ``p`` points is a pair
of sorted mask tuples and a relabelling is a permutation of bit positions.
Two candidates are isomorphic iff a point permutation carries one encoding
onto the other; the lexicographically least image is the canonical form.
"""
from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .axioms import Verdict, check_group_i
from .structures import FiniteIncidenceStructure

__all__ = [
    "SearchBounds", "SearchOutcome", "BoundsError", "HARD_CAP",
    "enumerate_candidates", "find_minimum", "isomorphic",
    "structure_from_masks", "masks_from_structure", "canonical_masks",
]

HARD_CAP = (5, 8, 6)

POINT_NAMES = "ABCDE"
LINE_NAMES = "abcdefgh"
PLANE_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    max_points: int
    max_lines: int
    max_planes: int

    def __post_init__(self):
        for name, value, cap in zip(("max_points", "max_lines", "max_planes"),
                                    (self.max_points, self.max_lines, self.max_planes), HARD_CAP):
            if value < 0:
                raise BoundsError(f"{name} must be nonnegative, got {value}")
            if value > cap:
                raise BoundsError(
                    f"{name}={value} exceeds the hard cap of {cap}; "
                    f"the search space beyond (5, 8, 6) is not desk-scale")


@dataclass(frozen=True)
class SearchOutcome:
    satisfiable: bool
    minimal_models: tuple[FiniteIncidenceStructure, ...]
    structures_examined: int
    elapsed: float
    models_found: int = 0


# -- mask encoding ---------------------------------------------------------------

def _popcount(m: int) -> int:
    return bin(m).count("1")


@lru_cache(maxsize=None)
def _subsets(p: int, min_size: int) -> tuple[int, ...]:
    return tuple(m for m in range(1 << p) if _popcount(m) >= min_size)


@lru_cache(maxsize=None)
def _perm_tables(p: int) -> tuple[tuple[int, ...], ...]:
    """For every permutation of ``p`` points, the induced map on masks."""
    tables = []
    for perm in itertools.permutations(range(p)):
        table = []
        for m in range(1 << p):
            img = 0
            for i in range(p):
                if m >> i & 1:
                    img |= 1 << perm[i]
            table.append(img)
        tables.append(tuple(table))
    return tuple(tables)


def _image(table, masks) -> tuple[int, ...]:
    return tuple(sorted(table[m] for m in masks))


def canonical_masks(p: int, lines: tuple[int, ...], planes: tuple[int, ...]):
    return min((_image(t, lines), _image(t, planes)) for t in _perm_tables(p))


def structure_from_masks(p: int, lines, planes) -> FiniteIncidenceStructure:
    pts = tuple(POINT_NAMES[:p])
    lns = tuple(LINE_NAMES[:len(lines)])
    pls = tuple(PLANE_NAMES[:len(planes)])
    return FiniteIncidenceStructure(
        pts, lns, pls,
        frozenset((pts[i], ln) for ln, m in zip(lns, lines) for i in range(p) if m >> i & 1),
        frozenset((pts[i], pl) for pl, m in zip(pls, planes) for i in range(p) if m >> i & 1),
    )


def masks_from_structure(s: FiniteIncidenceStructure):
    """Mask encoding of a structure; None if it is not extensional."""
    bit = {q: 1 << i for i, q in enumerate(s.points)}
    lines = [sum(bit[q] for q in s.points_on_line(l)) for l in s.lines]
    planes = [sum(bit[q] for q in s.points_on_plane(a)) for a in s.planes]
    if (len(set(lines)) != len(lines) or len(set(planes)) != len(planes)
            or any(_popcount(m) < 2 for m in lines) or any(_popcount(m) < 3 for m in planes)):
        return None
    return len(s.points), tuple(sorted(lines)), tuple(sorted(planes))


# -- candidate stream ------------------------------------------------------------

def enumerate_candidates(bounds: SearchBounds) -> Iterator[FiniteIncidenceStructure]:
    """Every isomorphism class of extensional candidate within ``bounds``,
    each exactly once, as its canonical representative."""
    for p in range(bounds.max_points + 1):
        tables = _perm_tables(p)
        line_pool = _subsets(p, 2)
        plane_pool = _subsets(p, 3)
        for k in range(min(bounds.max_lines, len(line_pool)) + 1):
            for lines in itertools.combinations(line_pool, k):
                images = [(_image(t, lines), t) for t in tables]
                if min(img for img, _ in images) != lines:
                    continue
                stabilizer = [t for img, t in images if img == lines]
                for j in range(min(bounds.max_planes, len(plane_pool)) + 1):
                    for planes in itertools.combinations(plane_pool, j):
                        if all(_image(t, planes) >= planes for t in stabilizer):
                            yield structure_from_masks(p, lines, planes)


# -- pruned search -------------------------------------------------------------

def _pairs_of(m: int, p: int) -> int:
    """Bitmask over the p*p grid of ordered point pairs (i<j) inside m."""
    out = 0
    for i in range(p):
        if m >> i & 1:
            for j in range(i + 1, p):
                if m >> j & 1:
                    out |= 1 << (i * p + j)
    return out


def _linear_spaces(p: int, max_lines: int, first: Optional[int]) -> Iterator[tuple[int, ...]]:
    """Line sets covering every pair of points exactly once.

    A line set covering some pair twice violates uniqueness of the line
    through two points, and so does every superset; such branches are cut.
    ``first`` restricts the smallest line (index into the pool) for
    partitioning; None means the empty line set only.
    """
    pool = _subsets(p, 2)
    cover = [_pairs_of(m, p) for m in pool]
    full = _pairs_of((1 << p) - 1, p)
    if first is None:
        if full == 0:
            yield ()
        return
    if max_lines == 0:
        return

    def go(start, chosen, covered):
        if covered == full:
            yield tuple(chosen)
            return
        if len(chosen) == max_lines:
            return
        for i in range(start, len(pool)):
            if cover[i] & covered:
                continue
            chosen.append(pool[i])
            yield from go(i + 1, chosen, covered | cover[i])
            chosen.pop()

    yield from go(first + 1, [pool[first]], cover[first])


def _plane_sets(p: int, lines: tuple[int, ...], max_planes: int) -> Iterator[tuple[int, ...]]:
    """Plane sets compatible with ``lines`` that put every non-collinear
    triple in exactly one plane.

    A plane meeting a line in two points must contain the whole line, and
    two planes through a common non-collinear triple violate uniqueness;
    both cuts are monotone, so pruned branches hold no models.
    """
    triples = [m for m in _subsets(p, 3) if _popcount(m) == 3]
    noncollinear = [t for t in triples if not any(t & l == t for l in lines)]
    tri_index = {t: i for i, t in enumerate(noncollinear)}
    need = (1 << len(noncollinear)) - 1

    def closed(a):
        return all(_popcount(a & l) < 2 or a & l == l for l in lines)

    pool = []
    for a in _subsets(p, 3):
        if not closed(a):
            continue
        tmask = 0
        for t in noncollinear:
            if a & t == t:
                tmask |= 1 << tri_index[t]
        pool.append((a, tmask))

    def go(start, chosen, covered):
        if covered == need:
            yield tuple(chosen)
        if len(chosen) == max_planes:
            return
        for i in range(start, len(pool)):
            a, tmask = pool[i]
            if tmask & covered:
                continue
            chosen.append(a)
            yield from go(i + 1, chosen, covered | tmask)
            chosen.pop()

    yield from go(0, [], 0)


def _search_partition(p: int, first: Optional[int], bounds: SearchBounds):
    found = []
    examined = 0
    for lines in _linear_spaces(p, bounds.max_lines, first):
        for planes in _plane_sets(p, lines, bounds.max_planes):
            examined += 1
            s = structure_from_masks(p, lines, planes)
            if all(r.verdict is not Verdict.FAILS for r in check_group_i(s)):
                found.append(canonical_masks(p, lines, planes) + (p,))
    return found, examined


def _partitions(bounds: SearchBounds):
    for p in range(bounds.max_points + 1):
        yield p, None
        for first in range(len(_subsets(p, 2))):
            yield p, first


def find_minimum(bounds: SearchBounds, workers: int = 1) -> SearchOutcome:
    """Search for models of the incidence axioms within ``bounds``.

    Every structure emitted is rebuilt from its canonical encoding and
    re-checked against all eight axioms.  Output is sorted canonically and
    does not depend on ``workers``.
    """
    start = time.perf_counter()
    parts = list(_partitions(bounds))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_partition, *zip(*[(p, f, bounds) for p, f in parts])))
    else:
        results = [_search_partition(p, f, bounds) for p, f in parts]

    examined = sum(n for _, n in results)
    classes = sorted({key for found, _ in results for key in found},
                     key=lambda k: (k[2] + len(k[0]) + len(k[1]), k[2], k))
    models = []
    for lines, planes, p in classes:
        s = structure_from_masks(p, lines, planes)
        if not all(r.verdict is not Verdict.FAILS for r in check_group_i(s)):
            raise AssertionError(f"search produced a non-model: {s}")
        models.append(s)
    if models:
        smallest = min(m.size for m in models)
        minimal = tuple(m for m in models if m.size == smallest)
    else:
        minimal = ()
    return SearchOutcome(bool(models), minimal, examined,
                         time.perf_counter() - start, len(models))


# -- isomorphism -----------------------------------------------------------------

def isomorphic(s1: FiniteIncidenceStructure, s2: FiniteIncidenceStructure) -> bool:
    """Whether sort-preserving bijections carry incidence onto incidence.

    Backtracks over point bijections, pairing points only with points of the
    same (line degree, plane degree).  A point bijection extends to lines and
    planes iff it maps the multiset of line point-sets (and plane point-sets)
    onto the other's.
    """
    if (len(s1.points), len(s1.lines), len(s1.planes)) != (len(s2.points), len(s2.lines), len(s2.planes)):
        return False
    if (len(s1.on_line), len(s1.on_plane)) != (len(s2.on_line), len(s2.on_plane)):
        return False

    def degrees(s):
        dl, dp = Counter(p for p, _ in s.on_line), Counter(p for p, _ in s.on_plane)
        return {p: (dl[p], dp[p]) for p in s.points}

    d1, d2 = degrees(s1), degrees(s2)
    if sorted(d1.values()) != sorted(d2.values()):
        return False

    lines1 = [s1.points_on_line(l) for l in s1.lines]
    planes1 = [s1.points_on_plane(a) for a in s1.planes]
    target_lines = Counter(s2.points_on_line(l) for l in s2.lines)
    target_planes = Counter(s2.points_on_plane(a) for a in s2.planes)
    src = sorted(s1.points, key=lambda p: d1[p])
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent() -> bool:
        # every fully mapped line/plane must land on an existing point-set
        for sets, target in ((lines1, target_lines), (planes1, target_planes)):
            for ps in sets:
                if all(p in mapping for p in ps):
                    if frozenset(mapping[p] for p in ps) not in target:
                        return False
        return True

    def go(i: int) -> bool:
        if i == len(src):
            return (Counter(frozenset(mapping[p] for p in ps) for ps in lines1) == target_lines
                    and Counter(frozenset(mapping[p] for p in ps) for ps in planes1) == target_planes)
        p = src[i]
        for q in s2.points:
            if q in used or d2[q] != d1[p]:
                continue
            mapping[p] = q
            used.add(q)
            if consistent() and go(i + 1):
                return True
            del mapping[p]
            used.discard(q)
        return False

    return go(0)

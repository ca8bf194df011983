import itertools
import random
from math import comb

import pytest

from hilbertgeom.axioms import Verdict, all_hold, check_group_i
from hilbertgeom.finder import (
    BoundsError, SearchBounds, canonical_masks, enumerate_candidates, find_minimum,
    isomorphic, masks_from_structure, structure_from_masks,
)
from hilbertgeom.structures import FiniteIncidenceStructure, tetrahedron


def naive_candidates(bounds):
    """All labelled extensional candidates, no symmetry breaking, no pruning."""
    for p in range(bounds.max_points + 1):
        subsets = [m for m in range(1 << p)]
        lines_pool = [m for m in subsets if bin(m).count("1") >= 2]
        planes_pool = [m for m in subsets if bin(m).count("1") >= 3]
        for k in range(bounds.max_lines + 1):
            for lines in itertools.combinations(lines_pool, k):
                for j in range(bounds.max_planes + 1):
                    for planes in itertools.combinations(planes_pool, j):
                        yield structure_from_masks(p, lines, planes)


def dedup(structures):
    reps = []
    for s in structures:
        if not any(isomorphic(s, r) for r in reps):
            reps.append(s)
    return reps


def test_bounds_caps():
    SearchBounds(5, 8, 6)
    for bad in [(6, 0, 0), (0, 9, 0), (0, 0, 7), (-1, 0, 0)]:
        with pytest.raises(BoundsError):
            SearchBounds(*bad)


def test_zero_bounds_yield_empty_structure():
    assert list(enumerate_candidates(SearchBounds(0, 0, 0))) == [FiniteIncidenceStructure()]


def test_small_count_closed_form():
    # p points have 2^p - p - 1 candidate lines; choose at most one
    expected = sum(comb(2 ** p - p - 1, 0) + comb(2 ** p - p - 1, 1) for p in range(3))
    got = list(enumerate_candidates(SearchBounds(2, 1, 0)))
    assert len(got) == expected == 4


@pytest.mark.parametrize("bounds", [SearchBounds(3, 3, 1), SearchBounds(3, 4, 1), SearchBounds(4, 2, 1)])
def test_enumeration_is_one_per_isomorphism_class(bounds):
    got = list(enumerate_candidates(bounds))
    oracle = dedup(naive_candidates(bounds))
    assert len(got) == len(oracle)
    for s in got:
        assert sum(isomorphic(s, o) for o in oracle) == 1
    for i, s in enumerate(got):
        assert not any(isomorphic(s, t) for t in got[i + 1:])


def test_enumeration_contains_tetrahedron():
    hits = [s for s in enumerate_candidates(SearchBounds(4, 6, 4)) if isomorphic(s, tetrahedron())]
    assert len(hits) == 1


def test_pruned_search_agrees_with_filtered_enumeration():
    bounds = SearchBounds(4, 6, 4)
    models = [s for s in enumerate_candidates(bounds) if all_hold(check_group_i(s))]
    outcome = find_minimum(bounds)
    assert outcome.models_found == len(models) == 1
    assert isomorphic(models[0], outcome.minimal_models[0])


@pytest.mark.parametrize("bounds", [SearchBounds(2, l, a) for l in (0, 1, 3, 8) for a in (0, 2, 6)]
                         + [SearchBounds(3, 4, 2), SearchBounds(1, 1, 1)])
def test_small_bounds_agree_with_naive_enumerator(bounds):
    naive_sat = any(all_hold(check_group_i(s)) for s in naive_candidates(bounds))
    assert find_minimum(bounds).satisfiable == naive_sat


@pytest.mark.parametrize("bounds", [(3, 6, 4), (4, 5, 4), (4, 6, 3), (3, 5, 3), (4, 0, 4), (2, 6, 4)])
def test_dominated_bounds_unsatisfiable(bounds):
    outcome = find_minimum(SearchBounds(*bounds))
    assert not outcome.satisfiable
    assert outcome.minimal_models == ()


def test_tetrahedron_is_the_unique_minimum():
    outcome = find_minimum(SearchBounds(4, 6, 4))
    assert outcome.satisfiable
    assert len(outcome.minimal_models) == 1
    m = outcome.minimal_models[0]
    assert isomorphic(m, tetrahedron())
    assert m.size == 14
    assert all(r.verdict is Verdict.HOLDS for r in check_group_i(m))


def test_models_at_cap_all_pass_and_tetrahedron_is_smallest():
    outcome = find_minimum(SearchBounds(5, 8, 6))
    assert outcome.satisfiable
    assert [isomorphic(m, tetrahedron()) for m in outcome.minimal_models] == [True]
    assert outcome.models_found >= 1


def test_parallel_output_matches_serial():
    serial = find_minimum(SearchBounds(5, 8, 6))
    parallel = find_minimum(SearchBounds(5, 8, 6), workers=2)
    assert serial.minimal_models == parallel.minimal_models
    assert serial.models_found == parallel.models_found
    assert serial.structures_examined == parallel.structures_examined


def test_isomorphic_renaming():
    t = tetrahedron()
    renamed = t.renamed({"A": "W", "B": "X", "C": "Y", "D": "Z", "a": "l1", "alpha": "pi"})
    assert isomorphic(t, renamed)
    # also permuting which vertex is which
    perm = t.renamed({"A": "B", "B": "C", "C": "A"})
    assert isomorphic(t, perm)


def test_isomorphic_rejects_deletion():
    t = tetrahedron()
    assert not isomorphic(t, t.without(on_line=[("A", "a")]))
    assert not isomorphic(t, t.without(on_plane=[("A", "alpha")]))


def test_isomorphic_random_three_point_structures():
    rng = random.Random(99)
    pool = [m for m in range(8) if bin(m).count("1") >= 2]
    for _ in range(50):
        k1, k2 = rng.sample(range(len(pool) + 1), 2)
        s1 = structure_from_masks(3, tuple(rng.sample(pool, k1)), ())
        s2 = structure_from_masks(3, tuple(rng.sample(pool, k2)), ())
        assert not isomorphic(s1, s2)


def test_isomorphic_same_degrees_different_structure():
    # two lines through A vs a line {A,B} and {C,D}: same counts, different shape
    s1 = structure_from_masks(4, (0b0011, 0b0101), ())
    s2 = structure_from_masks(4, (0b0011, 0b1100), ())
    assert not isomorphic(s1, s2)
    assert isomorphic(s1, structure_from_masks(4, (0b0110, 0b1010), ()))


def test_mask_round_trip_and_canonical_form():
    t = tetrahedron()
    p, lines, planes = masks_from_structure(t)
    assert p == 4 and len(lines) == 6 and len(planes) == 4
    assert canonical_masks(p, lines, planes) == (lines, planes)
    s = structure_from_masks(3, (0b011, 0b011 | 0b100), ())
    assert masks_from_structure(s) is not None
    dup = FiniteIncidenceStructure(("A", "B"), ("l", "m"), (),
                                   {("A", "l"), ("B", "l"), ("A", "m"), ("B", "m")})
    assert masks_from_structure(dup) is None

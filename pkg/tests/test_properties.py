import random

from hilbertgeom.properties import SUITES, random_pasch_instance, run_suites
from hilbertgeom.rational import between, open_segment_crossing


def test_suites_clean_at_small_scale():
    results = run_suites(seed=1, samples=200)
    assert [r.name for r in results] == list(SUITES)
    assert all(r.failures == 0 for r in results)


def test_suites_are_reproducible():
    assert run_suites(seed=5, samples=30) == run_suites(seed=5, samples=30)


def test_pasch_instances_cross_ab():
    rng = random.Random(0)
    for _ in range(100):
        a, b, c, line = random_pasch_instance(rng)
        x = open_segment_crossing(line, a, b)
        assert x is not None and between(a, x, b)
        assert not any(line.contains(v) for v in (a, b, c))

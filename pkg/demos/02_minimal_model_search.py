"""
Searching for smaller models
============================

Exhaustive search over structures with at most ``p`` points, ``l`` lines
and ``a`` planes.  Shrinking any one bound below (4, 6, 4) leaves no model;
at (4, 6, 4) the tetrahedron is the only one up to isomorphism.
"""
from hilbertgeom import SearchBounds, find_minimum, isomorphic, tetrahedron

for bounds in [(3, 6, 4), (4, 5, 4), (4, 6, 3), (4, 6, 4), (5, 8, 6)]:
    outcome = find_minimum(SearchBounds(*bounds))
    print(f"bounds {bounds}: satisfiable={outcome.satisfiable} "
          f"examined={outcome.structures_examined} classes={outcome.models_found} "
          f"({outcome.elapsed * 1000:.1f} ms)")
    for m in outcome.minimal_models:
        print(f"    minimal model with {m.size} objects; tetrahedron? {isomorphic(m, tetrahedron())}")

###############################################################################
# The order axioms are different: no betweenness relation on finitely many
# points satisfies II,1-II,3, since extension always asks for one more point.

from hilbertgeom.axioms import find_linear_order_models

for n in (3, 4):
    res = find_linear_order_models(n)
    print(f"{n} points: {len(res.models)} models among {res.relations_covered} relations "
          f"({res.nodes_visited} search nodes)")

"""
The smallest model of the incidence axioms
==========================================

Four points, six lines and four planes: the vertices, edges and faces of a
tetrahedron.  We check all eight incidence axioms on it, then delete one
incidence at a time to see which axiom notices.
"""
from hilbertgeom import check_group_i, serialize_model, tetrahedron
from hilbertgeom.axioms import Verdict

t = tetrahedron()
print(serialize_model(t))

for report in check_group_i(t):
    print(report)

###############################################################################
# Knock out each point-line incidence.  The first failing axiom is reported
# together with the tuple that breaks it.

for fact in sorted(t.on_line):
    broken = t.without(on_line=[fact])
    first = next(r for r in check_group_i(broken) if r.verdict is Verdict.FAILS)
    print(f"drop {fact[0]} on {fact[1]}:  {first}")

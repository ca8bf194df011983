"""
Ordering points on a line from betweenness alone
================================================

The sort never looks at coordinates; it only asks which point lies between
which.  Of all labelings, exactly two put every point between the pairs
that straddle it.
"""
from hilbertgeom import RatPoint as P, between, order_collinear
from hilbertgeom.ordering import brute_force_labelings

pts = [P(3, 3), P(-1, -1), P(5, 5), P(0, 0), P(2, 2)]
res = order_collinear(pts)
print("labels:  ", [str(p) for p in res.labels])
print("reversed:", [str(p) for p in res.reversed])

valid = brute_force_labelings(pts, between)
print(f"{len(valid)} of 120 permutations are valid labelings")

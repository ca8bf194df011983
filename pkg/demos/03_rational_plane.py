"""
Order in the rational plane
===========================

Points with exact rational coordinates.  Betweenness, extension and Pasch's
axiom are decided exactly, so every randomized check must come back with
zero failures.
"""
from fractions import Fraction as F

from hilbertgeom import RatPoint as P, between, extend, line_through, pasch_witness, theorem3_point
from hilbertgeom.properties import run_suites

A, C, E = P(0, 0), P(1, 0), P(0, 1)
print("extend A C  ->", extend(A, C))
D = theorem3_point(A, C, E)
print("interior point of AC via E ->", D, " between:", between(A, D, C))

###############################################################################
# A line entering triangle ABC through side AB leaves through another side.

a, b, c = P(0, 0), P(2, 0), P(1, 2)
line = line_through(P(F(3, 2), 0), P(0, F(3, 2)))
print(pasch_witness(a, b, c, line))

for r in run_suites(samples=2000):
    print(f"{r.name:<26} {r.samples:>6} samples  {r.failures} failures")

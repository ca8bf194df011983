"""
A geometric successor function
==============================

A fixed frame A, B, C, D, 0 and a moving point N.  Each step draws CN to
meet AD at D', then BD' to meet A0: the meeting point is the next N.  The
sequence never repeats and never returns to 0.
"""
from hilbertgeom.successor import nat_points, reference_seed, trace, verify_injective
from hilbertgeom.render import orbit_svg

seed = reference_seed()
for n, step in enumerate(trace(seed, 6), start=1):
    print(f"n={n}  D'={step.d_prime}  N={step.output.N}")

###############################################################################
# For this frame the n-th point is (2/(n+2), 0).

pts = nat_points(seed, 50)
print("closed form holds to n=50:", all(p.x * (n + 2) == 2 and p.y == 0 for n, p in enumerate(pts)))
print("injective and never zero to depth 50:", verify_injective(seed, 50))

with open("successor_orbit.svg", "w") as fh:
    fh.write(orbit_svg(seed, trace(seed, 8)))
print("wrote successor_orbit.svg")

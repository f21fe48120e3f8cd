"""Trivial cubes, shifts, twists, and the projectivity test.

For every profile in {0,1}^n there is a trivial rank-1 cube: direction i
contributes the edge pair (I, omega_i I) or its flipped form, with pairing
scalars appearing in the quantum case.  Trivial sums are the projective
objects; the test strips rank-1 summands and applies two conclusive
negative criteria.
"""

import itertools

from factoria.cli import hypersurface_cube, square_example_cube
from factoria.cube import (direct_sum, mf0_membership, projective_test,
                           shift_1d, theta_cube, twist_cube, verify_cube)
from factoria.qring import canonical_type, commutative_ring, quantum_ring
from factoria.scalars import Field

ring = quantum_ring(2, Field(101), 5, [2, 2])
tdata = canonical_type(ring)

print("trivial cubes over the quantum plane, all profiles:")
for beta in itertools.product((0, 1), repeat=2):
    X = theta_cube(ring, tdata, beta, 1)
    verdict, _ = projective_test(X)
    print("  profile %s: verifies=%s, %s" % (beta, verify_cube(X).ok, verdict))

X11 = theta_cube(ring, tdata, (1, 1), 1)
print("\nthe (1,1) profile carries one pairing-scaled edge pair:")
print("  forward at (0,0):", X11.edge(1, (0, 0)).m[0][0],
      " wrap at (0,1):", X11.edge(1, (0, 1)).m[0][0])
print("its twist in either direction still verifies:",
      verify_cube(twist_cube(X11, 0)).ok, verify_cube(twist_cube(X11, 1)).ok)

rc = commutative_ring(1, Field(), l=[2])
tc = canonical_type(rc)
th1 = theta_cube(rc, tc, (1,), 1)
print("\nshifting the one-dimensional flipped trivial object returns the plain one:",
      shift_1d(th1).edges == theta_cube(rc, tc, (0,), 1).edges)

hs = hypersurface_cube(Field(), 2, 1)
print("\nthe pair (x, x) against x^2:", projective_test(hs)[0])
mixed = direct_sum(theta_cube(rc, tc, (0,), 1), hs)
verdict, witness = projective_test(mixed)
print("trivial + (x, x):", verdict, "with reduced ranks", witness["reduced_ranks"])

sq = square_example_cube(Field(7), ["0", "0", "1"])
print("\nthe two-variable square:", projective_test(sq)[0],
      "(total cokernel dimension 2 is not a multiple of dim B = 16)")
print("but each facet through the top vertex is projective, so membership holds:",
      mf0_membership(sq)["member"])

"""Null-homotopy certificates: which morphisms factor through trivials.

A morphism between cubes is stably zero exactly when homotopy matrices
s^v express it through the edge maps.  The solver turns that into exact
linear algebra on coefficients up to a degree bound; certificates are
re-substituted symbolically before being returned, so a returned
certificate is a proof.  Absence is conclusive only up to the bound.
"""

import random

from factoria.cli import hypersurface_cube
from factoria.cube import (direct_sum, homotopy_solve, homotopy_substitute,
                           identity_morphism, morphism_add,
                           morphism_through_theta0, morphism_through_theta1,
                           projective_test, theta_cube, verify_morphism)
from factoria.homology import cok0
from factoria.polymat import PolyMatrix, pm_sub
from factoria.qring import canonical_type, commutative_ring, random_qpoly
from factoria.scalars import Field

rc = commutative_ring(1, Field(), l=[2])
tc = canonical_type(rc)

th0 = theta_cube(rc, tc, (0,), 1)
cert = homotopy_solve(identity_morphism(th0))
print("identity on a trivial object is certified null:", cert is not None)

X = hypersurface_cube(Field(), 2, 1)     # the pair (x, x) against x^2
cert = homotopy_solve(identity_morphism(X), 6)
print("identity on (x, x): certificate up to degree 6:", cert)
print("  consistent with cok0 = one-dimensional module:", cok0(X).dim == 1,
      "and", projective_test(X)[0])

rng = random.Random(0)
Y = direct_sum(th0, X)


def rand_mat(rows, cols):
    return PolyMatrix.from_entries(
        [[random_qpoly(rc, rng, 1, 2) for _ in range(cols)] for _ in range(rows)])


f = morphism_add(
    morphism_through_theta0(Y, Y, rand_mat(Y.ranks[(1,)], 1), rand_mat(1, Y.ranks[(0,)])),
    morphism_through_theta1(Y, Y, rand_mat(Y.ranks[(0,)], 1), rand_mat(1, Y.ranks[(1,)])))
print("\na random morphism built through trivial objects verifies:",
      verify_morphism(f).ok)
cert = homotopy_solve(f)
print("certificate found:", cert is not None)
terms = homotopy_substitute(f, cert.s)
print("resubstitution reproduces the morphism exactly:",
      all(pm_sub(rc, f.components[v], terms[v]).is_zero() for v in Y.vertices()))

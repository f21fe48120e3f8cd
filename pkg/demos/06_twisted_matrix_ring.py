"""The twisted 2x2 matrix ring and its module view of 1-dim factorizations.

The product deforms matrix multiplication by one relation element w and
its automorphism s; the matrix units then satisfy E21 E12 = w E22 and
E12 E21 = w E11.  A second relation element w' induces a ring automorphism
that scales the lower-left corner by the pairing scalar, and w' I_2 is
normal for it.  One-dimensional cubes are exactly modules over this ring,
and the translation is invertible.
"""

import random

from factoria.qring import canonical_type, quantum_ring, qp_zero
from factoria.scalars import Field
from factoria.twisted_ring import (GammaContext, GammaElement, gamma_mul,
                                   gamma_random, gamma_scale_diag, gamma_unit,
                                   phi_psi_roundtrip, sigma_tilde)

ring = quantum_ring(2, Field(101), 5, [2, 2])
tdata = canonical_type(ring)
ctx = GammaContext(ring, 1)          # relation x2^2 with its twist

E12, E21 = gamma_unit(ctx, 1, 2), gamma_unit(ctx, 2, 1)
print("E21 * E12 =", gamma_mul(E21, E12).entries())
print("E12 * E21 =", gamma_mul(E12, E21).entries())

rng = random.Random(0)
x, y, z = (gamma_random(ctx, rng) for _ in range(3))
print("\nassociativity on a random triple:",
      gamma_mul(gamma_mul(x, y), z) == gamma_mul(x, gamma_mul(y, z)))

sig1 = tdata.sigmas[0]
xi = tdata.xis[(0, 1)]
om1 = ring.omega_poly(0)
diag = GammaElement(ctx, om1, qp_zero(), qp_zero(), om1)
print("normality of w' I_2 for the induced automorphism:",
      gamma_scale_diag(ctx, om1, x) == gamma_mul(sigma_tilde(x, sig1, xi), diag))

from factoria.cube import Cube, verify_cube
from factoria.polymat import PolyMatrix
from factoria.qring import qp_var

D0 = PolyMatrix.from_entries([[qp_var(ring, 1)]])
X = Cube(ring, tdata, (1,), {(0,): 1, (1,): 1}, {(0, (0,)): D0, (0, (1,)): D0})
print("\na rank-1 factorization of x2^2 verifies:", verify_cube(X).ok)
rep = phi_psi_roundtrip(X, random.Random(2))
print("module axioms and roundtrip on it:", rep["ok"])

"""The q-commuting polynomial algebra and its finite quotient.

Variables obey x_i x_j = q_ij x_j x_i; every element is kept in the
ordered-monomial normal form.  Each variable carries a power relation
omega_i = x_i^(l_i); the quotient by all of them is finite dimensional
with the truncated monomials as a basis.
"""

import random

from factoria.qring import (canonical_type, check_type_axioms, qp_apply_aut,
                            qp_mul, qp_var, quantum_ring,
                            quotient_normal_form, random_qpoly)
from factoria.scalars import Field

ring = quantum_ring(2, Field(101), 5, [2, 2])
print("two variables over F_101 with x1 x2 = 5 x2 x1, relations x_i^2")

x1, x2 = qp_var(ring, 0), qp_var(ring, 1)
print("normal form of x2 * x1:", qp_mul(ring, x2, x1), " (5^-1 = 81 mod 101)")

tdata = canonical_type(ring)
print("\nsigma_1 scales x2 by q^l1 = 25; on x2^2 it gives the pairing scalar:")
print("sigma_1(x2^2) =", qp_apply_aut(ring, tdata.sigmas[0], qp_var(ring, 1, 2)),
      " xi_12 =", tdata.xis[(0, 1)])

rng = random.Random(0)
rep = check_type_axioms(ring, tdata, rng)
print("\ninteraction axioms between the relations and their twists:",
      "pass" if rep["ok"] else rep["failures"][0])

f = random_qpoly(ring, rng, 4, 4)
print("\na random element:", f)
print("reduced mod (x1^2, x2^2):", quotient_normal_form(ring, f))
print("quotient dimension:", ring.quotient_dim(),
      " basis:", ring.pbw_basis())

"""Layered two-term data extracted from a cube.

A commutative cube folds into (Z0, Z1; d, h_1..h_n): Z0 stacks the
next-to-top vertices, d stacks the forward maps into the top, and each
h_q is the top wrap of its direction.  Two conditions compare d h_q and
h_q d against omega_q modulo the earlier relation elements; the cokernel
of d over the finite quotient always matches the cube's total cokernel.

On the displayed two-variable square the second condition fails at stage
2: the off-block composite contains the divided difference, which is not
a multiple of the first relation element.  The trivial cubes satisfy
both conditions on the nose.
"""

from factoria.cli import square_example_cube
from factoria.cube import theta_cube
from factoria.hmf import check_hmf_conditions, extract_hmf, hmf_module_dim
from factoria.homology import tcok
from factoria.qring import canonical_type, commutative_ring
from factoria.scalars import Field

rc = commutative_ring(2, Field(), l=[2, 2])
X = theta_cube(rc, canonical_type(rc), (1, 1), 1)
Z = extract_hmf(X)
print("trivial square: blocks %r over top rank %d" % (Z.z0_blocks, Z.z1_rank))
print("  conditions:", check_hmf_conditions(Z))
print("  module dim %d == total cokernel dim %d"
      % (hmf_module_dim(Z), tcok(X).dim))

sq = square_example_cube(Field(7), ["0", "0", "1"])
Z = extract_hmf(sq)
chk = check_hmf_conditions(Z)
print("\ndisplayed square example: blocks %r over top rank %d"
      % (Z.z0_blocks, Z.z1_rank))
print("  conditions:", chk)
print("  module dim %d == total cokernel dim %d"
      % (hmf_module_dim(Z), tcok(sq).dim))
print("  the stage-2 defect matrix contains the divided difference,")
print("  which lies outside the ideal of the first relation element.")

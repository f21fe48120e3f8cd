"""The signed total complex of a cube and degree-by-degree exactness.

Layer m collects the vertices of weight m; the forward edge from vertex a
in direction i enters the differential with sign (-1)^(number of later
zero coordinates).  Squares then anticommute, so consecutive maps compose
to zero, exactly.  When the edges are homogeneous the complex is graded
and each degree slice is finite, so exactness away from the last layer
can be checked by rank counting.
"""

from factoria.cli import square_example_cube
from factoria.cube import theta_cube
from factoria.homology import check_exactness_truncated, total_complex
from factoria.qring import canonical_type, commutative_ring
from factoria.scalars import Field

ring = commutative_ring(2, Field(), l=[2, 2])
X = theta_cube(ring, canonical_type(ring), (1, 1), 1)
C = total_complex(X)
print("layers of the rank-1 trivial square:", [len(l) for l in C.layers])
print("first differential (signs included):")
for row in C.diffs[0].m:
    print("  ", [str(e) for e in row])
print("second differential:")
for row in C.diffs[1].m:
    print("  ", [str(e) for e in row])

rep = check_exactness_truncated(C, 6)
print("\ntruncated exactness to degree 6:", rep["all_exact"])

sq = square_example_cube(Field(7), ["0", "0", "1"])
rep = check_exactness_truncated(total_complex(sq), 4)
print("square example, exact at both interior spots to degree 4:",
      rep["all_exact"])
spots = rep["spots"]
for m in sorted(spots):
    degs = sorted(spots[m])
    print("  spot %d: kernel dims by degree %s" %
          (m, [spots[m][t]["ker"] for t in degs]))

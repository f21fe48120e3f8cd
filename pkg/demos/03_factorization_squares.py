"""A concrete two-dimensional factorization square, and its total cokernel.

Starting from one polynomial f in one variable, the square factors the
pair (f(x1), f(x2)) over k[x1, x2] with all four vertices free of rank 2.
The total cokernel is the quotient of the top vertex by the two incoming
forward maps; it is a module over the finite algebra
B = k[x1,x2]/(f(x1), f(x2)).

Two variants are built.  The "displayed" one puts the divided difference
D = (f(x2)-f(x1))/(x2-x1) in the off-diagonal entries and its total
cokernel is B/(D); the "corrected" one swaps the roles of D and x1-x2 and
yields B/(x1-x2), whose dimension always equals deg f.  For quadratic f
the two happen to have equal dimension; for cubic f they differ (6 vs 3),
and the two modules are not isomorphic in odd characteristic.
"""

from factoria.cli import square_example_cube
from factoria.cube import mf0_membership, verify_cube
from factoria.homology import degree_one_annihilator, module_invariants, tcok
from factoria.scalars import Field

for coeffs, name in ((["0", "0", "1"], "f = t^2"),
                     (["0", "0", "0", "1"], "f = t^3")):
    print("=== %s ===" % name)
    for variant in ("displayed", "corrected"):
        X = square_example_cube(Field(7), coeffs, variant=variant)
        rep = verify_cube(X)
        member = mf0_membership(X)["member"]
        M = tcok(X)
        ann = degree_one_annihilator(M)
        print("%-10s verifies=%s member=%s  tcok dim=%d  degree-1 annihilators=%d"
              % (variant, rep.ok, member, M.dim, len(ann)))
    print()

print("comparing the quadratic variants over F_7:")
A = tcok(square_example_cube(Field(7), ["0", "0", "1"]))
B = tcok(square_example_cube(Field(7), ["0", "0", "1"], variant="corrected"))
print("  ", module_invariants(A, B)["compare"],
      "(quotients by x1+x2 and by x1-x2 in odd characteristic)")

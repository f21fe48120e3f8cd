"""Exact scalars and exact linear algebra.

Everything downstream rests on two facts: coefficients are exact (reduced
fractions or prime-field residues, never floats), and rank / nullspace /
solve are computed by elimination with exact zero tests.
"""

from fractions import Fraction

from factoria.scalars import Field, KMat, k_solve

QQ = Field()
F101 = Field(101)

print("1/2 + 1/3 =", QQ.show(QQ.add(Fraction(1, 2), Fraction(1, 3))))
print("3 * 5 mod 7 =", Field(7).mul(3, 5))
print("5^-1 mod 101 =", F101.inv(5), " (and by Fermat:", F101.fermat_inv(5), ")")

M = KMat.from_rows(QQ, [[Fraction(1), Fraction(2)],
                        [Fraction(2), Fraction(4)]])
res = k_solve(M)
print("\nrank of [[1,2],[2,4]] over Q:", res.rank)
print("kernel basis column:", [QQ.show(res.nullspace.m[i][0]) for i in range(2)])

targets = KMat.from_rows(QQ, [[Fraction(1)], [Fraction(2)]])
res = k_solve(M, targets)
print("solve M x = (1,2):", "consistent," if res.consistent else "inconsistent,",
      "x =", [QQ.show(res.solution.m[i][0]) for i in range(2)])

bad = KMat.from_rows(QQ, [[Fraction(1)], [Fraction(0)]])
print("solve M x = (1,0):",
      "consistent" if k_solve(M, bad).consistent else "inconsistent (reported, not raised)")

"""Exact scalar arithmetic and dense exact linear algebra.

Coefficients live in Q (arbitrary-precision `fractions.Fraction`) or in a
prime field F_p (ints in [0, p)).  Every value is immutable, every routine
is pure, and nothing in this module carries a tolerance: pivots are chosen
by exact comparison with zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b == g and g >= 0."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


class Field:
    """The coefficient field: rationals when p is None, else F_p.

    Scalars are plain Python values (Fraction or int); the Field object
    supplies the operations so that both kinds share one code path.
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise ValueError("modulus must be a prime >= 2, got %r" % (p,))
        self.p = p

    @property
    def kind(self):
        return "rationals" if self.p is None else "prime_field"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else "Field(F_%d)" % self.p

    # construction

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, n):
        return Fraction(n) if self.p is None else n % self.p

    def parse(self, text):
        """Parse "a" or "a/b" (rationals) or a decimal residue (F_p)."""
        text = text.strip()
        if self.p is None:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        return int(text) % self.p

    def show(self, a):
        if self.p is None:
            return "%d/%d" % (a.numerator, a.denominator) if a.denominator != 1 else str(a.numerator)
        return str(a)

    # arithmetic

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        g, s, _ = xgcd(a % self.p, self.p)
        if g != 1:
            raise ZeroDivisionError("not invertible mod %d" % self.p)
        return s % self.p

    def fermat_inv(self, a):
        """F_p inverse via a^(p-2); independent of the xgcd route."""
        if self.p is None:
            raise ValueError("fermat_inv is defined for prime fields only")
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e == 0:
            return self.one()
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.p is None:
            return a ** e
        return pow(a, e, self.p)

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == self.one()

    def random(self, rng, nonzero=False):
        if self.p is None:
            while True:
                a = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                if not nonzero or a != 0:
                    return a
        while True:
            a = rng.randrange(self.p)
            if not nonzero or a != 0:
                return a


QQ = Field()


def field_ops(field, a, b, op):
    """Checked scalar operation dispatcher: validates that both operands
    belong to the field before computing.  op is one of add/sub/mul/div."""
    for name, val in (("left", a), ("right", b)):
        if field.p is None:
            if not isinstance(val, Fraction):
                raise ValueError("%s operand %r is not a rational scalar" % (name, val))
        else:
            if not isinstance(val, int) or not 0 <= val < field.p:
                raise ValueError("%s operand %r is not an F_%d residue" % (name, val, field.p))
    try:
        return {"add": field.add, "sub": field.sub,
                "mul": field.mul, "div": field.div}[op](a, b)
    except KeyError:
        raise ValueError("unknown operation %r" % (op,))


class KMat:
    """Dense matrix over a Field; rows is a list of row lists."""

    __slots__ = ("field", "rows", "cols", "m")

    def __init__(self, field, rows, cols, m):
        assert len(m) == rows and all(len(r) == cols for r in m)
        self.field = field
        self.rows = rows
        self.cols = cols
        self.m = m

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        out = cls.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            out.m[i][i] = one
        return out

    @classmethod
    def from_rows(cls, field, rows_data):
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        return cls(field, rows, cols, [list(r) for r in rows_data])

    def copy(self):
        return KMat(self.field, self.rows, self.cols, [list(r) for r in self.m])

    def __eq__(self, other):
        return (isinstance(other, KMat) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.m == other.m)

    def __repr__(self):
        return "KMat(%dx%d over %r)" % (self.rows, self.cols, self.field)

    def is_zero(self):
        f = self.field
        return all(f.is_zero(x) for row in self.m for x in row)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        out = KMat.zeros(f, self.rows, other.cols)
        for i in range(self.rows):
            row = self.m[i]
            orow = out.m[i]
            for k in range(self.cols):
                a = row[k]
                if f.is_zero(a):
                    continue
                brow = other.m[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    def add(self, other):
        f = self.field
        return KMat(f, self.rows, self.cols,
                    [[f.add(a, b) for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.m, other.m)])

    def sub(self, other):
        f = self.field
        return KMat(f, self.rows, self.cols,
                    [[f.sub(a, b) for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.m, other.m)])

    def scale(self, c):
        f = self.field
        return KMat(f, self.rows, self.cols,
                    [[f.mul(c, a) for a in r] for r in self.m])

    def transpose(self):
        return KMat(self.field, self.cols, self.rows,
                    [[self.m[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other):
        assert self.rows == other.rows
        return KMat(self.field, self.rows, self.cols + other.cols,
                    [r1 + r2 for r1, r2 in zip(self.m, other.m)])

    def vstack(self, other):
        assert self.cols == other.cols
        return KMat(self.field, self.rows + other.rows, self.cols,
                    [list(r) for r in self.m] + [list(r) for r in other.m])

    def to_json(self):
        f = self.field
        return {"rows": self.rows, "cols": self.cols,
                "entries": [f.show(x) for row in self.m for x in row]}


def rref(M):
    """Reduced row echelon form; returns (R, pivot column list).

    The pivot search scans the whole remaining submatrix exactly (first
    nonzero entry in column-major order); there are no thresholds.
    """
    f = M.field
    R = M.copy()
    pivots = []
    r = 0
    for c in range(R.cols):
        pr = None
        for i in range(r, R.rows):
            if not f.is_zero(R.m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        R.m[r], R.m[pr] = R.m[pr], R.m[r]
        inv = f.inv(R.m[r][c])
        R.m[r] = [f.mul(inv, x) for x in R.m[r]]
        for i in range(R.rows):
            if i != r and not f.is_zero(R.m[i][c]):
                factor = R.m[i][c]
                R.m[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(R.m[i], R.m[r])]
        pivots.append(c)
        r += 1
        if r == R.rows:
            break
    return R, pivots


@dataclass
class SolveResult:
    rank: int
    nullspace: KMat      # columns span {x : M x = 0}
    consistent: bool     # meaningful only when targets were supplied
    solution: object     # KMat with M * solution == targets, or None


def k_solve(M, targets=None):
    """Exact rank / nullspace / linear-system solve for M acting on columns.

    When `targets` is given it must have M.rows rows; the solution X (with
    M X = targets) is returned iff the system is consistent.  Inconsistency
    is reported, never raised.
    """
    f = M.field
    if targets is not None and targets.rows != M.rows:
        raise ValueError("targets row count %d != %d" % (targets.rows, M.rows))
    aug = M if targets is None else M.hstack(targets)
    R, pivots = rref(aug)
    pivots_m = [c for c in pivots if c < M.cols]
    rank = len(pivots_m)

    free = [c for c in range(M.cols) if c not in pivots_m]
    null = KMat.zeros(f, M.cols, len(free))
    one = f.one()
    for jf, c in enumerate(free):
        null.m[c][jf] = one
        for i, pc in enumerate(pivots_m):
            null.m[pc][jf] = f.neg(R.m[i][c])

    consistent = True
    solution = None
    if targets is not None:
        consistent = len(pivots) == rank  # no pivot may fall in the target block
        if consistent:
            solution = KMat.zeros(f, M.cols, targets.cols)
            for i, pc in enumerate(pivots_m):
                for j in range(targets.cols):
                    solution.m[pc][j] = R.m[i][M.cols + j]
    return SolveResult(rank=rank, nullspace=null, consistent=consistent, solution=solution)


def k_rank(M):
    return k_solve(M).rank

"""Matrices over the q-commuting polynomial ring.

Convention: elements of a free left module of rank m are row vectors, and a
homomorphism is right multiplication by an m x k matrix, so the composite
g(f(v)) has matrix M_f * M_g.  This is the one orientation that works for
left modules over a noncommutative ring.  Column-oriented input is accepted
at the file boundary for commutative rings only and transposed on load.
"""

from __future__ import annotations

from .qring import (QPoly, qp_add, qp_apply_aut, qp_from_json, qp_mul, qp_neg,
                    qp_scale, qp_sub, qp_to_json, quotient_normal_form)
from .scalars import KMat


class PolyMatrix:
    """Dense matrix of QPoly entries."""

    __slots__ = ("rows", "cols", "m")

    def __init__(self, rows, cols, m):
        assert len(m) == rows and all(len(r) == cols for r in m)
        self.rows = rows
        self.cols = cols
        self.m = m

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[QPoly() for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def from_entries(cls, entries):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, [list(r) for r in entries])

    def copy(self):
        return PolyMatrix(self.rows, self.cols, [list(r) for r in self.m])

    def is_zero(self):
        return all(e.is_zero() for row in self.m for e in row)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.m == other.m)

    def __repr__(self):
        return "PolyMatrix(%dx%d)" % (self.rows, self.cols)

    def max_degree(self):
        return max((e.degree() for row in self.m for e in row), default=-1)

    def transpose(self):
        return PolyMatrix(self.cols, self.rows,
                          [[self.m[i][j] for i in range(self.rows)] for j in range(self.cols)])


def pm_identity(ring, n):
    out = PolyMatrix.zeros(n, n)
    one = QPoly({(0,) * ring.n: ring.field.one()})
    for i in range(n):
        out.m[i][i] = one
    return out


def pm_scalar(ring, n, poly):
    """poly * I_n."""
    out = PolyMatrix.zeros(n, n)
    for i in range(n):
        out.m[i][i] = poly
    return out


def pm_mul(ring, A, B):
    if A.cols != B.rows:
        raise ValueError("shape mismatch %dx%d * %dx%d" % (A.rows, A.cols, B.rows, B.cols))
    out = PolyMatrix.zeros(A.rows, B.cols)
    for i in range(A.rows):
        for k in range(A.cols):
            a = A.m[i][k]
            if a.is_zero():
                continue
            for j in range(B.cols):
                b = B.m[k][j]
                if not b.is_zero():
                    out.m[i][j] = qp_add(ring, out.m[i][j], qp_mul(ring, a, b))
    return out


def pm_add(ring, A, B):
    return PolyMatrix(A.rows, A.cols,
                      [[qp_add(ring, a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(A.m, B.m)])


def pm_sub(ring, A, B):
    return PolyMatrix(A.rows, A.cols,
                      [[qp_sub(ring, a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(A.m, B.m)])


def pm_neg(ring, A):
    return PolyMatrix(A.rows, A.cols, [[qp_neg(ring, a) for a in r] for r in A.m])


def pm_scale(ring, c, A):
    """Left-multiply every entry by the scalar c."""
    return PolyMatrix(A.rows, A.cols, [[qp_scale(ring, c, a) for a in r] for r in A.m])


def pm_poly_scale(ring, poly, A):
    """Left-multiply every entry by a polynomial."""
    return PolyMatrix(A.rows, A.cols, [[qp_mul(ring, poly, a) for a in r] for r in A.m])


def pm_sigma(ring, aut, A):
    """Apply a diagonal automorphism entrywise."""
    return PolyMatrix(A.rows, A.cols, [[qp_apply_aut(ring, aut, a) for a in r] for r in A.m])


def pm_nf(ring, A):
    """Quotient normal form entrywise."""
    return PolyMatrix(A.rows, A.cols,
                      [[quotient_normal_form(ring, a) for a in r] for r in A.m])


def pm_block_diag(A, B):
    out = PolyMatrix.zeros(A.rows + B.rows, A.cols + B.cols)
    for i in range(A.rows):
        for j in range(A.cols):
            out.m[i][j] = A.m[i][j]
    for i in range(B.rows):
        for j in range(B.cols):
            out.m[A.rows + i][A.cols + j] = B.m[i][j]
    return out


def pm_vstack(A, B):
    assert A.cols == B.cols
    return PolyMatrix(A.rows + B.rows, A.cols, [list(r) for r in A.m] + [list(r) for r in B.m])


def pm_hstack(A, B):
    assert A.rows == B.rows
    return PolyMatrix(A.rows, A.cols + B.cols, [r1 + r2 for r1, r2 in zip(A.m, B.m)])


def pm_delete_row(A, r):
    return PolyMatrix(A.rows - 1, A.cols, [list(row) for i, row in enumerate(A.m) if i != r])


def pm_delete_col(A, c):
    return PolyMatrix(A.rows, A.cols - 1,
                      [[e for j, e in enumerate(row) if j != c] for row in A.m])


# grading

class GradingAssignment:
    def __init__(self, row_degrees, col_degrees):
        self.row_degrees = list(row_degrees)
        self.col_degrees = list(col_degrees)

    def __repr__(self):
        return "GradingAssignment(rows=%r, cols=%r)" % (self.row_degrees, self.col_degrees)


def pm_grade_infer(M):
    """Solve deg(entry r,c) = col[c] - row[r] over the nonzero entries.

    Every nonzero entry must be homogeneous.  Disconnected components are
    based at 0 independently, then the whole assignment is shifted so the
    minimum degree is 0.  Returns None when no assignment exists.
    """
    nodes = [("r", i) for i in range(M.rows)] + [("c", j) for j in range(M.cols)]
    adj = {v: [] for v in nodes}
    for i in range(M.rows):
        for j in range(M.cols):
            e = M.m[i][j]
            if e.is_zero():
                continue
            if not e.is_homogeneous():
                return None
            d = e.degree()
            adj[("r", i)].append((("c", j), d))    # col = row + d
            adj[("c", j)].append((("r", i), -d))
    val = {}
    for start in nodes:
        if start in val:
            continue
        val[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w, d in adj[v]:
                want = val[v] + d
                if w in val:
                    if val[w] != want:
                        return None
                else:
                    val[w] = want
                    queue.append(w)
    shift = -min(val.values()) if val else 0
    return GradingAssignment([val[("r", i)] + shift for i in range(M.rows)],
                             [val[("c", j)] + shift for j in range(M.cols)])


# linearization

def monomials_upto(n, D):
    """All exponent tuples of total degree <= D, lexicographic."""
    out = []
    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k, slots - 1)
    rec([], D, n)
    return sorted(out)


def monomials_of_degree(n, d):
    return sorted(e for e in monomials_upto(n, d) if sum(e) == d)


def pm_to_linear(ring, M, mode="over_B", degree=None):
    """k-matrix of the row-vector map v -> v * M.

    mode "over_B": restrict to the truncated monomial basis of the quotient
    in each component (entries are reduced first).  mode "truncated":
    restrict to the total-degree <= degree slice of the free module, with
    image terms above the bound dropped.  Basis order is component-major,
    then lexicographic in the exponent tuple.  Functorial on composable
    products: lin(M*N) == lin(M)*lin(N).
    """
    fld = ring.field
    if mode == "over_B":
        basis = ring.pbw_basis()
        index = ring.pbw_index()
        nb = len(basis)
        K = KMat.zeros(fld, M.rows * nb, M.cols * nb)
        for r in range(M.rows):
            for c in range(M.cols):
                entry = quotient_normal_form(ring, M.m[r][c])
                if entry.is_zero():
                    continue
                for a in basis:
                    img = quotient_normal_form(
                        ring, qp_mul(ring, QPoly({a: fld.one()}), entry))
                    row = r * nb + index[a]
                    for e, coeff in img.terms.items():
                        K.m[row][c * nb + index[e]] = fld.add(
                            K.m[row][c * nb + index[e]], coeff)
        return K
    if mode == "truncated":
        if degree is None:
            raise ValueError("truncated mode needs a degree bound")
        basis = monomials_upto(ring.n, degree)
        index = {e: i for i, e in enumerate(basis)}
        nb = len(basis)
        K = KMat.zeros(fld, M.rows * nb, M.cols * nb)
        for r in range(M.rows):
            for c in range(M.cols):
                entry = M.m[r][c]
                if entry.is_zero():
                    continue
                for a in basis:
                    img = qp_mul(ring, QPoly({a: fld.one()}), entry)
                    row = r * nb + index[a]
                    for e, coeff in img.terms.items():
                        if sum(e) <= degree:
                            K.m[row][c * nb + index[e]] = fld.add(
                                K.m[row][c * nb + index[e]], coeff)
        return K
    raise ValueError("unknown mode %r" % (mode,))


def pm_linear_graded_slice(ring, M, row_degs, col_degs, t):
    """k-matrix of v -> v*M on the internal-degree-t slice over the free ring.

    A basis element (component r, monomial a) sits in internal degree
    |a| - row_degs[r]; homogeneous entries of degree col-row map slices to
    slices.  Returns (K, row_basis, col_basis).
    """
    fld = ring.field
    row_basis = []
    for r in range(M.rows):
        d = t + row_degs[r]
        if d >= 0:
            row_basis += [(r, e) for e in monomials_of_degree(ring.n, d)]
    col_basis = []
    for c in range(M.cols):
        d = t + col_degs[c]
        if d >= 0:
            col_basis += [(c, e) for e in monomials_of_degree(ring.n, d)]
    col_index = {b: i for i, b in enumerate(col_basis)}
    K = KMat.zeros(fld, len(row_basis), len(col_basis))
    for i, (r, a) in enumerate(row_basis):
        mono = QPoly({a: fld.one()})
        for c in range(M.cols):
            entry = M.m[r][c]
            if entry.is_zero():
                continue
            img = qp_mul(ring, mono, entry)
            for e, coeff in img.terms.items():
                K.m[i][col_index[(c, e)]] = fld.add(K.m[i][col_index[(c, e)]], coeff)
    return K, row_basis, col_basis


# serialization

def pm_to_json(ring, M, orientation="row"):
    src = M if orientation == "row" else M.transpose()
    return {"rows": src.rows, "cols": src.cols, "orientation": orientation,
            "entries": [[qp_to_json(ring, e) for e in row] for row in src.m]}


def pm_from_json(ring, data, default_orientation="row"):
    orientation = data.get("orientation", default_orientation)
    if orientation not in ("row", "column"):
        raise ValueError("orientation must be 'row' or 'column'")
    if orientation == "column" and not ring.commutative:
        raise ValueError("column-oriented matrices are only accepted over "
                         "commutative rings; transposition is not available "
                         "noncommutatively")
    entries = [[qp_from_json(ring, e) for e in row] for row in data["entries"]]
    M = PolyMatrix.from_entries(entries) if entries else PolyMatrix.zeros(data["rows"], data["cols"])
    if M.rows != data["rows"] or M.cols != data["cols"]:
        raise ValueError("entry table does not match rows/cols")
    return M if orientation == "row" else M.transpose()

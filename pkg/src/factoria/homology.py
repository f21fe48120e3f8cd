"""Signed total complex of a cube, truncated exactness, and the finite
quotient modules cut out by the total cokernel.

The total complex stacks the layers (sum over vertices of fixed weight)
and signs the forward edge from vertex a in direction i by (-1)^s with
s = #{ j > i : a_j = 0 }.  Adjacent layer maps then anticommute square by
square, so consecutive differentials compose to zero; this is asserted on
construction.
"""

from __future__ import annotations

from .polymat import (PolyMatrix, pm_linear_graded_slice, pm_mul, pm_scale,
                      pm_to_linear, pm_vstack)
from .qring import QPoly, qp_mul, quotient_normal_form
from .scalars import KMat, k_solve, rref


def sign_exponent(vertex, pos):
    return sum(1 for j in range(pos + 1, len(vertex)) if vertex[j] == 0)


class TotalComplex:
    """Layers 0..n with one differential per step, all signs applied."""

    def __init__(self, ring, layers, diffs):
        self.ring = ring
        self.layers = layers      # list of vertex lists, ordered
        self.diffs = diffs        # diffs[m]: layer m -> layer m+1


def total_complex(X):
    """Assemble the signed layered complex of a verified cube and assert
    that consecutive differentials compose to zero (raises otherwise)."""
    ring = X.ring
    fld = ring.field
    n = X.dim
    layers = [sorted(v for v in X.vertices() if sum(v) == m) for m in range(n + 1)]
    diffs = []
    for m in range(n):
        src, tgt = layers[m], layers[m + 1]
        row_offsets = {}
        total_rows = 0
        for v in src:
            row_offsets[v] = total_rows
            total_rows += X.ranks[v]
        col_offsets = {}
        total_cols = 0
        for v in tgt:
            col_offsets[v] = total_cols
            total_cols += X.ranks[v]
        D = PolyMatrix.zeros(total_rows, total_cols)
        for v in src:
            for pos in range(n):
                if v[pos] != 0:
                    continue
                w = tuple(b if k != pos else 1 for k, b in enumerate(v))
                sgn = fld.from_int((-1) ** sign_exponent(v, pos))
                block = pm_scale(ring, sgn, X.edge(pos, v))
                r0, c0 = row_offsets[v], col_offsets[w]
                for i in range(block.rows):
                    for j in range(block.cols):
                        D.m[r0 + i][c0 + j] = block.m[i][j]
        diffs.append(D)
    for m in range(n - 1):
        comp = pm_mul(ring, diffs[m], diffs[m + 1])
        if not comp.is_zero():
            raise ValueError("total complex composite is nonzero at step %d" % m)
    return TotalComplex(ring, layers, diffs)


def _complex_grading(C):
    """One degree per free component of every layer, solved globally from
    the homogeneous differential entries.  Returns list-of-lists or None."""
    nodes = []
    for m, d in enumerate(C.diffs):
        if m == 0:
            nodes.append(d.rows)
        nodes.append(d.cols)
    if not C.diffs:
        nodes = [sum(1 for _ in C.layers[0])]
    adj = {}
    for m in range(len(nodes)):
        for i in range(nodes[m]):
            adj[(m, i)] = []
    for m, D in enumerate(C.diffs):
        for i in range(D.rows):
            for j in range(D.cols):
                e = D.m[i][j]
                if e.is_zero():
                    continue
                if not e.is_homogeneous():
                    return None
                d = e.degree()
                adj[(m, i)].append(((m + 1, j), d))
                adj[(m + 1, j)].append(((m, i), -d))
    val = {}
    for start in sorted(adj):
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
    return [[val[(m, i)] + shift for i in range(nodes[m])] for m in range(len(nodes))]


def check_exactness_truncated(C, degree_bound):
    """Degree-by-degree exactness of the layered complex at every spot
    except the last, over the free (not quotient) ring.

    Requires a consistent grading; otherwise reports skipped.  For each
    internal degree t <= bound the slice matrices are exact k-matrices and
    the test is rank counting: dim ker(outgoing) == rank(incoming).
    """
    degs = _complex_grading(C)
    if degs is None:
        return {"graded": False, "reason": "differentials are not consistently gradable",
                "all_exact": None}
    ring = C.ring
    tmin = -max((max(layer, default=0) for layer in degs), default=0)
    spots = {}
    all_exact = True
    n_steps = len(C.diffs)
    for t in range(tmin, degree_bound + 1):
        slices = []
        for m, D in enumerate(C.diffs):
            K, rb, cb = pm_linear_graded_slice(ring, D, degs[m], degs[m + 1], t)
            slices.append((K, len(rb), len(cb)))
        for m in range(n_steps):   # interior spots: every layer but the last
            K_out, nrows, _ = slices[m]
            rank_out = k_solve(K_out).rank
            ker = nrows - rank_out
            rank_in = k_solve(slices[m - 1][0]).rank if m > 0 else 0
            exact = (ker == rank_in)
            spots.setdefault(m, {})[t] = {"exact": exact, "ker": ker, "im": rank_in}
            if not exact:
                all_exact = False
    return {"graded": True, "spots": spots, "all_exact": all_exact,
            "degrees": degs, "bound": degree_bound}


class QuotientModule:
    """Finite module over the quotient algebra: a basis labelled by
    (component, truncated monomial) and one generator-action matrix per
    variable, in the column convention act[i] * coords."""

    def __init__(self, ring, basis_labels, actions, degrees=None):
        self.ring = ring
        self.basis_labels = list(basis_labels)
        self.dim = len(self.basis_labels)
        self.actions = actions
        self.degrees = degrees
        self._assert_relations()

    def _assert_relations(self):
        fld = self.ring.field
        n = self.ring.n
        for i in range(n):
            # omega_i, evaluated on the action of x_i, must vanish
            A = self.actions[i]
            acc = _mat_power(A, self.ring.l[i])
            for k, c in self.ring.tails[i].items():
                acc = acc.add(_mat_power(A, k).scale(c))
            if not acc.is_zero():
                raise ValueError("action relation fails for variable %d" % (i + 1,))
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.actions[i].mul(self.actions[j])
                rhs = self.actions[j].mul(self.actions[i]).scale(self.ring.q[i][j])
                if not lhs.sub(rhs).is_zero():
                    raise ValueError("action commutation fails for (%d,%d)" % (i + 1, j + 1))

    def to_json(self):
        return {"dim": self.dim,
                "basis": [[comp, list(e)] for comp, e in self.basis_labels],
                "actions": [a.to_json() for a in self.actions]}


def _mat_power(A, k):
    out = KMat.identity(A.field, A.rows)
    for _ in range(k):
        out = out.mul(A)
    return out


def left_multiplication_matrix(ring, i, ncomp):
    """Column-convention matrix of left multiplication by x_i on the free
    quotient module of rank ncomp."""
    fld = ring.field
    basis = ring.pbw_basis()
    index = ring.pbw_index()
    nb = len(basis)
    L = KMat.zeros(fld, ncomp * nb, ncomp * nb)
    xi_mono = [0] * ring.n
    xi_mono[i] = 1
    xi = QPoly({tuple(xi_mono): fld.one()})
    for a in basis:
        img = quotient_normal_form(ring, qp_mul(ring, xi, QPoly({a: fld.one()})))
        for e, c in img.terms.items():
            for comp in range(ncomp):
                L.m[comp * nb + index[e]][comp * nb + index[a]] = c
    return L


def quotient_of_linear_map(ring, K, ncomp, labels=None):
    """Quotient of the free rank-ncomp module over the finite quotient
    algebra by the row space of K; returns a QuotientModule."""
    fld = ring.field
    basis = ring.pbw_basis()
    nb = len(basis)
    total = ncomp * nb
    assert K.cols == total
    R, pivots = rref(K)
    free_cols = [c for c in range(total) if c not in pivots]
    # projection to quotient coordinates and its section
    proj = KMat.zeros(fld, len(free_cols), total)
    for fi, c in enumerate(free_cols):
        proj.m[fi][c] = fld.one()
    for t, pc in enumerate(pivots):
        for fi, c in enumerate(free_cols):
            if not fld.is_zero(R.m[t][c]):
                proj.m[fi][pc] = fld.neg(R.m[t][c])
    sect = KMat.zeros(fld, total, len(free_cols))
    for fi, c in enumerate(free_cols):
        sect.m[c][fi] = fld.one()
    actions = []
    for i in range(ring.n):
        L = left_multiplication_matrix(ring, i, ncomp)
        actions.append(proj.mul(L).mul(sect))
    if labels is None:
        labels = [(c // nb, basis[c % nb]) for c in free_cols]
    else:
        labels = [labels[c] for c in free_cols]
    return QuotientModule(ring, labels, actions)


def tcok(X):
    """Total cokernel: quotient of the all-ones vertex by the images of the
    n forward maps into it, over the finite quotient algebra."""
    if not X.is_full():
        raise ValueError("total cokernel needs a cube over every ring direction")
    ring = X.ring
    one_vertex = (1,) * X.dim
    stack = None
    for pos in range(X.dim):
        base = tuple(1 if k != pos else 0 for k in range(X.dim))
        M = X.edge(pos, base)
        stack = M if stack is None else pm_vstack(stack, M)
    K = pm_to_linear(ring, stack, mode="over_B")
    return quotient_of_linear_map(ring, K, X.ranks[one_vertex])


def cok0(X):
    """Cokernel of the forward map of a 1-dimensional factorization over
    the one-variable quotient; coincides with tcok when n = 1."""
    if X.dim != 1:
        raise ValueError("cok0 needs a 1-dimensional cube")
    if X.ring.n != 1:
        raise ValueError("cok0 is supported over one-variable rings")
    ring = X.ring
    K = pm_to_linear(ring, X.edge(0, (0,)), mode="over_B")
    return quotient_of_linear_map(ring, K, X.ranks[(1,)])


def hom_space(M, N):
    """Basis of module maps M -> N: k-matrices phi with
    phi A_i^M = A_i^N phi for every variable."""
    fld = M.ring.field
    dm, dn = M.dim, N.dim
    nunk = dm * dn
    rows = []
    for i in range(M.ring.n):
        AM, AN = M.actions[i], N.actions[i]
        # (phi AM - AN phi)[r][c] = 0
        for r in range(dn):
            for c in range(dm):
                row = [fld.zero()] * nunk
                for k in range(dm):
                    row[r * dm + k] = fld.add(row[r * dm + k], AM.m[k][c])
                for k in range(dn):
                    row[k * dm + c] = fld.sub(row[k * dm + c], AN.m[r][k])
                rows.append(row)
    if not rows:
        rows = [[fld.zero()] * nunk]
    A = KMat.from_rows(fld, rows)
    res = k_solve(A)
    out = []
    for j in range(res.nullspace.cols):
        phi = KMat.zeros(fld, dn, dm)
        for r in range(dn):
            for c in range(dm):
                phi.m[r][c] = res.nullspace.m[r * dm + c][j]
        out.append(phi)
    return out


def _invertible(phi):
    return phi.rows == phi.cols and k_solve(phi).rank == phi.rows


def modules_isomorphic(M, N, rng, trials=300):
    """Search the Hom space for an invertible element.

    Conclusive "isomorphic" on success.  Failure is "not isomorphic
    (exhausted)" when the whole space could be enumerated (small prime
    fields), else "not isomorphic (probabilistic)" after random trials,
    or "unknown" when nothing can be concluded.
    """
    if M.dim != N.dim:
        return "not isomorphic (exhausted)"
    if M.dim == 0:
        return "isomorphic"
    basis = hom_space(M, N)
    if not basis:
        return "not isomorphic (exhausted)"
    fld = M.ring.field
    for phi in basis:
        if _invertible(phi):
            return "isomorphic"
    p = fld.p
    if p is not None and p ** len(basis) <= 20000:
        import itertools as _it
        for coeffs in _it.product(range(p), repeat=len(basis)):
            phi = KMat.zeros(fld, N.dim, M.dim)
            for c, b in zip(coeffs, basis):
                if c:
                    phi = phi.add(b.scale(c))
            if _invertible(phi):
                return "isomorphic"
        return "not isomorphic (exhausted)"
    for _ in range(trials):
        phi = KMat.zeros(fld, N.dim, M.dim)
        for b in basis:
            phi = phi.add(b.scale(fld.random(rng)))
        if _invertible(phi):
            return "isomorphic"
    return "not isomorphic (probabilistic)"


def degree_one_annihilator(M):
    """Basis of { c in k^n : (sum_i c_i x_i) kills the module }."""
    fld = M.ring.field
    n = M.ring.n
    d = M.dim
    rows = []
    for r in range(d):
        for c in range(d):
            rows.append([M.actions[i].m[r][c] for i in range(n)])
    A = KMat.from_rows(fld, rows) if rows else KMat.zeros(fld, 1, n)
    res = k_solve(A)
    return [[res.nullspace.m[i][j] for i in range(n)] for j in range(res.nullspace.cols)]


def module_invariants(M, N=None, rng=None):
    """dim, degree-1 annihilator slice, Hilbert function by monomial degree
    of the basis labels, and (optionally) an isomorphism verdict against N."""
    ann = degree_one_annihilator(M)
    hilbert = {}
    for comp, e in M.basis_labels:
        hilbert[sum(e)] = hilbert.get(sum(e), 0) + 1
    report = {"dim": M.dim,
              "ann1_dim": len(ann),
              "ann1_basis": ann,
              "hilbert": [hilbert.get(t, 0) for t in range(max(hilbert, default=0) + 1)]}
    if N is not None:
        if rng is None:
            import random as _random
            rng = _random.Random(0)
        report["compare"] = modules_isomorphic(M, N, rng)
    return report

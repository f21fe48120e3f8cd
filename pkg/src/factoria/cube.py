"""n-dimensional matrix factorization cubes.

A cube assigns a free-module rank to every vertex of {0,1}^n and a matrix
to every (direction, vertex) pair: the matrix of the map leaving that
vertex in that direction (forward when the coordinate is 0, wrap-around
when it is 1).  Direction i carries the power relation omega_i; going
around direction i twice multiplies by omega_i, up to the twist sigma_i on
the wrap side.

All matrices follow the row convention of polymat.  Twisted targets are
identified with their untwisted modules once and for all; under that
identification twisting a map applies sigma^-1 to its matrix, and the
direction-j wrap of a cube twisted in direction i picks up the central
scalar xi(i,j).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .polymat import (PolyMatrix, pm_add, pm_block_diag, pm_delete_col,
                      pm_delete_row, pm_identity, pm_mul, pm_scalar,
                      pm_scale, pm_sigma, pm_sub)
from .qring import QPoly, qp_add, qp_scale
from .scalars import KMat, k_solve


class UnsupportedConfiguration(Exception):
    pass


def all_vertices(dim):
    return [bits for bits in itertools.product((0, 1), repeat=dim)]


def flip(bits, pos):
    out = list(bits)
    out[pos] = 1 - out[pos]
    return tuple(out)


class Cube:
    """Factorization cube over a subset of the ring's directions.

    dirs is a strictly increasing tuple of ring variable indices (a facet
    of a full cube keeps the ambient ring but drops a direction).  ranks
    maps each vertex bit tuple to a free rank; edges maps (position in
    dirs, vertex) to the matrix of the map leaving that vertex.
    """

    def __init__(self, ring, tdata, dirs, ranks, edges):
        self.ring = ring
        self.tdata = tdata
        self.dirs = tuple(dirs)
        if list(self.dirs) != sorted(set(self.dirs)):
            raise ValueError("directions must be strictly increasing")
        self.dim = len(self.dirs)
        self.ranks = dict(ranks)
        self.edges = dict(edges)
        for v in all_vertices(self.dim):
            if v not in self.ranks:
                raise ValueError("missing rank at %r" % (v,))
        for pos in range(self.dim):
            for v in all_vertices(self.dim):
                M = self.edges.get((pos, v))
                if M is None:
                    raise ValueError("missing edge d%d@%r" % (pos + 1, v))
                w = flip(v, pos)
                if M.rows != self.ranks[v] or M.cols != self.ranks[w]:
                    raise ValueError("edge d%d@%r has shape %dx%d, want %dx%d"
                                     % (pos + 1, v, M.rows, M.cols,
                                        self.ranks[v], self.ranks[w]))

    # direction helpers (positions index self.dirs)

    def var(self, pos):
        return self.dirs[pos]

    def sigma(self, pos):
        return self.tdata.sigmas[self.var(pos)]

    def omega(self, pos):
        return self.ring.omega_poly(self.var(pos))

    def xi(self, pos_i, pos_j):
        return self.tdata.xi(self.ring.field, self.var(pos_i), self.var(pos_j))

    def edge(self, pos, v):
        return self.edges[(pos, v)]

    def vertices(self):
        return all_vertices(self.dim)

    def total_rank(self):
        return sum(self.ranks.values())

    def is_full(self):
        return self.dirs == tuple(range(self.ring.n))

    def copy(self):
        return Cube(self.ring, self.tdata, self.dirs, dict(self.ranks),
                    {k: m.copy() for k, m in self.edges.items()})

    def max_edge_degree(self, pos=None):
        positions = range(self.dim) if pos is None else [pos]
        return max((self.edges[(p, v)].max_degree()
                    for p in positions for v in self.vertices()), default=-1)

    def __repr__(self):
        return "Cube(dim=%d, ranks=%r)" % (self.dim, self.ranks)


# verification

@dataclass
class VerifyReport:
    ok: bool
    checks: int
    failures: list = dc_field(default_factory=list)   # (label, diff PolyMatrix)

    def first_failure(self):
        return self.failures[0] if self.failures else None


def _bits_str(v):
    return "".join(str(b) for b in v)


def _edge_checks(X, pos, base):
    """Both factorization conditions for the direction `pos` edge at a base
    vertex (coordinate 0): forward*wrap = omega*I on the base, and
    sigma(wrap)*forward = omega*I on the far vertex."""
    ring = X.ring
    top = flip(base, pos)
    F = X.edge(pos, base)
    W = X.edge(pos, top)
    omega = X.omega(pos)
    sig = X.sigma(pos)
    d1 = pm_sub(ring, pm_mul(ring, F, W), pm_scalar(ring, X.ranks[base], omega))
    d2 = pm_sub(ring, pm_mul(ring, pm_sigma(ring, sig, W), F),
                pm_scalar(ring, X.ranks[top], omega))
    tag = "d%d@%s" % (pos + 1, _bits_str(base))
    return [("E1:" + tag, d1), ("E2:" + tag, d2)]


def _square_checks(X, pi, pj, gamma_vertex):
    """The four commuting-square conditions for the face in directions
    pi < pj at a fixed setting of the other coordinates.

    With H the direction-pj edges, V the direction-pi edges, sigma/sigma'
    the pj/pi twists, xi the central scalar for the pair, and superscripts
    (a, b) = (coordinate pj, coordinate pi):

      S1:       V00 * H01                == H00 * V10
      S2:  s(H10) * V00                  == s(V10) * s(H11)
      S3:  s'(V01) * H00                 == s'(H01) * s'(V11)
      S4:  xi * s s'(V11) * s(H10)       == s' s(H11) * s'(V01)
    """
    ring = X.ring
    fld = ring.field

    def vert(a, b):
        v = list(gamma_vertex)
        v[pj] = a
        v[pi] = b
        return tuple(v)

    H = {(a, b): X.edge(pj, vert(a, b)) for a in (0, 1) for b in (0, 1)}
    V = {(a, b): X.edge(pi, vert(a, b)) for a in (0, 1) for b in (0, 1)}
    sig = X.sigma(pj)
    sigp = X.sigma(pi)
    both = sig.compose(sigp, fld)
    xi = X.xi(pi, pj)

    s1 = pm_sub(ring, pm_mul(ring, V[(0, 0)], H[(0, 1)]),
                pm_mul(ring, H[(0, 0)], V[(1, 0)]))
    s2 = pm_sub(ring, pm_mul(ring, pm_sigma(ring, sig, H[(1, 0)]), V[(0, 0)]),
                pm_mul(ring, pm_sigma(ring, sig, V[(1, 0)]),
                       pm_sigma(ring, sig, H[(1, 1)])))
    s3 = pm_sub(ring, pm_mul(ring, pm_sigma(ring, sigp, V[(0, 1)]), H[(0, 0)]),
                pm_mul(ring, pm_sigma(ring, sigp, H[(0, 1)]),
                       pm_sigma(ring, sigp, V[(1, 1)])))
    s4 = pm_sub(ring, pm_scale(ring, xi,
                               pm_mul(ring, pm_sigma(ring, both, V[(1, 1)]),
                                      pm_sigma(ring, sig, H[(1, 0)]))),
                pm_mul(ring, pm_sigma(ring, both, H[(1, 1)]),
                       pm_sigma(ring, sigp, V[(0, 1)])))
    tag = "(%d,%d)@%s" % (pi + 1, pj + 1, _bits_str(gamma_vertex))
    return [("S1:" + tag, s1), ("S2:" + tag, s2), ("S3:" + tag, s3), ("S4:" + tag, s4)]


def _parallel_map(fn, jobs, threads):
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def verify_cube(X, threads=None):
    """Check every edge and every square condition, exactly.

    Returns a report whose failures carry the difference matrix of the
    first (and each) violated identity, in a fixed deterministic order.
    """
    if threads is None:
        threads = int(os.environ.get("FACTORIA_THREADS", "1") or "1")
    jobs = []
    for pos in range(X.dim):
        for v in X.vertices():
            if v[pos] == 0:
                jobs.append(("edge", pos, v))
    for pi in range(X.dim):
        for pj in range(pi + 1, X.dim):
            for v in X.vertices():
                if v[pi] == 0 and v[pj] == 0:
                    jobs.append(("square", pi, pj, v))

    def run(job):
        if job[0] == "edge":
            return _edge_checks(X, job[1], job[2])
        return _square_checks(X, job[1], job[2], job[3])

    failures = []
    checks = 0
    for group in _parallel_map(run, jobs, threads):
        for label, diff in group:
            checks += 1
            if not diff.is_zero():
                failures.append((label, diff))
    return VerifyReport(ok=not failures, checks=checks, failures=failures)


# constructors

def theta_cube(ring, tdata, beta, rank):
    """The trivial cube of profile beta with every vertex free of the given
    rank.  Built inductively from the innermost direction outward: profile
    bit 0 contributes edges (I, omega*I); profile bit 1 contributes
    (omega*I, I) and twists the inner block, which scales inner wrap edges
    by the inverse pairing scalar.  The result always verifies.
    """
    beta = tuple(beta)
    n = ring.n
    if len(beta) != n:
        raise ValueError("profile length must match the ring")
    fld = ring.field
    # innermost: single vertex, no edges
    ranks = {(): rank}
    edges = {}
    dims_so_far = 0
    for m in range(n - 1, -1, -1):
        vars_inner = list(range(m + 1, n))
        new_ranks = {}
        new_edges = {}
        ident = pm_identity(ring, rank)
        om_ident = pm_scalar(ring, rank, ring.omega_poly(m))
        if beta[m] == 0:
            for v in ranks:
                for lvl in (0, 1):
                    new_ranks[(lvl,) + v] = ranks[v]
            for (pos, v), M in edges.items():
                for lvl in (0, 1):
                    new_edges[(pos + 1, (lvl,) + v)] = M
            for v in ranks:
                new_edges[(0, (0,) + v)] = ident
                new_edges[(0, (1,) + v)] = om_ident
        else:
            for v in ranks:
                new_ranks[(1,) + v] = ranks[v]
                new_ranks[(0,) + v] = ranks[v]
            sig_m = tdata.sigmas[m]
            for (pos, v), M in edges.items():
                new_edges[(pos + 1, (1,) + v)] = M
                twisted = pm_sigma(ring, sig_m, M)
                if v[pos] == 1:  # inner wrap edge picks up the inverse scalar
                    var_j = vars_inner[pos]
                    twisted = pm_scale(ring, fld.inv(tdata.xi(fld, m, var_j)), twisted)
                new_edges[(pos + 1, (0,) + v)] = twisted
            for v in ranks:
                new_edges[(0, (0,) + v)] = om_ident
                new_edges[(0, (1,) + v)] = ident
        ranks = new_ranks
        edges = new_edges
        dims_so_far += 1
    return Cube(ring, tdata, tuple(range(n)), ranks, edges)


def shift_1d(X):
    """Shift of a one-dimensional factorization: swap the two vertices and
    use (wrap, sigma^-1(forward)) as the new edge pair."""
    if X.dim != 1:
        raise ValueError("shift is defined for 1-dimensional cubes")
    ring = X.ring
    siginv = X.sigma(0).inverse(ring.field)
    ranks = {(0,): X.ranks[(1,)], (1,): X.ranks[(0,)]}
    edges = {(0, (0,)): X.edge(0, (1,)),
             (0, (1,)): pm_sigma(ring, siginv, X.edge(0, (0,)))}
    return Cube(X.ring, X.tdata, X.dirs, ranks, edges)


def twist_cube(X, pos):
    """Twist in direction `pos`: sigma^-1 on every matrix, and the wrap
    edges of every other direction j are scaled by the pairing scalar
    xi(i,j).  Verification is preserved."""
    ring = X.ring
    fld = ring.field
    siginv = X.sigma(pos).inverse(fld)
    edges = {}
    for (p, v), M in X.edges.items():
        out = pm_sigma(ring, siginv, M)
        if p != pos and v[p] == 1:
            out = pm_scale(ring, X.xi(pos, p), out)
        edges[(p, v)] = out
    return Cube(X.ring, X.tdata, X.dirs, dict(X.ranks), edges)


def direct_sum(X, Y):
    if X.ring != Y.ring or X.dirs != Y.dirs:
        raise ValueError("direct sum needs matching ring and directions")
    ranks = {v: X.ranks[v] + Y.ranks[v] for v in X.vertices()}
    edges = {k: pm_block_diag(X.edges[k], Y.edges[k]) for k in X.edges}
    return Cube(X.ring, X.tdata, X.dirs, ranks, edges)


def facet(X, pos):
    """The (dim-1)-cube of vertices with coordinate `pos` equal to 1."""
    if X.dim < 1:
        raise ValueError("no facets of a 0-cube")
    dirs = tuple(d for k, d in enumerate(X.dirs) if k != pos)
    ranks = {}
    edges = {}
    for v in X.vertices():
        if v[pos] != 1:
            continue
        w = tuple(b for k, b in enumerate(v) if k != pos)
        ranks[w] = X.ranks[v]
        for p in range(X.dim):
            if p == pos:
                continue
            np = p if p < pos else p - 1
            edges[(np, w)] = X.edge(p, v)
    return Cube(X.ring, X.tdata, dirs, ranks, edges)


def swap_directions(X, pa, pb):
    """Exchange the roles of two directions (commutative rings only).

    The swap relabels vertices and edge slots and applies the variable
    exchange to every entry, so the relation element carried by each slot
    is preserved; the two directions must have identical relations."""
    if not X.ring.commutative:
        raise UnsupportedConfiguration("direction swap needs a commutative ring")
    ring = X.ring
    va, vb = X.dirs[pa], X.dirs[pb]
    if ring.l[va] != ring.l[vb] or ring.tails[va] != ring.tails[vb]:
        raise UnsupportedConfiguration("directions carry different relations")
    perm = list(range(X.dim))
    perm[pa], perm[pb] = perm[pb], perm[pa]

    def relabel(v):
        return tuple(v[perm[k]] for k in range(X.dim))

    def swap_poly(f):
        out = {}
        for e, c in f.terms.items():
            e2 = list(e)
            e2[va], e2[vb] = e2[vb], e2[va]
            out[tuple(e2)] = c
        return QPoly(out)

    ranks = {relabel(v): X.ranks[v] for v in X.vertices()}
    edges = {}
    for (p, v), M in X.edges.items():
        edges[(perm[p], relabel(v))] = PolyMatrix(
            M.rows, M.cols, [[swap_poly(e) for e in row] for row in M.m])
    return Cube(X.ring, X.tdata, X.dirs, ranks, edges)


def base_change(X, vertex, P, Pinv):
    """Replace the basis at one vertex: maps out of it become P*M, maps
    into it become M*Pinv, with sigma^-1 applied to Pinv on twisted
    (wrap) targets.  Preserves verification exactly."""
    ring = X.ring
    out = {k: m for k, m in X.edges.items()}
    for p in range(X.dim):
        out[(p, vertex)] = pm_mul(ring, P, out[(p, vertex)])
        w = flip(vertex, p)
        incoming = out[(p, w)]
        if vertex[p] == 1:
            out[(p, w)] = pm_mul(ring, incoming, Pinv)      # forward into vertex
        else:
            siginv = X.sigma(p).inverse(ring.field)
            out[(p, w)] = pm_mul(ring, incoming, pm_sigma(ring, siginv, Pinv))
    return Cube(X.ring, X.tdata, X.dirs, dict(X.ranks), out)


# morphisms

class CubeMorphism:
    """Vertexwise matrices F^v of shape rank_X(v) x rank_Y(v)."""

    def __init__(self, source, target, components):
        if source.ring != target.ring or source.dirs != target.dirs:
            raise ValueError("morphism needs matching ring and directions")
        self.source = source
        self.target = target
        self.components = dict(components)
        for v in source.vertices():
            F = self.components.get(v)
            if F is None or F.rows != source.ranks[v] or F.cols != target.ranks[v]:
                raise ValueError("bad component at %r" % (v,))


def identity_morphism(X):
    return CubeMorphism(X, X, {v: pm_identity(X.ring, X.ranks[v]) for v in X.vertices()})


def morphism_add(f, g):
    ring = f.source.ring
    return CubeMorphism(f.source, f.target,
                        {v: pm_add(ring, f.components[v], g.components[v])
                         for v in f.source.vertices()})


def verify_morphism(f):
    """Commutation with every edge: on forward edges F^v E = D F^(v+e);
    on wrap edges the downstream component is twisted, F^v E = D sigma^-1(F^(v-e))."""
    X, Y = f.source, f.target
    ring = X.ring
    failures = []
    checks = 0
    for p in range(X.dim):
        siginv = X.sigma(p).inverse(ring.field)
        for v in X.vertices():
            w = flip(v, p)
            lhs = pm_mul(ring, f.components[v], Y.edge(p, v))
            if v[p] == 0:
                rhs = pm_mul(ring, X.edge(p, v), f.components[w])
            else:
                rhs = pm_mul(ring, X.edge(p, v), pm_sigma(ring, siginv, f.components[w]))
            checks += 1
            diff = pm_sub(ring, lhs, rhs)
            if not diff.is_zero():
                failures.append(("M:d%d@%s" % (p + 1, _bits_str(v)), diff))
    return VerifyReport(ok=not failures, checks=checks, failures=failures)


def path_matrix(X, start, end):
    """Composite of edge matrices along the lexicographically smallest
    shortest path (directions crossed in increasing position order)."""
    ring = X.ring
    M = pm_identity(ring, X.ranks[start])
    v = start
    for p in range(X.dim):
        if v[p] != end[p]:
            M = pm_mul(ring, M, X.edge(p, v))
            v = flip(v, p)
    return M


# p-null morphisms and the homotopy solver

def morphism_through_theta0(X, Y, U, V):
    """The morphism X -> Y factoring through a trivial rank-(U.cols) object
    generated at level 0: components (D_X^0 U V, U V E_Y^0).  1-dim only."""
    ring = X.ring
    UV = pm_mul(ring, U, V)
    f0 = pm_mul(ring, X.edge(0, (0,)), UV)
    f1 = pm_mul(ring, UV, Y.edge(0, (0,)))
    return CubeMorphism(X, Y, {(0,): f0, (1,): f1})


def morphism_through_theta1(X, Y, A, B):
    """The morphism X -> Y factoring through a trivial object generated at
    level 1: components (A sigma(B E_Y^1), D_X^1 sigma^-1(A) B).  1-dim only."""
    ring = X.ring
    sig = X.sigma(0)
    siginv = sig.inverse(ring.field)
    f0 = pm_mul(ring, A, pm_sigma(ring, sig, pm_mul(ring, B, Y.edge(0, (1,)))))
    f1 = pm_mul(ring, pm_mul(ring, X.edge(0, (1,)), pm_sigma(ring, siginv, A)), B)
    return CubeMorphism(X, Y, {(0,): f0, (1,): f1})


@dataclass
class HomotopyCertificate:
    s: dict               # vertex -> PolyMatrix, shape rank_X(v) x rank_Y(1-v)
    degree_bound: int


def default_homotopy_degree(f):
    """Bound covering certificates built from the cubes' own matrices."""
    X, Y = f.source, f.target
    fdeg = max((f.components[v].max_degree() for v in X.vertices()), default=0)
    total = max(fdeg, 0)
    for p in range(X.dim):
        total += max(X.max_edge_degree(p), Y.max_edge_degree(p), 0)
    return total


def _antipode(v):
    return tuple(1 - b for b in v)


def _is_commutative_type(X):
    fld = X.ring.field
    return (all(s.is_identity(fld) for s in X.tdata.sigmas)
            and all(fld.is_one(x) for x in X.tdata.xis.values()))


def _homotopy_terms_1d(f, s_matrices):
    """The two identities a genuine null-homotopy must satisfy in dim 1:
       F^0 = D_X^0 S^1 + S^0 sigma(E_Y^1)
       F^1 = S^1 E_Y^0 + D_X^1 sigma^-1(S^0)."""
    X, Y = f.source, f.target
    ring = X.ring
    sig = X.sigma(0)
    siginv = sig.inverse(ring.field)
    S0 = s_matrices[(0,)]
    S1 = s_matrices[(1,)]
    t0 = pm_add(ring, pm_mul(ring, X.edge(0, (0,)), S1),
                pm_mul(ring, S0, pm_sigma(ring, sig, Y.edge(0, (1,)))))
    t1 = pm_add(ring, pm_mul(ring, S1, Y.edge(0, (0,))),
                pm_mul(ring, X.edge(0, (1,)), pm_sigma(ring, siginv, S0)))
    return {(0,): t0, (1,): t1}


def _homotopy_terms_path(f, s_matrices):
    """Commutative any-dimension form: for each vertex a,
       F^a = sum_b  path_X(a -> b) * S^b * path_Y(antipode(b) -> a)."""
    X, Y = f.source, f.target
    ring = X.ring
    out = {}
    for a in X.vertices():
        acc = PolyMatrix.zeros(X.ranks[a], Y.ranks[a])
        for b in X.vertices():
            term = pm_mul(ring, pm_mul(ring, path_matrix(X, a, b), s_matrices[b]),
                          path_matrix(Y, _antipode(b), a))
            acc = pm_add(ring, acc, term)
        out[a] = acc
    return out


def homotopy_substitute(f, s_matrices):
    if f.source.dim == 1:
        return _homotopy_terms_1d(f, s_matrices)
    return _homotopy_terms_path(f, s_matrices)


def homotopy_solve(f, degree_bound=None):
    """Search for homotopy matrices s^v (entry degrees <= bound) expressing
    f as a null-homotopy, by exact linear algebra on the coefficients.

    Any certificate returned re-verifies symbolically; absence is
    conclusive only up to the bound.  Beyond dimension 1 only commutative
    type data is supported.
    """
    X, Y = f.source, f.target
    if X.dim >= 2 and not _is_commutative_type(X):
        raise UnsupportedConfiguration(
            "homotopy solving beyond dimension 1 needs commutative type data")
    ring = X.ring
    fld = ring.field
    if degree_bound is None:
        degree_bound = default_homotopy_degree(f)

    from .polymat import monomials_upto
    monos = monomials_upto(ring.n, degree_bound)
    unknowns = []   # (vertex, r, c, exponent)
    for v in X.vertices():
        av = _antipode(v)
        for r in range(X.ranks[v]):
            for c in range(Y.ranks[av]):
                for e in monos:
                    unknowns.append((v, r, c, e))
    if not unknowns:
        zero_s = {v: PolyMatrix.zeros(X.ranks[v], Y.ranks[_antipode(v)])
                  for v in X.vertices()}
        terms = homotopy_substitute(f, zero_s)
        ok = all(pm_sub(ring, f.components[v], terms[v]).is_zero() for v in X.vertices())
        return HomotopyCertificate(zero_s, degree_bound) if ok else None

    # equations are indexed by (vertex, row, col, monomial)
    eq_index = {}
    rows = []       # parallel to eq_index: per-unknown coefficient dicts
    rhs = []

    def eq_slot(key):
        if key not in eq_index:
            eq_index[key] = len(rows)
            rows.append({})
            rhs.append(fld.zero())
        return eq_index[key]

    for v in X.vertices():
        F = f.components[v]
        for r in range(F.rows):
            for c in range(F.cols):
                for e, coeff in F.m[r][c].terms.items():
                    rhs_slot = eq_slot((v, r, c, e))
                    rhs[rhs_slot] = coeff

    zero_s = {v: PolyMatrix.zeros(X.ranks[v], Y.ranks[_antipode(v)]) for v in X.vertices()}
    for uidx, (v, r, c, e) in enumerate(unknowns):
        s_elem = {w: zero_s[w] for w in zero_s}
        elem = PolyMatrix.zeros(X.ranks[v], Y.ranks[_antipode(v)])
        elem.m[r][c] = QPoly({e: fld.one()})
        s_elem[v] = elem
        terms = homotopy_substitute(f, s_elem)
        for w, T in terms.items():
            for i in range(T.rows):
                for j in range(T.cols):
                    for ee, coeff in T.m[i][j].terms.items():
                        slot = eq_slot((w, i, j, ee))
                        rows[slot][uidx] = fld.add(rows[slot].get(uidx, fld.zero()), coeff)

    A = KMat.zeros(fld, len(rows), len(unknowns))
    for i, rowdict in enumerate(rows):
        for j, coeff in rowdict.items():
            A.m[i][j] = coeff
    b = KMat(fld, len(rhs), 1, [[x] for x in rhs])
    res = k_solve(A, b)
    if not res.consistent:
        return None
    s_out = {v: PolyMatrix.zeros(X.ranks[v], Y.ranks[_antipode(v)]) for v in X.vertices()}
    for uidx, (v, r, c, e) in enumerate(unknowns):
        coeff = res.solution.m[uidx][0]
        if not fld.is_zero(coeff):
            s_out[v].m[r][c] = qp_add(ring, s_out[v].m[r][c], QPoly({e: coeff}))
    # a certificate is only emitted after exact resubstitution
    terms = homotopy_substitute(f, s_out)
    for v in X.vertices():
        if not pm_sub(ring, f.components[v], terms[v]).is_zero():
            return None
    return HomotopyCertificate(s_out, degree_bound)


# projectivity

def _scalar_unit(entry, field):
    """The entry as an invertible scalar, or None."""
    if len(entry.terms) != 1:
        return None
    (e, c), = entry.terms.items()
    if any(e):
        return None
    return c


def _find_pivot_1d(X):
    for p in range(X.dim):
        for v in X.vertices():
            M = X.edge(p, v)
            for r in range(M.rows):
                for c in range(M.cols):
                    u = _scalar_unit(M.m[r][c], X.ring.field)
                    if u is not None:
                        return (p, v, r, c, u)
    return None


def _delete_pair(X, v, r, w, c):
    """Drop basis vector r at v and c at w from every incident matrix."""
    ranks = dict(X.ranks)
    ranks[v] -= 1
    ranks[w] -= 1
    edges = {}
    for (p, vv), M in X.edges.items():
        out = M
        src = vv
        tgt = flip(vv, p)
        if src == v:
            out = pm_delete_row(out, r)
        if src == w:
            out = pm_delete_row(out, c)
        if tgt == v:
            out = pm_delete_col(out, r)
        if tgt == w:
            out = pm_delete_col(out, c)
        edges[(p, vv)] = out
    return Cube(X.ring, X.tdata, X.dirs, ranks, edges)


def _strip_trivial_pair_1d(work, splits):
    """Classical unit-entry elimination for 1-dimensional factorizations:
    clear the pivot row and column by base changes on the two incident
    vertices, then cancel the pair.  The factorization conditions force
    the companion matrix clean, so the cancellation is an exact split of
    a trivial rank-1 summand."""
    ring = work.ring
    fld = ring.field
    hit = _find_pivot_1d(work)
    if hit is None:
        return None
    p, v, r, c, u = hit
    w = flip(v, p)
    uinv = fld.inv(u)
    M = work.edge(p, v)
    P = pm_identity(ring, work.ranks[v])
    Pinv = pm_identity(ring, work.ranks[v])
    for r2 in range(M.rows):
        if r2 != r and not M.m[r2][c].is_zero():
            lam = qp_scale(ring, uinv, M.m[r2][c])
            P.m[r2][r] = qp_scale(ring, fld.from_int(-1), lam)
            Pinv.m[r2][r] = lam
    work = base_change(work, v, P, Pinv)
    M = work.edge(p, v)
    Z = pm_identity(ring, work.ranks[w])
    Zinv = pm_identity(ring, work.ranks[w])
    for c2 in range(M.cols):
        if c2 != c and not M.m[r][c2].is_zero():
            lam = qp_scale(ring, uinv, M.m[r][c2])
            Z.m[c][c2] = lam
            Zinv.m[c][c2] = qp_scale(ring, fld.from_int(-1), lam)
    if v[p] == 1:
        # the stored matrix is a wrap, so the target-side change is twisted
        sig = work.sigma(p)
        Q, Qinv = pm_sigma(ring, sig, Zinv), pm_sigma(ring, sig, Z)
    else:
        Q, Qinv = Zinv, Z
    work = base_change(work, w, Q, Qinv)
    splits.append({"direction": p + 1, "vertex": _bits_str(v), "row": r, "col": c})
    return _delete_pair(work, v, r, w, c)


def _find_block_summand(X):
    """A rank-1 literal block summand spanning every vertex: one basis
    index per vertex such that every edge is single-entry on that index
    pair (row and column otherwise zero), with a uniform invertible-scalar
    side per direction.  Such a block is a trivial rank-1 cube and splits
    off exactly.  Returns {vertex: index} or None."""
    fld = X.ring.field
    zero_v = (0,) * X.dim
    for k0 in range(X.ranks[zero_v]):
        assign = {zero_v: k0}
        queue = [zero_v]
        ok = True
        while queue and ok:
            v = queue.pop()
            kv = assign[v]
            for p in range(X.dim):
                M = X.edge(p, v)
                w = flip(v, p)
                nz = [j for j in range(M.cols) if not M.m[kv][j].is_zero()]
                if len(nz) != 1:
                    ok = False
                    break
                j = nz[0]
                if any(not M.m[i][j].is_zero() for i in range(M.rows) if i != kv):
                    ok = False
                    break
                if w in assign:
                    if assign[w] != j:
                        ok = False
                        break
                else:
                    assign[w] = j
                    queue.append(w)
        if not ok or len(assign) != 2 ** X.dim:
            continue
        # uniform unit side per direction
        profile_ok = True
        for p in range(X.dim):
            fwd_unit = all(
                _scalar_unit(X.edge(p, v).m[assign[v]][assign[flip(v, p)]], fld) is not None
                for v in X.vertices() if v[p] == 0)
            wrap_unit = all(
                _scalar_unit(X.edge(p, v).m[assign[v]][assign[flip(v, p)]], fld) is not None
                for v in X.vertices() if v[p] == 1)
            if not (fwd_unit or wrap_unit):
                profile_ok = False
                break
        if profile_ok:
            return assign
    return None


def _strip_block_summand(X, assign, splits):
    ranks = {v: X.ranks[v] - 1 for v in X.vertices()}
    edges = {}
    for (p, v), M in X.edges.items():
        edges[(p, v)] = pm_delete_col(pm_delete_row(M, assign[v]), assign[flip(v, p)])
    splits.append({"block": {_bits_str(v): k for v, k in assign.items()}})
    return Cube(X.ring, X.tdata, X.dirs, ranks, edges)


def projective_test(X):
    """Decide whether the cube is a direct sum of trivial rank-1 objects.

    Dimension 1 uses classical unit-entry elimination, which is an exact
    reduction.  In higher dimension rank-1 block summands with a unit
    scalar side in every direction are split off greedily.  Verdicts:

      "projective"      all ranks reach 0 through exact splits;
      "not_projective"  the reduced cube is nonzero and either every
                        remaining entry has zero constant term (no trivial
                        summand can exist over the connected graded ring),
                        or (full cubes) its total cokernel dimension is not
                        a multiple of the quotient algebra dimension (the
                        total cokernel of a trivial sum is free);
      "undetermined"    reduction stalled without a conclusive criterion.

    The witness records the sequence of splits and the reduced cube.
    """
    fld = X.ring.field
    work = X.copy()
    splits = []
    while True:
        if work.dim == 1:
            nxt = _strip_trivial_pair_1d(work, splits)
            if nxt is None:
                break
            work = nxt
        else:
            assign = _find_block_summand(work)
            if assign is None:
                break
            work = _strip_block_summand(work, assign, splits)

    if all(rk == 0 for rk in work.ranks.values()):
        return "projective", {"splits": splits, "reduced_ranks": dict(work.ranks)}
    witness = {"splits": splits, "reduced_ranks": dict(work.ranks), "reduced_cube": work}
    constant_free = all(
        fld.is_zero(e.constant_term(fld))
        for M in work.edges.values() for row in M.m for e in row)
    if constant_free:
        return "not_projective", witness
    if work.is_full():
        from .homology import tcok
        dim = tcok(work).dim
        if dim % work.ring.quotient_dim() != 0:
            witness["tcok_dim"] = dim
            return "not_projective", witness
    return "undetermined", witness


def mf0_membership(X):
    """A cube belongs to the distinguished subcategory iff each of its
    facets through the all-ones vertex is projective."""
    facets = []
    member = True
    undetermined = False
    for pos in range(X.dim):
        verdict, witness = projective_test(facet(X, pos))
        facets.append({"direction": pos + 1, "verdict": verdict})
        if verdict == "not_projective":
            member = False
        elif verdict == "undetermined":
            undetermined = True
    if not member:
        return {"member": False, "facets": facets}
    if undetermined:
        return {"member": None, "facets": facets}
    return {"member": True, "facets": facets}

"""The twisted 2x2 matrix ring attached to one power relation.

Elements are 2x2 polynomial matrices; the product deforms ordinary matrix
multiplication by the relation element w and its automorphism s:

    (a * b)_11 = a11 b11 + a12 b21 w        (a * b)_12 = a11 b12 + a12 b22
    (a * b)_21 = a21 s(b11) + a22 b21       (a * b)_22 = a21 w b12 + a22 b22

One-dimensional factorization cubes are exactly modules over this ring;
the round trip between the two presentations is checked by
`phi_psi_roundtrip`.
"""

from __future__ import annotations

from .polymat import PolyMatrix
from .qring import (QPoly, qp_add, qp_apply_aut, qp_mul, qp_scale, qp_zero,
                    random_qpoly)


class GammaContext:
    """Ring, the index of the relation variable, and its automorphism."""

    def __init__(self, ring, omega_index):
        self.ring = ring
        self.omega_index = omega_index
        from .qring import canonical_type
        self.tdata = canonical_type(ring)
        self.omega = ring.omega_poly(omega_index)
        self.sigma = self.tdata.sigmas[omega_index]

    def __eq__(self, other):
        return (isinstance(other, GammaContext) and self.ring == other.ring
                and self.omega_index == other.omega_index)


class GammaElement:
    __slots__ = ("ctx", "a11", "a12", "a21", "a22")

    def __init__(self, ctx, a11, a12, a21, a22):
        self.ctx = ctx
        self.a11 = a11
        self.a12 = a12
        self.a21 = a21
        self.a22 = a22

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def __eq__(self, other):
        return (isinstance(other, GammaElement) and self.ctx == other.ctx
                and self.entries() == other.entries())

    def __repr__(self):
        return "GammaElement(%r, %r, %r, %r)" % self.entries()

    def to_json(self):
        from .qring import qp_to_json
        ring = self.ctx.ring
        return {"context": {"ring": ring.to_json(),
                            "omega_index": self.ctx.omega_index + 1},
                "entries": [[qp_to_json(ring, self.a11), qp_to_json(ring, self.a12)],
                            [qp_to_json(ring, self.a21), qp_to_json(ring, self.a22)]]}


def gamma_zero(ctx):
    z = qp_zero()
    return GammaElement(ctx, z, z, z, z)


def gamma_one(ctx):
    from .qring import qp_one
    one = qp_one(ctx.ring)
    z = qp_zero()
    return GammaElement(ctx, one, z, z, one)


def gamma_unit(ctx, r, c, poly=None):
    from .qring import qp_one
    entries = [qp_zero()] * 4
    entries[(r - 1) * 2 + (c - 1)] = poly if poly is not None else qp_one(ctx.ring)
    return GammaElement(ctx, *entries)


def gamma_add(x, y):
    ring = x.ctx.ring
    return GammaElement(x.ctx, *[qp_add(ring, a, b) for a, b in zip(x.entries(), y.entries())])


def gamma_mul(x, y):
    """The deformed product; contexts must match."""
    if x.ctx != y.ctx:
        raise ValueError("context mismatch")
    ring = x.ctx.ring
    w = x.ctx.omega
    sig = x.ctx.sigma
    m = lambda a, b: qp_mul(ring, a, b)
    c11 = qp_add(ring, m(x.a11, y.a11), m(m(x.a12, y.a21), w))
    c12 = qp_add(ring, m(x.a11, y.a12), m(x.a12, y.a22))
    c21 = qp_add(ring, m(x.a21, qp_apply_aut(ring, sig, y.a11)), m(x.a22, y.a21))
    c22 = qp_add(ring, m(m(x.a21, w), y.a12), m(x.a22, y.a22))
    return GammaElement(x.ctx, c11, c12, c21, c22)


def sigma_tilde(x, sigma_prime, xi):
    """The induced automorphism: entrywise sigma', with the (2,1) entry
    additionally multiplied by the central scalar xi."""
    ring = x.ctx.ring
    ap = lambda f: qp_apply_aut(ring, sigma_prime, f)
    return GammaElement(x.ctx, ap(x.a11), ap(x.a12),
                        qp_scale(ring, xi, ap(x.a21)), ap(x.a22))


def gamma_scale_diag(ctx, poly, x):
    """Left multiplication by poly * I_2 through the deformed product."""
    d = GammaElement(ctx, poly, qp_zero(), qp_zero(), poly)
    return gamma_mul(d, x)


def gamma_random(ctx, rng, max_deg=2, terms=2):
    ring = ctx.ring
    return GammaElement(ctx, *[random_qpoly(ring, rng, max_deg, terms) for _ in range(4)])


# module structure on a 1-dimensional cube

class FactorizationModule:
    """Action of the twisted ring on level-1 + level-0 rows of a cube."""

    def __init__(self, X, omega_index=None):
        if X.dim != 1:
            raise ValueError("needs a 1-dimensional cube")
        self.X = X
        idx = X.var(0) if omega_index is None else omega_index
        self.ctx = GammaContext(X.ring, idx)

    def act(self, g, elem):
        """g in the twisted ring acting on (v1, v0) row-vector pairs:
        (a11 v1 + a12 (v0 D0),  a21 s(v1 D1) + a22 v0)."""
        ring = self.X.ring
        v1, v0 = elem
        sig = self.ctx.sigma
        D0 = self.X.edge(0, (0,))
        D1 = self.X.edge(0, (1,))
        t1 = _row_add(ring, _poly_row(ring, g.a11, v1),
                      _poly_row(ring, g.a12, _row_mat(ring, v0, D0)))
        tw = [qp_apply_aut(ring, sig, e) for e in _row_mat(ring, v1, D1)]
        t0 = _row_add(ring, _poly_row(ring, g.a21, tw),
                      _poly_row(ring, g.a22, v0))
        return (t1, t0)


def _poly_row(ring, poly, row):
    return [qp_mul(ring, poly, e) for e in row]


def _row_add(ring, r1, r2):
    return [qp_add(ring, a, b) for a, b in zip(r1, r2)]


def _row_mat(ring, row, M):
    out = [qp_zero() for _ in range(M.cols)]
    for i, e in enumerate(row):
        if e.is_zero():
            continue
        for j in range(M.cols):
            if not M.m[i][j].is_zero():
                out[j] = qp_add(ring, out[j], qp_mul(ring, e, M.m[i][j]))
    return out


def phi_psi_roundtrip(X, rng=None, spanning_degree=2, random_probes=3):
    """Build the four matrix-unit actions on a 1-dimensional cube, verify
    the sixteen composition axioms on a spanning set, then read the cube
    back off the actions and compare with the original.

    Returns a report dict; `ok` must hold for every verified cube.
    """
    ring = X.ring
    fld = ring.field
    mod = FactorizationModule(X)
    ctx = mod.ctx
    units = {(r, c): gamma_unit(ctx, r, c) for r in (1, 2) for c in (1, 2)}

    from .polymat import monomials_upto
    r1, r0 = X.ranks[(1,)], X.ranks[(0,)]
    probes = []
    for level, rank in ((1, r1), (0, r0)):
        for k in range(rank):
            for e in monomials_upto(ring.n, spanning_degree):
                v1 = [qp_zero() for _ in range(r1)]
                v0 = [qp_zero() for _ in range(r0)]
                mono = QPoly({e: fld.one()})
                (v1 if level == 1 else v0)[k] = mono
                probes.append((v1, v0))
    if rng is not None:
        for _ in range(random_probes):
            v1 = [random_qpoly(ring, rng, 2, 2) for _ in range(r1)]
            v0 = [random_qpoly(ring, rng, 2, 2) for _ in range(r0)]
            probes.append((v1, v0))

    failures = []
    for (r, c), e in units.items():
        for (r2, c2), f in units.items():
            ef = gamma_mul(e, f)
            for elem in probes:
                lhs = mod.act(e, mod.act(f, elem))
                rhs = mod.act(ef, elem)
                if lhs != rhs:
                    failures.append("axiom E%d%d*E%d%d" % (r, c, r2, c2))
                    break
            if failures:
                break
        if failures:
            break

    # read the edge matrices back from the unit actions on basis rows
    def recover(action_unit, src_rank, src_level, tgt_rank, tgt_level, twisted):
        M = PolyMatrix.zeros(src_rank, tgt_rank)
        sig_inv = ctx.sigma.inverse(fld)
        for k in range(src_rank):
            v1 = [qp_zero() for _ in range(r1)]
            v0 = [qp_zero() for _ in range(r0)]
            from .qring import qp_one
            (v1 if src_level == 1 else v0)[k] = qp_one(ring)
            out1, out0 = mod.act(action_unit, (v1, v0))
            img = out1 if tgt_level == 1 else out0
            for j in range(tgt_rank):
                M.m[k][j] = qp_apply_aut(ring, sig_inv, img[j]) if twisted else img[j]
        return M

    recovered_d0 = recover(units[(1, 2)], r0, 0, r1, 1, twisted=False)
    recovered_d1 = recover(units[(2, 1)], r1, 1, r0, 0, twisted=True)
    roundtrip_ok = (recovered_d0 == X.edge(0, (0,)) and recovered_d1 == X.edge(0, (1,)))
    if not roundtrip_ok:
        failures.append("roundtrip")
    return {"ok": not failures, "failures": failures,
            "recovered": (recovered_d0, recovered_d1)}

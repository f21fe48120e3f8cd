"""Extraction of layered two-term factorization data from a cube.

A cube over commutative type data yields the pair (Z0, Z1) with
Z0 = sum of the n next-to-top vertices (filtered by how many blocks are
included), Z1 = the top vertex, d = the stacked forward maps into the top,
and h_q = the direction-q wrap at the top, landing in block q.  The two
layered conditions ask the defect of each h_q against omega_q to fall into
the ideal generated by the earlier relation elements (plus, for the second
condition, the earlier blocks).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cube import UnsupportedConfiguration, _is_commutative_type
from .polymat import PolyMatrix, pm_mul, pm_scalar, pm_sub, pm_vstack
from .qring import QPoly, qp_sub
from .scalars import KMat, k_solve


@dataclass
class HigherMF:
    ring: object
    z0_blocks: list     # ranks of the n blocks of Z0, in direction order
    z1_rank: int
    d: PolyMatrix       # (sum z0_blocks) x z1_rank, vertical block stack
    h: list             # h[q]: z1_rank x z0_blocks[q], one per direction

    def to_json(self):
        from .polymat import pm_to_json
        return {"z0_blocks": list(self.z0_blocks), "z1": self.z1_rank,
                "d": pm_to_json(self.ring, self.d),
                "h": [pm_to_json(self.ring, hq) for hq in self.h]}


def extract_hmf(X):
    """Assemble (Z0, Z1; d, h_1..h_n) from a verified commutative cube."""
    if not _is_commutative_type(X):
        raise UnsupportedConfiguration("extraction needs commutative type data")
    if not X.is_full():
        raise ValueError("extraction needs a cube over every ring direction")
    n = X.dim
    top = (1,) * n
    blocks = []
    stack = None
    hs = []
    for pos in range(n):
        base = tuple(1 if k != pos else 0 for k in range(n))
        M = X.edge(pos, base)
        blocks.append(X.ranks[base])
        stack = M if stack is None else pm_vstack(stack, M)
        hs.append(X.edge(pos, top))
    return HigherMF(ring=X.ring, z0_blocks=blocks, z1_rank=X.ranks[top],
                    d=stack, h=hs)


def poly_in_ideal(ring, f, gens_vars, degree_margin=4):
    """Membership of f in the ideal generated by the relation elements of
    the listed variables.

    Pure powers are decided monomially: every monomial must be divisible
    by some x_v^(l_v).  With univariate tails (commutative rings) a
    degree-truncated exact linear solve over the monomial basis decides
    membership up to the working degree, which suffices because membership
    certificates f = sum g_v omega_v never need cofactors above
    deg f - min deg omega + margin here.
    """
    if f.is_zero():
        return True
    if not gens_vars:
        return False
    pure = all(not ring.tails[v] for v in gens_vars)
    if pure:
        for e in f.terms:
            if not any(e[v] >= ring.l[v] for v in gens_vars):
                return False
        return True
    from .polymat import monomials_upto
    from .qring import qp_mul
    fld = ring.field
    deg = f.degree() + degree_margin
    cof_monos = monomials_upto(ring.n, deg)
    columns = []
    for v in gens_vars:
        om = ring.omega_poly(v)
        for e in cof_monos:
            prod = qp_mul(ring, QPoly({e: fld.one()}), om)
            columns.append(prod)
    target_monos = sorted({e for col in columns for e in col.terms} | set(f.terms))
    index = {e: i for i, e in enumerate(target_monos)}
    A = KMat.zeros(fld, len(target_monos), len(columns))
    for j, col in enumerate(columns):
        for e, c in col.terms.items():
            A.m[index[e]][j] = c
    b = KMat.zeros(fld, len(target_monos), 1)
    for e, c in f.terms.items():
        b.m[index[e]][0] = c
    return k_solve(A, b).consistent


def check_hmf_conditions(Z):
    """The two layered conditions, for each stage q (1-based in labels):

    (4) omega_q I - d h_q, mapped through the stage, must land in the
        ideal of the earlier relation elements, entrywise;
    (5) same for omega_q I - h_q d on the stage-q part of Z0, after the
        earlier blocks (allowed freely) are projected away.

    Exact; failures name the stage and condition.
    """
    ring = Z.ring
    n = len(Z.z0_blocks)
    failures = []
    offsets = [0]
    for r in Z.z0_blocks:
        offsets.append(offsets[-1] + r)
    for q in range(n):
        earlier = list(range(q))
        # condition (4): defect on Z1
        dh = pm_mul(ring, Z.h[q],
                    _block_rows(Z.d, offsets[q], offsets[q + 1]))
        defect4 = pm_sub(ring, pm_scalar(ring, Z.z1_rank, ring.omega_poly(q)), dh)
        for row in defect4.m:
            for e in row:
                if not poly_in_ideal(ring, e, earlier):
                    failures.append(("(4)", q + 1))
                    break
            else:
                continue
            break
        # condition (5): defect on Z0_q, block-q columns only
        hd = pm_mul(ring, Z.d, Z.h[q])  # (sum blocks) x (block q rank), lands in block q
        for src in range(offsets[q + 1]):
            for c in range(Z.z0_blocks[q]):
                val = hd.m[src][c]
                want = ring.omega_poly(q) if src == offsets[q] + c else QPoly()
                defect = qp_sub(ring, want, val)
                if not poly_in_ideal(ring, defect, earlier):
                    failures.append(("(5)", q + 1))
                    break
            else:
                continue
            break
    # deduplicate, preserving order
    seen = []
    for fkey in failures:
        if fkey not in seen:
            seen.append(fkey)
    return {"ok": not seen, "failures": seen}


def _block_rows(M, lo, hi):
    return PolyMatrix(hi - lo, M.cols, [list(M.m[i]) for i in range(lo, hi)])


def hmf_module_dim(Z):
    """Dimension of the cokernel of d over the finite quotient algebra."""
    from .homology import quotient_of_linear_map
    from .polymat import pm_to_linear
    K = pm_to_linear(Z.ring, Z.d, mode="over_B")
    return quotient_of_linear_map(Z.ring, K, Z.z1_rank).dim

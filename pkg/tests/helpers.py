"""Shared builders for the test suite: random cubes, base changes,
null-homotopic morphisms."""

import itertools
import random

from factoria.cube import (Cube, base_change, direct_sum, morphism_add,
                           morphism_through_theta0, morphism_through_theta1,
                           theta_cube, verify_cube)
from factoria.polymat import PolyMatrix, pm_identity, pm_mul
from factoria.qring import (canonical_type, commutative_ring, qp_monomial,
                            qp_var, quantum_ring, random_qpoly)
from factoria.scalars import Field

F101 = Field(101)
QQ = Field()


def monomial_mf_1d(ring, var, split):
    """Rank-1 factorization of x_var^l into (x^split, x^(l-split))."""
    tdata = canonical_type(ring)
    l = ring.l[var]
    a = PolyMatrix.from_entries([[qp_var(ring, var, split)]])
    b = PolyMatrix.from_entries([[qp_var(ring, var, l - split)]])
    return Cube(ring, tdata, (var,), {(0,): 1, (1,): 1},
                {(0, (0,)): a, (0, (1,)): b})


def theta_1d(ring, var, bit, rank=1):
    """1-dimensional trivial object in one chosen direction of the ring."""
    from factoria.polymat import pm_scalar
    tdata = canonical_type(ring)
    ident = pm_identity(ring, rank)
    om = pm_scalar(ring, rank, ring.omega_poly(var))
    if bit == 0:
        edges = {(0, (0,)): ident, (0, (1,)): om}
    else:
        edges = {(0, (0,)): om, (0, (1,)): ident}
    return Cube(ring, tdata, (var,), {(0,): rank, (1,): rank}, edges)


def random_elementary(ring, rng, rank, max_deg=1):
    """Invertible transvection (P, Pinv) over the polynomial ring."""
    P = pm_identity(ring, rank)
    Pinv = pm_identity(ring, rank)
    if rank < 2:
        return P, Pinv
    r = rng.randrange(rank)
    s = rng.randrange(rank)
    while s == r:
        s = rng.randrange(rank)
    e = [0] * ring.n
    for _ in range(rng.randint(0, max_deg)):
        e[rng.randrange(ring.n)] += 1
    c = ring.field.random(rng, nonzero=True)
    P.m[r][s] = qp_monomial(ring, e, c)
    Pinv.m[r][s] = qp_monomial(ring, e, ring.field.neg(c))
    return P, Pinv


def random_base_changes(X, rng, rounds=1, max_deg=1):
    for _ in range(rounds):
        for v in X.vertices():
            P, Pinv = random_elementary(X.ring, rng, X.ranks[v], max_deg)
            X = base_change(X, v, P, Pinv)
    return X


def random_verified_1d(rng, quantum=True):
    """A random verified 1-dimensional cube: a sum of trivial objects and
    monomial factorizations, shuffled by invertible base changes."""
    if quantum:
        ring = quantum_ring(2, F101, 5, [2, 3])
        var = 1
    else:
        ring = commutative_ring(1, QQ, l=[3])
        var = 0
    parts = []
    for _ in range(rng.randint(1, 2)):
        kind = rng.randrange(3)
        if kind == 0:
            parts.append(theta_1d(ring, var, rng.randrange(2)))
        else:
            parts.append(monomial_mf_1d(ring, var, rng.randint(1, ring.l[var] - 1)))
    X = parts[0]
    for Y in parts[1:]:
        X = direct_sum(X, Y)
    X = random_base_changes(X, rng)
    assert verify_cube(X).ok
    return X


def random_pnull_morphism(X, Y, rng, max_deg=1):
    """A random morphism X -> Y factoring through trivial objects."""
    ring = X.ring
    p = rng.randint(1, 2)
    q = rng.randint(1, 2)
    U = PolyMatrix.from_entries(
        [[random_qpoly(ring, rng, max_deg, 2) for _ in range(p)]
         for _ in range(X.ranks[(1,)])])
    V = PolyMatrix.from_entries(
        [[random_qpoly(ring, rng, max_deg, 2) for _ in range(Y.ranks[(0,)])]
         for _ in range(p)])
    A = PolyMatrix.from_entries(
        [[random_qpoly(ring, rng, max_deg, 2) for _ in range(q)]
         for _ in range(X.ranks[(0,)])])
    B = PolyMatrix.from_entries(
        [[random_qpoly(ring, rng, max_deg, 2) for _ in range(Y.ranks[(1,)])]
         for _ in range(q)])
    return morphism_add(morphism_through_theta0(X, Y, U, V),
                        morphism_through_theta1(X, Y, A, B))


def all_profiles(n):
    return list(itertools.product((0, 1), repeat=n))

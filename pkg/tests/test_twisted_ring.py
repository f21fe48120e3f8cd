import random

import pytest

import helpers
from factoria.qring import (canonical_type, commutative_ring, qp_scale,
                            qp_zero, quantum_ring, qp_one)
from factoria.scalars import Field
from factoria.twisted_ring import (GammaContext, GammaElement, gamma_add,
                                   gamma_mul, gamma_one, gamma_random,
                                   gamma_scale_diag, gamma_unit,
                                   phi_psi_roundtrip, sigma_tilde)

F101 = Field(101)
QQ = Field()
RQ = quantum_ring(2, F101, 5, [2, 2])
TQ = canonical_type(RQ)
CTX = GammaContext(RQ, 1)          # relation x2^2, twisted by sigma_2


def test_matrix_unit_products():
    E12 = gamma_unit(CTX, 1, 2)
    E21 = gamma_unit(CTX, 2, 1)
    w = RQ.omega_poly(1)
    assert gamma_mul(E21, E12) == GammaElement(CTX, qp_zero(), qp_zero(), qp_zero(), w)
    assert gamma_mul(E12, E21) == GammaElement(CTX, w, qp_zero(), qp_zero(), qp_zero())


def test_unit_laws_random():
    rng = random.Random(0)
    one = gamma_one(CTX)
    for _ in range(100):
        x = gamma_random(CTX, rng)
        assert gamma_mul(one, x) == x
        assert gamma_mul(x, one) == x


def test_associativity_random_triples():
    rng = random.Random(1)
    for _ in range(300):
        x = gamma_random(CTX, rng)
        y = gamma_random(CTX, rng)
        z = gamma_random(CTX, rng)
        assert gamma_mul(gamma_mul(x, y), z) == gamma_mul(x, gamma_mul(y, z))


def test_context_mismatch_rejected():
    other = GammaContext(RQ, 0)
    with pytest.raises(ValueError):
        gamma_mul(gamma_one(CTX), gamma_one(other))


def test_sigma_tilde_fixes_one_and_scales_corner():
    sig1 = TQ.sigmas[0]
    xi = TQ.xis[(0, 1)]
    assert sigma_tilde(gamma_one(CTX), sig1, xi) == gamma_one(CTX)
    E21 = gamma_unit(CTX, 2, 1)
    out = sigma_tilde(E21, sig1, xi)
    assert out == GammaElement(CTX, qp_zero(), qp_zero(),
                               qp_scale(RQ, xi, qp_one(RQ)), qp_zero())


def test_sigma_tilde_is_a_ring_map_with_inverse():
    rng = random.Random(2)
    sig1 = TQ.sigmas[0]
    xi = TQ.xis[(0, 1)]
    inv_sig = sig1.inverse(F101)
    for _ in range(200):
        x = gamma_random(CTX, rng)
        y = gamma_random(CTX, rng)
        assert sigma_tilde(gamma_mul(x, y), sig1, xi) == \
            gamma_mul(sigma_tilde(x, sig1, xi), sigma_tilde(y, sig1, xi))
        back = sigma_tilde(sigma_tilde(x, sig1, xi), inv_sig, F101.inv(xi))
        assert back == x


def test_normality_identity_random():
    rng = random.Random(3)
    sig1 = TQ.sigmas[0]
    xi = TQ.xis[(0, 1)]
    om1 = RQ.omega_poly(0)
    diag = GammaElement(CTX, om1, qp_zero(), qp_zero(), om1)
    for _ in range(200):
        x = gamma_random(CTX, rng)
        lhs = gamma_scale_diag(CTX, om1, x)
        rhs = gamma_mul(sigma_tilde(x, sig1, xi), diag)
        assert lhs == rhs


def test_roundtrip_trivial_object():
    from factoria.cube import theta_cube
    rc = commutative_ring(1, QQ, l=[2])
    th0 = theta_cube(rc, canonical_type(rc), (0,), 1)
    rep = phi_psi_roundtrip(th0)
    assert rep["ok"]


def test_roundtrip_monomial_pair():
    rc = commutative_ring(1, QQ, l=[2])
    X = helpers.monomial_mf_1d(rc, 0, 1)
    rep = phi_psi_roundtrip(X)
    assert rep["ok"]


def test_roundtrip_random_quantum():
    rng = random.Random(4)
    for _ in range(10):
        X = helpers.random_verified_1d(rng, quantum=True)
        assert phi_psi_roundtrip(X, rng)["ok"]


def test_gamma_element_serialization():
    x = gamma_unit(CTX, 2, 1)
    data = x.to_json()
    assert data["context"]["omega_index"] == 2
    assert data["entries"][1][0] == [{"c": "1", "e": [0, 0]}]

import random
from fractions import Fraction

import pytest

from factoria.polymat import (PolyMatrix, monomials_upto, pm_from_json,
                              pm_grade_infer, pm_identity, pm_mul, pm_sigma,
                              pm_to_json, pm_to_linear)
from factoria.qring import (canonical_type, commutative_ring, qp_add,
                            qp_monomial, qp_mul, qp_sub, qp_var, quantum_ring,
                            random_qpoly, QPoly)
from factoria.scalars import Field, KMat, k_solve

QQ = Field()
F101 = Field(101)


def rand_pm(ring, rng, rows, cols, deg=2):
    return PolyMatrix.from_entries(
        [[random_qpoly(ring, rng, deg, 2) for _ in range(cols)] for _ in range(rows)])


def test_mul_identity():
    ring = quantum_ring(2, F101, 5, [2, 2])
    rng = random.Random(0)
    M = rand_pm(ring, rng, 2, 3)
    assert pm_mul(ring, M, pm_identity(ring, 3)) == M
    assert pm_mul(ring, pm_identity(ring, 2), M) == M


def test_hand_expanded_product_splits_power():
    # [[1,0],[x-y,x^2]] * [[x^2,0],[y-x,1]] == x^2 * I over two commuting vars
    ring = commutative_ring(2, QQ, l=[2, 2])
    x = qp_var(ring, 0)
    y = qp_var(ring, 1)
    x2 = qp_var(ring, 0, 2)
    A = PolyMatrix.from_entries([[qp_monomial(ring, (0, 0), Fraction(1)), QPoly()],
                                 [qp_sub(ring, x, y), x2]])
    B = PolyMatrix.from_entries([[x2, QPoly()],
                                 [qp_sub(ring, y, x),
                                  qp_monomial(ring, (0, 0), Fraction(1))]])
    prod = pm_mul(ring, A, B)
    expected = PolyMatrix.from_entries([[x2, QPoly()], [QPoly(), x2]])
    assert prod == expected


def test_entrywise_twist_and_multiplicativity():
    ring = quantum_ring(2, F101, 5, [2, 2])
    tdata = canonical_type(ring)
    sig = tdata.sigmas[0]
    M = PolyMatrix.from_entries([[qp_var(ring, 1)]])
    # sigma_1(x2) = q12^(l1) x2 = 25 x2
    assert pm_sigma(ring, sig, M).m[0][0].terms == {(0, 1): 25}
    assert pm_sigma(ring, canonical_type(ring).sigmas[1],
                    pm_identity(ring, 2)) == pm_identity(ring, 2)
    rng = random.Random(1)
    for _ in range(50):
        A = rand_pm(ring, rng, 2, 2)
        B = rand_pm(ring, rng, 2, 2)
        assert pm_sigma(ring, sig, pm_mul(ring, A, B)) == \
            pm_mul(ring, pm_sigma(ring, sig, A), pm_sigma(ring, sig, B))


def test_grade_infer_hand_example():
    # [[1,0],[x-y,x^2]]: solving 0=c1-r1, 1=c1-r2, 2=c2-r2 and shifting
    # the minimum to zero gives rows (1,0), cols (1,2)
    ring = commutative_ring(2, QQ, l=[2, 2])
    one = qp_monomial(ring, (0, 0), Fraction(1))
    M = PolyMatrix.from_entries([[one, QPoly()],
                                 [qp_sub(ring, qp_var(ring, 0), qp_var(ring, 1)),
                                  qp_var(ring, 0, 2)]])
    g = pm_grade_infer(M)
    assert g is not None
    assert g.row_degrees == [1, 0]
    assert g.col_degrees == [1, 2]


def test_grade_infer_zero_and_inhomogeneous():
    ring = commutative_ring(2, QQ, l=[2, 2])
    g = pm_grade_infer(PolyMatrix.zeros(2, 3))
    assert g is not None and g.row_degrees == [0, 0] and g.col_degrees == [0, 0, 0]
    one_plus_x = qp_add(ring, qp_monomial(ring, (0, 0), Fraction(1)), qp_var(ring, 0))
    assert pm_grade_infer(PolyMatrix.from_entries([[one_plus_x]])) is None


def test_grade_infer_products_compose():
    ring = commutative_ring(2, QQ, l=[2, 2])
    rng = random.Random(2)
    for _ in range(30):
        # homogeneous random matrices glue to gradable products
        def hom(rows, cols, d):
            out = PolyMatrix.zeros(rows, cols)
            for i in range(rows):
                for j in range(cols):
                    e = [0, 0]
                    for _ in range(d):
                        e[rng.randrange(2)] += 1
                    out.m[i][j] = qp_monomial(ring, e, QQ.random(rng))
            return out
        A = hom(2, 2, 1)
        B = hom(2, 2, 2)
        P = pm_mul(ring, A, B)
        if P.is_zero():
            continue
        assert pm_grade_infer(P) is not None


def test_linearize_single_variable_action():
    # over one variable with l=2 the map v -> v*[x] sends basis {1, x} to {x, 0}
    ring = commutative_ring(1, QQ, l=[2])
    M = PolyMatrix.from_entries([[qp_var(ring, 0)]])
    K = pm_to_linear(ring, M, mode="over_B")
    assert K.rows == 2 and K.cols == 2
    assert K.m[0] == [Fraction(0), Fraction(1)]
    assert K.m[1] == [Fraction(0), Fraction(0)]


def test_linearize_identity_and_omega():
    ring = quantum_ring(2, F101, 5, [2, 2])
    K = pm_to_linear(ring, pm_identity(ring, 1), mode="over_B")
    assert K == KMat.identity(F101, 4)
    ring1 = commutative_ring(1, QQ, l=[1])
    Kw = pm_to_linear(ring1, PolyMatrix.from_entries([[qp_var(ring1, 0)]]),
                      mode="over_B")
    assert k_solve(Kw).rank == 0


def test_linearize_functorial():
    rng = random.Random(3)
    for ring in (quantum_ring(2, F101, 5, [2, 2]), commutative_ring(2, QQ, l=[2, 2])):
        for _ in range(20):
            A = rand_pm(ring, rng, 2, 2, deg=1)
            B = rand_pm(ring, rng, 2, 2, deg=1)
            lhs = pm_to_linear(ring, pm_mul(ring, A, B), mode="over_B")
            rhs = pm_to_linear(ring, A, mode="over_B").mul(
                pm_to_linear(ring, B, mode="over_B"))
            assert lhs == rhs


def test_linearize_truncated_shape():
    ring = commutative_ring(2, QQ, l=[2, 2])
    M = PolyMatrix.from_entries([[qp_var(ring, 0)]])
    K = pm_to_linear(ring, M, mode="truncated", degree=2)
    nb = len(monomials_upto(2, 2))
    assert K.rows == nb and K.cols == nb


def test_column_orientation_rejected_noncommutative():
    ring = quantum_ring(2, F101, 5, [2, 2])
    data = pm_to_json(ring, pm_identity(ring, 2), orientation="row")
    data["orientation"] = "column"
    with pytest.raises(ValueError):
        pm_from_json(ring, data)


def test_matrix_json_roundtrip_both_orientations():
    ring = commutative_ring(2, QQ, l=[2, 2])
    rng = random.Random(4)
    M = rand_pm(ring, rng, 2, 3)
    for orientation in ("row", "column"):
        data = pm_to_json(ring, M, orientation=orientation)
        assert pm_from_json(ring, data) == M

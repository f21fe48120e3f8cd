import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from factoria.scalars import Field, KMat, k_solve, rref, xgcd

QQ = Field()
F7 = Field(7)
F101 = Field(101)


def test_field_modulus_validation():
    Field(2)
    Field(101)
    with pytest.raises(ValueError):
        Field(1)
    with pytest.raises(ValueError):
        Field(10)


def test_basic_fraction_arithmetic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert QQ.show(Fraction(-4, 6)) == "-2/3"
    assert QQ.show(Fraction(5)) == "5"


def test_basic_modular_arithmetic():
    assert F7.mul(3, 5) == 1
    assert F7.parse("12") == 5
    assert F101.inv(5) == 81


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.div(Fraction(1), Fraction(0))


@given(st.fractions(), st.fractions())
def test_field_axioms_rationals(a, b):
    assert QQ.add(a, b) == QQ.add(b, a)
    assert QQ.sub(QQ.add(a, b), b) == a
    if b != 0:
        assert QQ.mul(QQ.div(a, b), b) == a


def test_self_division_is_one():
    rng = random.Random(0)
    for field in (QQ, F7, F101):
        for _ in range(50):
            x = field.random(rng, nonzero=True)
            assert field.div(x, x) == field.one()


def test_fermat_agrees_with_xgcd_on_1000_elements():
    rng = random.Random(1)
    for _ in range(1000):
        a = F101.random(rng, nonzero=True)
        assert F101.fermat_inv(a) == F101.inv(a)


def test_xgcd_identity():
    rng = random.Random(2)
    for _ in range(200):
        a, b = rng.randint(-500, 500), rng.randint(-500, 500)
        g, s, t = xgcd(a, b)
        assert s * a + t * b == g
        assert g >= 0


def test_solve_identity_and_zero():
    I3 = KMat.identity(QQ, 3)
    res = k_solve(I3)
    assert res.rank == 3 and res.nullspace.cols == 0
    Z = KMat.zeros(QQ, 2, 3)
    res = k_solve(Z)
    assert res.rank == 0 and res.nullspace.cols == 3


def test_rank_one_matrix_hand_reduced():
    # [[1,2],[2,4]]: row2 - 2*row1 = 0, so the rank is 1
    M = KMat.from_rows(QQ, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    res = k_solve(M)
    assert res.rank == 1
    assert res.nullspace.cols == 1
    v = [res.nullspace.m[i][0] for i in range(2)]
    assert QQ.add(QQ.mul(M.m[0][0], v[0]), QQ.mul(M.m[0][1], v[1])) == 0


def test_rank_plus_nullity_random():
    rng = random.Random(3)
    for field in (QQ, F101):
        for _ in range(40):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            M = KMat.from_rows(field, [[field.random(rng) for _ in range(cols)]
                                       for _ in range(rows)])
            res = k_solve(M)
            assert res.rank + res.nullspace.cols == cols
            if res.nullspace.cols:
                assert M.mul(res.nullspace).is_zero()


def test_solve_consistent_and_inconsistent():
    M = KMat.from_rows(F7, [[1, 2], [2, 4]])
    t_good = KMat.from_rows(F7, [[1], [2]])
    res = k_solve(M, t_good)
    assert res.consistent and M.mul(res.solution) == t_good
    t_bad = KMat.from_rows(F7, [[1], [0]])
    res = k_solve(M, t_bad)
    assert not res.consistent and res.solution is None


def test_canonical_forms_closed_under_ops():
    rng = random.Random(4)
    for _ in range(200):
        a, b = QQ.random(rng), QQ.random(rng, nonzero=True)
        for val in (QQ.add(a, b), QQ.mul(a, b), QQ.div(a, b)):
            assert val.denominator > 0
        x, y = F101.random(rng), F101.random(rng)
        for val in (F101.add(x, y), F101.mul(x, y), F101.sub(x, y)):
            assert 0 <= val < 101


def test_rref_is_reduced():
    M = KMat.from_rows(QQ, [[Fraction(2), Fraction(4), Fraction(2)],
                            [Fraction(1), Fraction(2), Fraction(3)]])
    R, pivots = rref(M)
    for i, c in enumerate(pivots):
        assert R.m[i][c] == 1
        for i2 in range(R.rows):
            if i2 != i:
                assert R.m[i2][c] == 0


def test_field_ops_dispatcher_and_mixed_operands():
    from factoria.scalars import field_ops
    assert field_ops(QQ, Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert field_ops(F7, 3, 5, "mul") == 1
    with pytest.raises(ZeroDivisionError):
        field_ops(F7, 3, 0, "div")
    with pytest.raises(ValueError):
        field_ops(F7, 3, Fraction(1, 2), "add")     # mixed-field operands
    with pytest.raises(ValueError):
        field_ops(QQ, Fraction(1), 2, "add")
    with pytest.raises(ValueError):
        field_ops(QQ, Fraction(1), Fraction(2), "pow")

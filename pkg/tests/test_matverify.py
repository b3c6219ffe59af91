import random
from fractions import Fraction

import pytest

from galcoh import matverify as mv
from galcoh.errors import (
    NotACocycleForStructure,
    NotSL,
    NotSymmetric,
    Singular,
)


def test_gaussian_rational_field_ops():
    a = mv.gr(Fraction(1, 2), 3)
    b = mv.gr(2, Fraction(-1, 3))
    assert (a * b) / b == a
    assert a + b - b == a
    assert (a * a.conj()).im == 0
    with pytest.raises(ZeroDivisionError):
        a / mv.ZERO


def test_determinant_and_inverse():
    rng = random.Random(20)
    for _ in range(20):
        g = mv.random_invertible(rng, 3)
        gi = mv.inverse(g)
        assert mv.mat_eq(mv.mmul(g, gi), mv.identity(3))
        d = mv.determinant(g)
        di = mv.determinant(gi)
        assert (d * di - mv.ONE).is_zero()
    with pytest.raises(Singular):
        mv.inverse(mv.matrix([[mv.ONE, mv.ONE], [mv.ONE, mv.ONE]]))


def test_unitary_check_examples():
    J4 = mv.identity(4)
    assert mv.unitary_check(mv.identity(4), J4)
    assert mv.unitary_check(mv.diagonal([mv.I_UNIT, -mv.I_UNIT, mv.ONE, mv.ONE]), J4)
    g = mv.diagonal([mv.gr(2), mv.ONE / mv.gr(2), mv.ONE, mv.ONE])
    assert not mv.unitary_check(g, J4)
    with pytest.raises(NotSL):
        mv.unitary_check(mv.diagonal([mv.gr(2), mv.ONE, mv.ONE, mv.ONE]), J4)


def test_hermitian_form_validation():
    with pytest.raises(NotSymmetric):
        mv.HermitianForm(mv.matrix([[mv.ZERO, mv.ONE], [-mv.ONE, mv.ZERO]]))
    with pytest.raises(Singular):
        mv.HermitianForm(mv.matrix([[mv.ONE, mv.ONE], [mv.ONE, mv.ONE]]))
    # i on the off-diagonal is Hermitian when mirrored by -i
    mv.HermitianForm(mv.matrix([[mv.ONE, mv.I_UNIT], [-mv.I_UNIT, mv.gr(2)]]))


def test_structure_involution_and_diagonal_example():
    S = mv.SemilinearStructure(mv.HermitianForm(mv.i22(4)))
    g = mv.diagonal([mv.gr(2), mv.ONE / mv.gr(2), mv.ONE, mv.ONE])
    assert mv.mat_eq(
        mv.apply_structure(S, g),
        mv.diagonal([mv.ONE / mv.gr(2), mv.gr(2), mv.ONE, mv.ONE]),
    )
    rng = random.Random(21)
    for _ in range(10):
        h = mv.random_invertible(rng, 4)
        assert mv.mat_eq(S(S(h)), h)


def test_twist_structure_cocycle_condition():
    S22 = mv.SemilinearStructure(mv.HermitianForm(mv.i22(4)))
    # the split form itself is a structure cocycle
    tw = mv.twist_structure(S22, mv.i22(4))
    S4 = mv.SemilinearStructure(mv.HermitianForm(mv.identity(4)))
    rng = random.Random(22)
    for _ in range(10):
        g = mv.random_invertible(rng, 4)
        assert mv.mat_eq(tw(g), S4(g))
    # ctilde = diag(i,1,1,1) has ctilde * S(ctilde) = diag(-1,1,1,1) and
    # is rejected
    bad = mv.diagonal([mv.I_UNIT, mv.ONE, mv.ONE, mv.ONE])
    with pytest.raises(NotACocycleForStructure):
        mv.twist_structure(S22, bad)


def test_transporter_check():
    with pytest.raises(NotSL):
        mv.transporter_check(
            mv.diagonal([mv.ONE, mv.ONE, mv.I_UNIT, mv.I_UNIT])
        )
    # the identity has transporter value I4, not the split form
    assert not mv.transporter_check(mv.identity(4))
    assert mv.transporter_check(mv.identity(4), target=mv.identity(4))


def test_signature_examples():
    assert mv.signature(mv.identity(4)) == (4, 0, 0)
    assert mv.signature(mv.i22(4)) == (2, 2, 0)
    assert mv.signature(mv.diagonal([mv.ONE, mv.ZERO])) == (1, 0, 1)
    # hyperbolic plane: zero diagonal, off-diagonal 1 -> signature (1,1,0)
    hyp = mv.matrix([[mv.ZERO, mv.ONE], [mv.ONE, mv.ZERO]])
    assert mv.signature(hyp) == (1, 1, 0)
    with pytest.raises(NotSymmetric):
        mv.signature(mv.matrix([[mv.ONE, mv.ONE], [mv.ZERO, mv.ONE]]))
    with pytest.raises(NotSymmetric):
        mv.signature(mv.matrix([[mv.I_UNIT]]))


def test_signature_is_congruence_invariant():
    rng = random.Random(23)
    for _ in range(10):
        p = mv.random_real_invertible(rng, 3)
        base = mv.diagonal([mv.ONE, -mv.ONE, mv.ONE])
        congruent = mv.mmul(mv.mmul(p, base), mv.conj_transpose(p))
        assert mv.signature(congruent) == (2, 1, 0)


def test_special_unitary_sampler():
    rng = random.Random(24)
    for J in (mv.identity(4), mv.i22(4)):
        for _ in range(5):
            g = mv.random_special_unitary(rng, J)
            assert mv.unitary_check(g, J)
            assert (mv.determinant(g) - mv.ONE).is_zero()


def test_verify_example_small():
    checks = mv.verify_example(seed=5, samples=5)
    assert all(c["passed"] for c in checks)
    names = {c["check"] for c in checks}
    assert "twisted_structure_is_definite_structure" in names
    assert "no_real_points_signature_obstruction" in names


def test_json_round_trip():
    a = mv.gr(Fraction(-3, 7), Fraction(5, 2))
    j = a.to_json()
    assert mv.gr_from_json(j) == a
    with pytest.raises(Exception):
        mv.gr_from_json({"re": "1/0"})

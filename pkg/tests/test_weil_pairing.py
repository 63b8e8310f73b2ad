import pytest
from hypothesis import given, settings, strategies as st

from isogeny_descent.elliptic_curves import Curve, point_mul, torsion_basis
from isogeny_descent.isogenies import velu, identity_isogeny
from isogeny_descent.weil_pairing import (
    PairingError,
    is_maximal_isotropic,
    pairing_axiom_suite,
    weil_pairing,
)

E11 = Curve.from_ints(11, 1, 0)
E7 = Curve.from_ints(7, 1, 0)


def test_self_pairing_trivial():
    B = torsion_basis(E7, 3)
    assert weil_pairing(B.curve, 3, B.P, B.P).is_one()


def test_two_torsion_pairing_is_minus_one():
    B = torsion_basis(E11, 2)
    K = B.field
    Q = B.curve(K([0, 1]), K(0))
    assert weil_pairing(B.curve, 2, B.P, Q).value == K(-1)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(7, 3), (11, 3), (7, 4), (19, 5)]), st.data())
def test_bilinear_alternating(case, data):
    p, n = case
    B = torsion_basis(Curve.from_ints(p, 1, 0), n)
    C = B.curve
    a, b, c, d = (data.draw(st.integers(0, n - 1)) for _ in range(4))
    R = point_mul(B.P, a) + point_mul(B.Q, b)
    S = point_mul(B.P, c) + point_mul(B.Q, d)
    e = weil_pairing(C, n, B.P, B.Q)
    assert weil_pairing(C, n, R, S) == e ** ((a * d - b * c) % n)
    assert (weil_pairing(C, n, R, S) * weil_pairing(C, n, S, R)).is_one()


def test_pairing_rejects_non_torsion():
    B = torsion_basis(E7, 3)
    with pytest.raises(PairingError):
        weil_pairing(B.curve, 2, B.P, B.Q)


def test_points_of_smaller_order():
    B = torsion_basis(E7, 4)
    T = point_mul(B.P, 2)
    assert weil_pairing(B.curve, 4, T, B.Q) == weil_pairing(B.curve, 4, B.P, B.Q) ** 2


def test_maximal_isotropic():
    B = torsion_basis(E7, 3)
    assert is_maximal_isotropic(B.curve, 3, [B.P])
    assert not is_maximal_isotropic(B.curve, 3, [B.P, B.Q])
    B4 = torsion_basis(E7, 4)
    assert not is_maximal_isotropic(B4.curve, 4, [point_mul(B4.P, 2)])


def test_axiom_suite_identity_isogeny():
    B = torsion_basis(E7, 3)
    rep = pairing_axiom_suite(E7, 3, B, [identity_isogeny(B.curve)])
    assert rep.ok


def test_axiom_suite_degree_two_level_five():
    E = Curve.from_ints(19, 1, 0)
    f = velu(E, E(E.field(0), E.field(0)))
    B = torsion_basis(E, 5)
    rep = pairing_axiom_suite(E, 5, B, [f])
    assert rep.ok, rep.failures
    fP, fQ = f.evaluate(B.P), f.evaluate(B.Q)
    assert weil_pairing(fP.curve, 5, fP, fQ) == weil_pairing(B.curve, 5, B.P, B.Q) ** 2


@pytest.mark.parametrize("p,n", [(7, 3), (11, 5), (13, 3), (23, 3)])
def test_frobenius_equivariance(p, n):
    E = Curve.from_ints(p, 1, 0)
    B = torsion_basis(E, n)
    lhs = weil_pairing(B.curve, n, B.P, B.Q).value.frobenius(1)
    rhs = weil_pairing(B.curve, n, B.P.frobenius(1), B.Q.frobenius(1)).value
    assert lhs == rhs

import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from isogeny_descent.elliptic_curves import TorsionMatrix
from isogeny_descent.experiment_harness import quat_golden_lines
from isogeny_descent.quaternions import (
    QuadraticSubfield,
    Quaternion,
    QuaternionError,
    conjugation_example_report,
    conjugation_map,
    phi_j_closed_form,
    quat_conj,
    quat_inv,
    quat_mul,
    torsion_representation,
)

GOLDEN = Path(__file__).parent / "golden" / "quat_example.jsonl"
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def quats(p):
    return st.builds(lambda a, b, c, d: Quaternion.of(p, a, b, c, d), fractions, fractions, fractions, fractions)


def test_basis_relations():
    p = 11
    one, i, j, ij = Quaternion.basis(p)
    assert i * i == -one
    assert j * j == one * (-p)
    assert i * j == ij
    assert j * i == -ij
    assert ij * ij == one * (-p)
    assert j.norm() == p


@pytest.mark.parametrize("n", range(0, 8))
def test_inverse_of_one_plus_ni(n):
    f = Quaternion.of(11, 1, n)
    assert quat_inv(f) == Quaternion.of(11, Fraction(1, n * n + 1), Fraction(-n, n * n + 1))


def test_conjugation_examples():
    p = 11
    one, i, j, ij = Quaternion.basis(p)
    assert conjugation_map(one, j) == j
    assert conjugation_map(i, j) == -j
    assert conjugation_map(one + i * 5, j) == Quaternion.of(p, 0, 0, Fraction(-12, 13), Fraction(-5, 13))


def test_example_report_eleven_five():
    r = conjugation_example_report(11, 5)
    assert r["phi_j"] == ["0", "0", "-12/13", "-5/13"]
    assert r["phi_j_squared"] == ["-11", "0", "0", "0"]
    assert r["subfields_distinct"] and r["phi_j_matches_closed_form"]


def test_example_report_n_zero():
    r = conjugation_example_report(11, 0)
    assert r["phi_j"] == ["0", "0", "1", "0"]
    assert not r["subfields_distinct"]


def test_report_rejects_bad_prime():
    with pytest.raises(QuaternionError):
        conjugation_example_report(13, 2)


@pytest.mark.parametrize("p", [7, 11, 19, 23])
@pytest.mark.parametrize("n", range(1, 8))
def test_ij_coordinate_nonzero(p, n):
    phi = conjugation_map(Quaternion.of(p, 1, n), Quaternion.basis(p)[2])
    assert phi.coords[3] == Fraction(-2 * n, n * n + 1) != 0
    assert phi == phi_j_closed_form(p, n)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([7, 11, 19]), st.data())
def test_algebra_laws(p, data):
    x, y, z = (data.draw(quats(p)) for _ in range(3))
    assert quat_mul(quat_mul(x, y), z) == quat_mul(x, quat_mul(y, z))
    assert (x * y).norm() == x.norm() * y.norm()
    assert quat_conj(x * y) == quat_conj(y) * quat_conj(x)
    assert (x + quat_conj(x)).is_rational()
    if not x.is_zero():
        assert x * quat_inv(x) == Quaternion.of(p, 1)
        assert conjugation_map(x, y * z) == conjugation_map(x, y) * conjugation_map(x, z)


def test_quadratic_subfield_membership():
    p = 11
    one, i, j, ij = Quaternion.basis(p)
    Z = QuadraticSubfield(j)
    assert Z.contains(one * 3 + j * Fraction(2, 5))
    assert not Z.contains(i)
    assert Z.square_class() == -p
    with pytest.raises(QuaternionError):
        QuadraticSubfield(one)


@pytest.mark.parametrize("n", [3, 5])
def test_torsion_representation(n):
    p = 11
    one, i, j, ij = Quaternion.basis(p)
    I = TorsionMatrix.identity(n)
    assert torsion_representation(p, n, one) == I
    Mi, Mj = torsion_representation(p, n, i), torsion_representation(p, n, j)
    assert Mj * Mj == TorsionMatrix.scalar(n, -p)
    assert torsion_representation(p, n, ij) == Mi * Mj


def test_golden_file_is_reproduced():
    lines = quat_golden_lines()
    assert GOLDEN.read_text() == "\n".join(lines) + "\n"
    for line in lines:
        r = json.loads(line)
        assert r["phi_j_matches_closed_form"] and r["phi_j_squared_is_minus_p"]
        assert r["subfields_distinct"] and r["both_isomorphic_to_Q_sqrt_minus_p"]

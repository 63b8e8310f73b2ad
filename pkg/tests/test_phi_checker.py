import json
from pathlib import Path

import pytest

from isogeny_descent.elliptic_curves import Curve, group_structure, point_mul, subgroup_closure, torsion_basis
from isogeny_descent.isogenies import endo_from_recipe, identity_isogeny, velu
from isogeny_descent.phi_checker import (
    CLAUSES,
    PhiInstance,
    PhiInstanceError,
    check_phi,
    instance_from_json,
    load_instance,
)

DATA = Path(__file__).parent / "data" / "phi_instance_p11.json"
E11 = Curve.from_ints(11, 1, 0)


def order_six_point():
    gs = group_structure(E11)
    return point_mul(gs.generators[1], 2)


def test_example_instance_passes():
    T = order_six_point()
    f = endo_from_recipe(E11, "1 + 6i")
    rep = check_phi(PhiInstance(E11, E11, 2, 6, f, [T], [T]))
    assert rep.overall, rep.as_dict()
    assert rep.degree == 37


def test_level_one_fails_field_clause():
    T = order_six_point()
    f = endo_from_recipe(E11, "1 + 6i")
    rep = check_phi(PhiInstance(E11, E11, 1, 6, f, [T], [T]))
    assert rep.failed() == ["c"]


def test_degree_sharing_factor_with_n_fails():
    # deg(1 + 3i) = 10 shares the factor 2 with n = 6
    T = order_six_point()
    f = endo_from_recipe(E11, "1 + 3i")
    rep = check_phi(PhiInstance(E11, E11, 2, 6, f, [T], [T]))
    assert "c" in rep.failed()
    assert "gcd" in rep.clauses["c"].witness


def test_unstable_level_subgroup_fails():
    B = torsion_basis(E11, 3)
    g = next(R for R in B.elements()
             if R.x is not None and R.frobenius(1).key() not in {S.key() for S in subgroup_closure([R])})
    f = identity_isogeny(E11)
    rep = check_phi(PhiInstance(E11, E11, 1, 3, f, [g], [g]))
    assert not rep.clauses["e"].ok and not rep.clauses["f"].ok
    assert "Frobenius" in rep.clauses["e"].witness


def test_characteristic_dividing_level():
    f = identity_isogeny(E11)
    rep = check_phi(PhiInstance(E11, E11, 1, 11, f, [], []))
    assert not rep.clauses["b"].ok


def test_f_must_match_curves():
    with pytest.raises(PhiInstanceError):
        PhiInstance(E11, Curve.from_ints(11, 2, 1), 1, 3, identity_isogeny(E11), [], [])


def test_velu_image_mismatch_detected():
    T = order_six_point()
    f = velu(E11, point_mul(T, 2))  # degree 3, coprime to n = 2
    rep = check_phi(PhiInstance(E11, f.codomain, 1, 2, f, [point_mul(T, 3)], [f.codomain.identity]))
    assert not rep.clauses["f"].ok
    assert "differs" in rep.clauses["f"].witness


def test_json_instance_roundtrip():
    inst = load_instance(str(DATA))
    rep = check_phi(inst)
    assert rep.overall
    assert set(rep.as_dict()["clauses"]) == set(CLAUSES)


def test_product_instances_unsupported():
    data = json.loads(DATA.read_text())
    data["factors"] = [[1, 0], [1, 0]]
    with pytest.raises(PhiInstanceError):
        instance_from_json(data)

import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from isogeny_descent.elliptic_curves import Curve, frobenius_trace
from isogeny_descent.frobenius_algebra import (
    FrobeniusData,
    ProductVariety,
    center_data,
    center_inclusion_check,
    fundamental_discriminant,
    is_coarsening,
    isotypic_partition,
    l_connected_components,
    linear_disjointness_check,
    tate_isogenous,
    trace_at_level,
    zeta_embedding_check,
)

from oracles import count_prime_field

E11 = Curve.from_ints(11, 1, 0)


def twist(E, d):
    return Curve(E.field, E.a * d * d, E.b * d * d * d)


def test_fundamental_discriminant():
    assert fundamental_discriminant(-44) == -11
    assert fundamental_discriminant(-27) == -3
    assert fundamental_discriminant(-28) == -7
    assert fundamental_discriminant(-4) == -4
    with pytest.raises(ValueError):
        fundamental_discriminant(9)


def test_tate_examples():
    assert tate_isogenous(E11, E11, 1)
    assert tate_isogenous(E11, Curve.from_ints(11, 0, 1), 1)
    assert not tate_isogenous(Curve.from_ints(5, 1, 0), Curve.from_ints(5, 1, 1), 1)


def test_center_data_examples():
    d1 = center_data(E11, 1)
    assert d1.disc == -44 and d1.fundamental_disc == -11
    d2 = center_data(E11, 2)
    assert d2.t == -22 and d2.is_rational and d2.rational_value == -11
    d5 = center_data(Curve.from_ints(5, 1, 1), 1)
    assert d5.disc == -11 and d5.center_kind == "imaginary-quadratic"


def test_center_inclusion():
    E = Curve.from_ints(5, 1, 1)
    assert center_inclusion_check(E, 1, 1)
    assert center_inclusion_check(E11, 1, 2)
    assert center_inclusion_check(E, 1, 3)
    assert center_data(E, 3).fundamental_disc == center_data(E, 1).fundamental_disc


def test_trace_at_level_descends():
    from isogeny_descent.finite_fields import GF
    E2 = E11.over(GF(11, 2))
    assert trace_at_level(E2, 2) == -22
    assert trace_at_level(E11, 4) == 2 * 11**2


def test_zeta_embedding():
    assert zeta_embedding_check(E11, 1, 2)
    assert not zeta_embedding_check(E11, 1, 4)
    # trace 1 over F_7: disc -27, fundamental -3
    a, b = next((a, b) for a in range(7) for b in range(7)
                if (4 * a**3 + 27 * b**2) % 7 and count_prime_field(7, a, b) == 7)
    E = Curve.from_ints(7, a, b)
    assert frobenius_trace(E) == 1
    assert zeta_embedding_check(E, 1, 3)


def test_linear_disjointness():
    assert linear_disjointness_check(E11, 1, 2) == "contains"
    assert linear_disjointness_check(E11, 1, 3) == "disjoint"
    assert linear_disjointness_check(Curve.from_ints(7, 1, 0), 1, 7) == "neither"


def test_single_and_repeated_factors():
    E = Curve.from_ints(13, 2, 5)
    F = Curve.from_ints(13, 1, 1)
    assert frobenius_trace(E) != frobenius_trace(F)
    assert isotypic_partition(ProductVariety((E,)), 1).blocks == ((0,),)
    assert isotypic_partition(ProductVariety((E, E, F)), 1).blocks == ((0, 1), (2,))


def test_twist_pair_merges_at_even_levels():
    E = Curve.from_ints(13, 2, 5)
    assert frobenius_trace(E) != 0
    V = ProductVariety((E, twist(E, 2)))
    assert isotypic_partition(V, 1).count == 2
    assert isotypic_partition(V, 2).count == 1
    assert isotypic_partition(V, 3).count == 2
    assert l_connected_components(V, 1, 2) == ((0, 1),)
    assert l_connected_components(V, 1, 1) == isotypic_partition(V, 1).blocks


@st.composite
def products(draw):
    p = draw(st.sampled_from([5, 7, 11, 13, 17, 19, 23]))
    k = draw(st.integers(1, 4))
    out = []
    for _ in range(k):
        a, b = draw(st.integers(0, p - 1)), draw(st.integers(0, p - 1))
        assume((4 * a**3 + 27 * b**2) % p)
        out.append(Curve.from_ints(p, a, b))
    if draw(st.booleans()):
        d = next(v for v in range(2, p) if pow(v, (p - 1) // 2, p) == p - 1)
        out.append(twist(out[0], d))
    return ProductVariety(tuple(out))


@settings(max_examples=60, deadline=None)
@given(products())
def test_partition_laws(V):
    parts = {j: isotypic_partition(V, j) for j in (1, 2, 3, 6)}
    for j1, j2 in ((1, 2), (1, 3), (2, 6), (3, 6), (1, 6)):
        assert is_coarsening(parts[j1].blocks, parts[j2].blocks)
        if parts[j1].count == parts[j2].count:
            assert parts[j1].blocks == parts[j2].blocks
        assert l_connected_components(V, j1, j2) == parts[j2].blocks


@st.composite
def hasse_pairs(draw):
    q = draw(st.sampled_from([5, 7, 11, 13, 17, 19, 23, 25, 29, 49]))
    r = math.isqrt(4 * q)
    return draw(st.integers(-r, r)), q


@settings(max_examples=60, deadline=None)
@given(hasse_pairs())
def test_charpoly_and_disc(tq):
    t, q = tq
    d = FrobeniusData(q, t)
    assert d.charpoly == (1, -t, q)
    assert d.disc == t * t - 4 * q
    assert d.is_rational == (t * t == 4 * q)

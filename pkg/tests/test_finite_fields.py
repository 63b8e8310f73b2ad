import pytest
from hypothesis import given, settings, strategies as st

from isogeny_descent.finite_fields import (
    GF,
    FieldError,
    embed,
    field_frobenius,
    is_prime,
    make_ext_field,
    restrict,
    smallest_irreducible,
    sqrt_in_field,
)

from oracles import irreducible_mod_p

PRIMES = [5, 7, 11, 13]


def test_degree_one_field_is_prime_field():
    F = make_ext_field(7, 1)
    assert F.order == 7
    assert F.modulus == (0, 1)


def test_quadratic_modulus_over_11():
    # x^2 + 1 is the lexicographically first irreducible monic quadratic mod 11
    F = GF(11, 2)
    assert F.modulus == (1, 0, 1)
    assert irreducible_mod_p(list(F.modulus), 11)
    for c0 in range(11):
        for c1 in range(11):
            if (c0, c1) < (1, 0):
                assert not irreducible_mod_p([c0, c1, 1], 11)


def test_order_of_f49():
    F = GF(7, 2)
    assert F.order == 49
    orders = {x.multiplicative_order() for x in F.elements() if x}
    assert max(orders) == 48


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("k", [2, 3, 4])
def test_modulus_is_smallest_irreducible(p, k):
    g = smallest_irreducible(p, k)
    assert irreducible_mod_p(list(g), p)


def test_frobenius_fixes_base_field():
    F = GF(11, 2)
    for v in range(11):
        assert F(v).frobenius(1) == F(v)


def test_frobenius_orbit_closes_on_generator():
    F = GF(11, 2)
    g = next(x for x in F.elements() if x and x.multiplicative_order() == 120)
    assert field_frobenius(g, 2) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10))
def test_frobenius_twice_is_identity_on_f121(a, b):
    F = GF(11, 2)
    x = F([a, b])
    assert x.frobenius(1).frobenius(1) == x
    assert x ** 121 == x
    assert x.frobenius(1) == x ** 11


def test_sqrt_examples():
    F = GF(11)
    assert sqrt_in_field(F(0)) == F(0)
    assert sqrt_in_field(F(4)) == F(2)
    assert sqrt_in_field(F(-1)) is None


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 2), st.data())
def test_sqrt_is_a_root(p, k, data):
    F = GF(p, k)
    c = data.draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k))
    x = F(c)
    r = sqrt_in_field(x)
    if r is None:
        assert not x.is_square()
    else:
        assert r * r == x


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_field_axioms(p, data):
    F = GF(p, 3)
    draw = lambda: F(data.draw(st.lists(st.integers(0, p - 1), min_size=3, max_size=3)))
    x, y, z = draw(), draw(), draw()
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    if x:
        assert x * x.inverse() == F.one
        assert x ** (F.order - 1) == F.one


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7]), st.data())
def test_embed_then_restrict_roundtrip(p, data):
    small, big = GF(p, 2), GF(p, 4)
    x = small(data.draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=2)))
    y = data.draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=2))
    y = small(y)
    assert restrict(embed(x, big), small) == x
    assert embed(x * y + x, big) == embed(x, big) * embed(y, big) + embed(x, big)


def test_restrict_rejects_elements_outside():
    big = GF(5, 2)
    with pytest.raises(FieldError):
        restrict(big([0, 1]), GF(5))


def test_is_prime_matches_sieve():
    from sympy import isprime
    assert all(is_prime(n) == isprime(n) for n in range(300))

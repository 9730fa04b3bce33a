import itertools

import pytest
from hypothesis import given, strategies as st

from spanseg.simplex import (
    ShatMorphism,
    ShatObject,
    SigmaElement,
    SimplexMap,
    codegeneracy,
    coface,
    compose_simplex,
    epsilon_component,
    eta_component,
    identity,
    in_i,
    in_w,
    injective_maps,
    is_inert,
    monotone_maps,
    pi_morphism,
    pi_object,
    psi,
    psi_morphism,
    rho,
    shat_compose,
    shat_identity,
    shat_is_cartesian,
    shat_morphisms,
    shat_objects,
    sigma_elements,
    sigma_leq,
    sigma_pushforward,
    w_triangle_factorization,
)


def sm(m, n, *values):
    return SimplexMap(m, n, tuple(values))


@st.composite
def monotone(draw, max_size=4):
    m = draw(st.integers(0, max_size))
    n = draw(st.integers(0, max_size))
    values = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return SimplexMap(m, n, tuple(values))


@st.composite
def composable_triple(draw):
    sizes = [draw(st.integers(0, 3)) for _ in range(4)]
    maps = []
    for a, b in zip(sizes, sizes[1:]):
        values = sorted(draw(st.lists(st.integers(0, b), min_size=a + 1, max_size=a + 1)))
        maps.append(SimplexMap(a, b, tuple(values)))
    return maps


def test_compose_examples():
    assert compose_simplex(identity(2), identity(2)) == identity(2)
    assert compose_simplex(sm(2, 3, 0, 1, 3), sm(1, 2, 0, 2)) == sm(1, 3, 0, 3)
    const = sm(3, 2, 0, 0, 0, 0)
    assert compose_simplex(const, sm(1, 3, 1, 2)) == sm(1, 2, 0, 0)


def test_simplex_map_rejects_bad_values():
    with pytest.raises(ValueError):
        sm(1, 2, 2, 1)
    with pytest.raises(ValueError):
        sm(1, 2, 0, 3)
    with pytest.raises(ValueError):
        sm(2, 2, 0, 1)


def test_compose_rejects_mismatched_ends():
    with pytest.raises(ValueError):
        compose_simplex(identity(2), identity(3))


@given(composable_triple())
def test_composition_is_associative(maps):
    f, g, h = maps
    assert compose_simplex(h, compose_simplex(g, f)) == compose_simplex(compose_simplex(h, g), f)


@given(monotone())
def test_identity_is_neutral(f):
    assert compose_simplex(identity(f.codomain_size), f) == f
    assert compose_simplex(f, identity(f.domain_size)) == f


def test_inert_examples():
    assert is_inert(identity(3))
    assert is_inert(sm(1, 3, 1, 2))
    assert not is_inert(sm(1, 0, 0, 0))
    assert not is_inert(sm(1, 3, 0, 2))


def test_rho_examples():
    assert rho(0, 4, 4) == identity(4)
    assert rho(1, 3, 4) == sm(2, 4, 1, 2, 3)
    assert rho(2, 2, 5) == sm(0, 5, 2)
    with pytest.raises(ValueError):
        rho(3, 1, 4)


def test_inert_maps_are_exactly_the_rhos():
    for n in range(5):
        inert = {f for m in range(n + 1) for f in monotone_maps(m, n) if is_inert(f)}
        assert inert == {rho(i, j, n) for i in range(n + 1) for j in range(i, n + 1)}


def test_monotone_map_counts():
    # monotone [m] -> [n] are multisets of size m+1 from n+1 values
    from math import comb
    for m in range(4):
        for n in range(4):
            assert len(list(monotone_maps(m, n))) == comb(n + m + 1, m + 1)
            assert len(list(injective_maps(m, n))) == comb(n + 1, m + 1)


def test_cosimplicial_identities():
    # coface(n, k): [n-1] -> [n], codegeneracy(n, k): [n+1] -> [n]
    for n in range(1, 4):
        for i, j in itertools.combinations(range(n + 2), 2):
            assert compose_simplex(coface(n + 1, j), coface(n, i)) == \
                compose_simplex(coface(n + 1, i), coface(n, j - 1))
        for i in range(n + 1):
            for j in range(i, n + 1):
                assert compose_simplex(codegeneracy(n, j), codegeneracy(n + 1, i)) == \
                    compose_simplex(codegeneracy(n, i), codegeneracy(n + 1, j + 1))
        for i in range(n):
            assert compose_simplex(codegeneracy(n - 1, i), coface(n, i)) == identity(n - 1)
            assert compose_simplex(codegeneracy(n - 1, i), coface(n, i + 1)) == identity(n - 1)


def test_sigma_order():
    assert sigma_leq(SigmaElement(3, 0, 3), SigmaElement(3, 1, 2))
    assert not sigma_leq(SigmaElement(3, 1, 2), SigmaElement(3, 0, 3))
    assert sigma_leq(SigmaElement(3, 1, 2), SigmaElement(3, 1, 2))
    assert len(sigma_elements(3)) == 10


def test_sigma_order_is_a_partial_order():
    for n in range(4):
        els = sigma_elements(n)
        for a, b in itertools.product(els, repeat=2):
            if sigma_leq(a, b) and sigma_leq(b, a):
                assert a == b
        for a, b, c in itertools.product(els, repeat=3):
            if sigma_leq(a, b) and sigma_leq(b, c):
                assert sigma_leq(a, c)


def test_pushforward_examples():
    a = SigmaElement(2, 1, 2)
    assert sigma_pushforward(identity(2), a) == a
    assert sigma_pushforward(sm(2, 3, 0, 1, 3), a) == SigmaElement(3, 1, 3)
    assert sigma_pushforward(sm(2, 3, 0, 0, 0), a) == SigmaElement(3, 0, 0)


def test_pushforward_is_monotone():
    for phi in monotone_maps(2, 3):
        els = sigma_elements(2)
        for a, b in itertools.product(els, repeat=2):
            if sigma_leq(a, b):
                assert sigma_leq(sigma_pushforward(phi, a), sigma_pushforward(phi, b))


PHI = sm(2, 3, 0, 1, 3)


def test_cartesian_examples():
    x = ShatObject(3, 0, 2)
    assert shat_is_cartesian(shat_identity(x))
    with pytest.raises(ValueError):
        # the pushed-forward interval (0,1) does not lie inside (1,2)
        ShatMorphism(ShatObject(3, 1, 2), ShatObject(2, 0, 1), PHI)
    m = ShatMorphism(ShatObject(3, 0, 2), ShatObject(2, 0, 1), PHI)
    assert not shat_is_cartesian(m)
    assert shat_is_cartesian(ShatMorphism(ShatObject(3, 0, 1), ShatObject(2, 0, 1), PHI))


def test_pi_examples():
    assert pi_object(ShatObject(5, 1, 4)) == 3
    m = ShatMorphism(ShatObject(3, 0, 2), ShatObject(2, 0, 1), PHI)
    assert pi_morphism(m) == sm(1, 2, 0, 1)
    x = ShatObject(4, 1, 3)
    assert pi_morphism(shat_identity(x)) == identity(2)


def test_pi_reverses_composition_small():
    objs = shat_objects(2)
    for x, y, z in itertools.product(objs, repeat=3):
        for a in shat_morphisms(x, y):
            for b in shat_morphisms(y, z):
                ba = shat_compose(b, a)
                assert pi_morphism(ba) == compose_simplex(pi_morphism(a), pi_morphism(b))


def test_psi_examples():
    assert psi(2) == ShatObject(2, 0, 2)
    for n in range(4):
        for m in range(4):
            for phi in monotone_maps(m, n):
                assert pi_morphism(psi_morphism(phi)) == phi


def test_eta_examples():
    eta = eta_component(ShatObject(4, 1, 3))
    assert eta.target == psi(2)
    assert eta.underlying == rho(1, 3, 4)
    top = eta_component(ShatObject(3, 0, 3))
    assert top.underlying == identity(3)
    assert top.source == top.target


def test_eta_is_inert_cartesian_and_weak():
    for x in shat_objects(4):
        eta = eta_component(x)
        assert is_inert(eta.underlying)
        assert in_i(eta) and in_w(eta)
        eps = epsilon_component(x)
        assert eps.source == psi(x.ambient) and eps.target == x


def test_w_triangle_examples():
    x = ShatObject(3, 1, 2)
    ident = shat_identity(x)
    assert w_triangle_factorization(ident) == (eta_component(x), eta_component(x))
    w = ShatMorphism(ShatObject(3, 1, 2), ShatObject(2, 0, 1), sm(2, 3, 1, 2, 3))
    assert in_w(w)
    assert pi_morphism(w) == identity(1)
    left, right = w_triangle_factorization(w)
    assert left.target == right.target == ShatObject(1, 0, 1)
    assert shat_compose(right, w) == left


def test_w_triangle_degenerate_interval():
    w = ShatMorphism(ShatObject(2, 1, 1), ShatObject(1, 0, 0), sm(1, 2, 1, 2))
    left, right = w_triangle_factorization(w)
    assert left.target == right.target == ShatObject(0, 0, 0)

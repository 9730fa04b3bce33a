import pytest
from hypothesis import given, strategies as st

from spanseg.finset import (
    FinMap,
    FinSet,
    InvalidStructure,
    all_bijections,
    all_maps,
    compose,
    invert,
    is_bijection,
    iterated_pullback,
    labels,
    pair_label,
    pairing,
    product,
    pullback,
    subset,
)


def fs(*xs):
    return FinSet(tuple(xs))


@st.composite
def finmaps(draw, max_dom=4, max_cod=3):
    n = draw(st.integers(0, max_dom))
    m = draw(st.integers(1 if n else 0, max_cod))
    dom, cod = labels(n, "a"), labels(m, "b")
    images = tuple(draw(st.sampled_from(cod.elements)) for _ in range(n))
    return FinMap(dom, cod, images)


@st.composite
def cospans(draw):
    j = labels(draw(st.integers(1, 3)), "j")
    a, b = labels(draw(st.integers(0, 3)), "a"), labels(draw(st.integers(0, 3)), "b")
    f = FinMap(a, j, tuple(draw(st.sampled_from(j.elements)) for _ in a))
    g = FinMap(b, j, tuple(draw(st.sampled_from(j.elements)) for _ in b))
    return f, g


def test_finset_rejects_duplicates():
    with pytest.raises(InvalidStructure):
        fs("a", "a")


def test_finmap_rejects_outside_images_and_wrong_length():
    with pytest.raises(InvalidStructure):
        FinMap(fs("a"), fs("x"), ("y",))
    with pytest.raises(InvalidStructure):
        FinMap(fs("a", "b"), fs("x"), ("x",))


def test_product_examples():
    p, p1, p2 = product(fs("x"), fs("y", "z"))
    assert p.elements == ("(x,y)", "(x,z)")
    assert len(product(fs(), fs("a", "b"))[0]) == 0
    p, _, _ = product(fs("a", "b"), fs("c", "d"))
    assert p.elements == ("(a,c)", "(a,d)", "(b,c)", "(b,d)")
    assert p1.images == ("x", "x") and p2.images == ("y", "z")


def test_pullback_examples():
    j = fs("j1", "j2")
    f = FinMap(fs("a1", "a2"), j, ("j1", "j2"))
    g = FinMap(fs("b"), j, ("j1",))
    p, p1, p2 = pullback(f, g)
    assert p.elements == ("(a1,b)",)
    a = fs("a", "b")
    diag, _, _ = pullback(FinMap.identity(a), FinMap.identity(a))
    assert diag.elements == ("(a,a)", "(b,b)")
    empty, _, _ = pullback(FinMap(fs("a"), j, ("j1",)), FinMap(fs("b"), j, ("j2",)))
    assert len(empty) == 0


def test_pullback_rejects_different_codomains():
    with pytest.raises(InvalidStructure):
        pullback(FinMap(fs("a"), fs("x"), ("x",)), FinMap(fs("b"), fs("y"), ("y",)))


@given(cospans())
def test_pullback_matches_filtered_product(cospan):
    f, g = cospan
    p, p1, p2 = pullback(f, g)
    expected = [pair_label(a, b) for a in f.dom for b in g.dom if f(a) == g(b)]
    assert list(p.elements) == expected
    assert compose(f, p1) == compose(g, p2)


@given(cospans(), st.integers(0, 2), st.data())
def test_pullback_universal_property(cospan, n, data):
    """Every commuting cone factors uniquely through the pullback."""
    f, g = cospan
    p, p1, p2 = pullback(f, g)
    c = labels(n, "c")
    cones = [(x, y) for x in all_maps(c, f.dom) for y in all_maps(c, g.dom)
             if compose(f, x) == compose(g, y)]
    for x, y in cones:
        u = pairing(p, p1, p2, x, y)
        assert compose(p1, u) == x and compose(p2, u) == y
        others = [v for v in all_maps(c, p) if compose(p1, v) == x and compose(p2, v) == y]
        assert others == [u]


def test_pairing_rejects_non_commuting_cone():
    j = fs("j1", "j2")
    f = FinMap(fs("a"), j, ("j1",))
    g = FinMap(fs("b"), j, ("j2",))
    p, p1, p2 = pullback(f, g)
    with pytest.raises(InvalidStructure):
        pairing(p, p1, p2, FinMap(fs("c"), f.dom, ("a",)), FinMap(fs("c"), g.dom, ("b",)))


def test_iterated_pullback_is_left_nested():
    x = fs("p", "q")
    ident = FinMap.identity(x)
    total, legs = iterated_pullback(x, [ident, ident], [ident, ident])
    assert total.elements == ("((p,p),p)", "((q,q),q)")
    assert len(legs) == 3


def test_bijection_examples():
    a = fs("a", "b")
    ident = FinMap.identity(a)
    assert is_bijection(ident) and invert(ident) == ident
    assert not is_bijection(FinMap(a, fs("x"), ("x", "x")))
    swap = FinMap(a, a, ("b", "a"))
    assert is_bijection(swap) and invert(swap) == swap
    with pytest.raises(InvalidStructure):
        invert(FinMap(a, fs("x"), ("x", "x")))


@given(finmaps())
def test_composition_is_associative_and_unital(f):
    assert compose(FinMap.identity(f.cod), f) == f
    assert compose(f, FinMap.identity(f.dom)) == f
    h = FinMap(f.cod, labels(2, "z"), tuple("z0" if i % 2 else "z1" for i in range(len(f.cod))))
    k = FinMap(h.cod, fs("w"), ("w", "w"))
    assert compose(k, compose(h, f)) == compose(compose(k, h), f)


def test_counts_of_maps_and_bijections():
    assert len(list(all_maps(labels(3, "a"), labels(2, "b")))) == 8
    assert len(list(all_maps(labels(0, "a"), labels(0, "b")))) == 1
    assert len(list(all_maps(labels(1, "a"), labels(0, "b")))) == 0
    assert len(list(all_bijections(labels(3, "a"), labels(3, "b")))) == 6
    assert len(list(all_bijections(labels(2, "a"), labels(3, "b")))) == 0


def test_subset_inclusion():
    s, inc = subset(fs("a", "b", "c"), ["c", "a"])
    assert s.elements == ("a", "c")
    assert inc.images == ("a", "c")

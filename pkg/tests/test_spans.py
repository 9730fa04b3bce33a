import pytest
from hypothesis import given, strategies as st

from spanseg import catalog
from spanseg.catobj import algebraic_to_simplicial
from spanseg.finset import FinMap, FinSet, InvalidStructure, compose, labels
from spanseg.spans import (
    SigmaDiagram,
    Span,
    SpanMorphism,
    catobj_to_sigma_diagram,
    check_spanplus_segal,
    covering_relations,
    identity_span,
    span_compose,
    span_isomorphic,
    tensor_over_base,
)


def fs(*xs):
    return FinSet(tuple(xs))


@st.composite
def spans_over(draw, source, target, max_apex=3):
    apex = labels(draw(st.integers(0, max_apex)), draw(st.sampled_from(["s", "t", "r"])))
    left = FinMap(apex, source, tuple(draw(st.sampled_from(source.elements)) for _ in apex))
    right = FinMap(apex, target, tuple(draw(st.sampled_from(target.elements)) for _ in apex))
    return Span(left, right)


BASE = fs("p", "q")


def test_compose_with_identity_is_canonically_isomorphic():
    s = Span(FinMap(fs("a", "b"), fs("i"), ("i", "i")), FinMap(fs("a", "b"), BASE, ("p", "q")))
    composite = span_compose(s, identity_span(BASE))
    witness = span_isomorphic(composite, s)
    assert witness is not None
    assert witness.apex_map.images == ("a", "b")
    assert composite.apex.elements == ("(a,p)", "(b,q)")


def test_composite_apex_example():
    j = fs("j1", "j2")
    s = Span(FinMap(fs("a1", "a2"), fs("i"), ("i", "i")), FinMap(fs("a1", "a2"), j, ("j1", "j2")))
    t = Span(FinMap(fs("b"), j, ("j1",)), FinMap(fs("b"), fs("k"), ("k",)))
    c = span_compose(s, t)
    assert c.apex.elements == ("(a1,b)",)
    assert c.source == fs("i") and c.target == fs("k")
    empty = Span(FinMap(fs(), j, ()), FinMap(fs(), fs("k"), ()))
    assert len(span_compose(s, empty).apex) == 0


def test_compose_rejects_mismatched_feet():
    with pytest.raises(InvalidStructure):
        span_compose(identity_span(BASE), identity_span(fs("x")))


def test_isomorphic_examples():
    s = identity_span(BASE)
    w = span_isomorphic(s, s)
    assert w.apex_map == FinMap.identity(BASE)
    bigger = Span(FinMap(fs("a", "b", "c"), BASE, ("p", "p", "q")),
                  FinMap(fs("a", "b", "c"), BASE, ("p", "p", "q")))
    assert span_isomorphic(s, bigger) is None


def test_span_morphism_must_commute():
    s = identity_span(BASE)
    with pytest.raises(InvalidStructure):
        SpanMorphism(s, s, FinMap(BASE, BASE, ("q", "p")))


@given(st.data())
def test_composition_is_associative_up_to_canonical_iso(data):
    s = data.draw(spans_over(BASE, BASE))
    t = data.draw(spans_over(BASE, BASE))
    u = data.draw(spans_over(BASE, BASE))
    left = span_compose(span_compose(s, t), u)
    right = span_compose(s, span_compose(t, u))
    assert span_isomorphic(left, right) is not None


@given(st.data())
def test_identity_is_unit_up_to_iso(data):
    s = data.draw(spans_over(BASE, BASE))
    assert span_isomorphic(span_compose(identity_span(BASE), s), s) is not None
    assert span_isomorphic(tensor_over_base(BASE, s, identity_span(BASE)), s) is not None


def test_tensor_examples():
    star = fs("*")
    s = Span(FinMap(fs("a", "b"), star, ("*", "*")), FinMap(fs("a", "b"), star, ("*", "*")))
    t = Span(FinMap(fs("c"), star, ("*",)), FinMap(fs("c"), star, ("*",)))
    assert tensor_over_base(star, s, t).apex.elements == ("(a,c)", "(b,c)")
    s2 = Span(FinMap(fs("a", "b"), BASE, ("p", "p")), FinMap(fs("a", "b"), BASE, ("p", "q")))
    t2 = Span(FinMap(fs("c", "d"), BASE, ("p", "q")), FinMap(fs("c", "d"), BASE, ("q", "q")))
    assert len(tensor_over_base(BASE, s2, t2).apex) == 2
    with pytest.raises(InvalidStructure):
        tensor_over_base(fs("x"), s2, t2)


def test_covering_relations_count():
    # two covers for every interval of positive length
    for n in range(5):
        assert len(covering_relations(n)) == n * (n + 1)


def test_sigma_diagram_of_a_category():
    x = algebraic_to_simplicial(catalog.walking_arrow(), 3)
    d1 = catobj_to_sigma_diagram(x, 1)
    assert check_spanplus_segal(d1)
    leg_left, leg_right = d1.arrows[((0, 1), (0, 0))], d1.arrows[((0, 1), (1, 1))]
    assert leg_left == x.face(1, 1) and leg_right == x.face(1, 0)
    d0 = catobj_to_sigma_diagram(x, 0)
    assert d0.values == {(0, 0): x.levels[0]} and check_spanplus_segal(d0)
    d2 = catobj_to_sigma_diagram(x, 2)
    assert len(d2.values[(0, 2)]) == 4
    assert check_spanplus_segal(d2)


def _enlarge_top(d: SigmaDiagram) -> SigmaDiagram:
    """Add a copy of the first element of ``F(0,n)`` that maps like the original."""
    n = d.ambient
    top = d.values[(0, n)]
    first = top.elements[0]
    bigger = FinSet(top.elements + ("extra",))
    values = dict(d.values)
    values[(0, n)] = bigger
    arrows = dict(d.arrows)
    for (a, b), m in d.arrows.items():
        if a == (0, n):
            arrows[(a, b)] = FinMap(bigger, m.cod, m.images + (m(first),))
    return SigmaDiagram(n, values, arrows)


def test_larger_top_value_breaks_the_condition():
    d = catobj_to_sigma_diagram(algebraic_to_simplicial(catalog.chain(2), 3), 2)
    assert check_spanplus_segal(d)
    assert not check_spanplus_segal(_enlarge_top(d))


def test_arrow_composes_covers():
    d = catobj_to_sigma_diagram(algebraic_to_simplicial(catalog.chain(2), 3), 3)
    direct = d.arrow((0, 3), (1, 2))
    assert direct == compose(d.arrow((0, 2), (1, 2)), d.arrow((0, 3), (0, 2)))
    with pytest.raises(InvalidStructure):
        d.arrow((1, 2), (0, 3))


def test_non_commuting_diagram_rejected():
    d = catobj_to_sigma_diagram(algebraic_to_simplicial(catalog.walking_arrow(), 3), 2)
    arrows = dict(d.arrows)
    m = arrows[((0, 2), (0, 1))]
    arrows[((0, 2), (0, 1))] = FinMap(m.dom, m.cod, tuple(reversed(m.images)))
    with pytest.raises(InvalidStructure):
        SigmaDiagram(2, d.values, arrows)


import pytest

from spanseg import catalog
from spanseg.catobj import algebraic_to_simplicial, semicat_of
from spanseg.enumeration import UniverseBounds, enumerate_categories, enumerate_functors, enumerate_semicats
from spanseg.finset import FinMap, FinSet, InvalidStructure, labels
from spanseg.quasiunit import find_quasi_units, forget_units
from spanseg.simplex import monotone_maps
from spanseg.spanalg import (
    MonoidMorphism,
    SpanMonoid,
    cat_to_span_monoid,
    codiscrete_algebra_check,
    enumerate_monoid_morphisms,
    forget_monoid_unit,
    functor_of_monoid_morphism,
    hom_set_comparison,
    hom_set_sweep,
    monoid_morphism_problems,
    quasi_unit_of_monoid,
    span_monoid_to_cat,
    square_witness,
    unit_law_problems,
)
from spanseg.spans import Span

UNIVERSE = list(enumerate_semicats(UniverseBounds(2, 2)))
CATEGORIES = list(enumerate_categories(UniverseBounds(2, 3)))


def fs(*xs):
    return FinSet(tuple(xs))


def test_terminal_category_monoid():
    m = cat_to_span_monoid(catalog.terminal_category())
    assert len(m.base) == 1 and len(m.apex) == 1 and len(m.mult.dom) == 1
    assert m.unit is not None


def test_walking_arrow_monoid():
    m = cat_to_span_monoid(catalog.walking_arrow())
    assert (len(m.base), len(m.apex), len(m.mult.dom)) == (2, 3, 4)
    assert m.mult("(id0,f)") == "f" and m.mult("(f,id1)") == "f"


def test_constant_composition_monoid_has_no_unit():
    m = cat_to_span_monoid(catalog.constant_composition())
    assert m.unit is None
    assert quasi_unit_of_monoid(m) is None


def test_round_trips_are_exact():
    for a in UNIVERSE + CATEGORIES:
        assert span_monoid_to_cat(cat_to_span_monoid(a)) == a
    for c in CATEGORIES:
        m = cat_to_span_monoid(c)
        assert cat_to_span_monoid(span_monoid_to_cat(m)) == m


def test_degenerate_monoids():
    star = fs("*")
    single = SpanMonoid(star, Span(FinMap(fs("e"), star, ("*",)), FinMap(fs("e"), star, ("*",))),
                        FinMap(FinSet(("(e,e)",)), fs("e"), ("e",)))
    assert span_monoid_to_cat(single) == catalog.terminal_semicategory()
    base = fs("p", "q")
    empty_carrier = SpanMonoid(base, Span(FinMap(fs(), base, ()), FinMap(fs(), base, ())),
                               FinMap(fs(), fs(), ()))
    c = span_monoid_to_cat(empty_carrier)
    assert len(c.objects) == 2 and len(c.morphisms) == 0
    nothing = SpanMonoid(fs(), Span(FinMap(fs(), fs(), ()), FinMap(fs(), fs(), ())),
                         FinMap(fs(), fs(), ()))
    assert quasi_unit_of_monoid(nothing) == FinMap(fs(), fs(), ())


def test_non_associative_multiplication_rejected():
    star = fs("*")
    apex = fs("f", "g")
    leg = FinMap(apex, star, ("*", "*"))
    pairs = FinSet(("(f,f)", "(f,g)", "(g,f)", "(g,g)"))
    # pairs are (first, second); this is the table x·y = g unless both are f
    mult = FinMap(pairs, apex, ("g", "f", "f", "f"))
    with pytest.raises(InvalidStructure):
        SpanMonoid(star, Span(leg, leg), mult)


def test_quasi_unit_of_monoid_matches_semicategory_search():
    for a in UNIVERSE:
        m = cat_to_span_monoid(a)
        found = find_quasi_units(a)
        u = quasi_unit_of_monoid(m)
        assert (u is None) == (not found)
        if u is not None:
            assert u == found[0].carrier
            assert unit_law_problems(m, u) == []


def test_forgetting_the_unit():
    m = cat_to_span_monoid(catalog.walking_arrow())
    bare = forget_monoid_unit(m)
    assert bare.unit is None
    assert quasi_unit_of_monoid(bare) == m.unit


def test_square_witness_is_identity_on_labels():
    for a in UNIVERSE[:20] + [catalog.walking_arrow()]:
        w = square_witness(a)
        assert w.apex_map == FinMap.identity(w.source.apex)
        assert w.target.apex == algebraic_to_simplicial(a, 2).levels[2]


def test_walking_arrow_endomorphism_count():
    # functors between ordinals are monotone maps
    a = catalog.walking_arrow()
    expected = len(list(monotone_maps(1, 1)))
    assert len(list(enumerate_functors(a, a, unital=True))) == expected
    result = hom_set_comparison(forget_units(a), forget_units(a))
    assert result == {"functors": expected, "monoid_morphisms": expected, "bijective": True}


def test_monoid_morphism_to_functor():
    a = cat_to_span_monoid(forget_units(catalog.walking_arrow()))
    morphisms = list(enumerate_monoid_morphisms(a, a))
    functors = {(f.on_objects.images, f.on_morphisms.images)
                for f in map(functor_of_monoid_morphism, morphisms)}
    assert len(functors) == len(morphisms) == 3


def test_bad_monoid_morphism_reported():
    a = cat_to_span_monoid(forget_units(catalog.walking_arrow()))
    swap = FinMap(a.base, a.base, ("1", "0"))
    problems = monoid_morphism_problems(MonoidMorphism(a, a, swap, FinMap.identity(a.apex)))
    assert problems


def test_hom_set_bijection_small_universe():
    report = hom_set_sweep(UNIVERSE)
    assert report.passed
    assert report.checked == len(UNIVERSE) ** 2


@pytest.mark.parametrize("size", [0, 1, 2])
def test_codiscrete_maps_extend_uniquely(size):
    s = labels(size, "s")
    report = codiscrete_algebra_check(s, CATEGORIES[:20] + [catalog.walking_arrow()])
    assert report.passed
    # one extension for every object map
    assert all(maps == extensions for maps, extensions in report.notes["counts"])


def test_walking_arrow_into_two_point_codiscrete():
    report = codiscrete_algebra_check(fs("s", "t"), [catalog.walking_arrow()])
    assert report.notes["counts"] == [[4, 4]]
    assert codiscrete_algebra_check(fs("s"), [catalog.walking_arrow()]).notes["counts"] == [[1, 1]]
    empty = semicat_of(catalog.discrete(0))
    assert codiscrete_algebra_check(fs("s", "t"), [empty]).notes["counts"] == [[1, 1]]

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from spanseg import catalog
from spanseg.catobj import (
    CatFunctor,
    CatPresentation,
    SemicatPresentation,
    empty_presentation,
)
from spanseg.enumeration import (
    UniverseBounds,
    enumerate_categories,
    enumerate_functors,
    enumerate_semicats,
)
from spanseg.finset import FinMap, FinSet, InvalidStructure, labels
from spanseg.quasiunit import (
    cartesian_subcategory_check,
    empty_quasi_unit,
    factor_through_restriction,
    find_quasi_units,
    find_quasi_units_bruteforce,
    forget_units,
    is_quasi_unital,
    is_quasi_unital_functor,
    is_quasi_unital_functor_by_restriction,
    is_quasi_unital_functor_existential,
    is_weakly_quasi_unital,
    local_units,
    promote_to_unital,
    quasi_unit,
    quasi_unit_problems,
    restrict_quasi_unit,
    unital_functors_vs_quasi_unital,
    weak_vs_strong_report,
)

UNIVERSE = list(enumerate_semicats(UniverseBounds(2, 3)))
CATEGORIES = list(enumerate_categories(UniverseBounds(2, 3)))
SMALL_CATS = list(enumerate_categories(UniverseBounds(2, 2)))


def fs(*xs):
    return FinSet(tuple(xs))


def _units_by_definition(s: SemicatPresentation) -> list[tuple[str, ...]]:
    """Every object-to-endomorphism assignment obeying both unit laws, checked
    straight from the composition table."""
    out = []
    for choice in itertools.product(s.morphisms.elements, repeat=len(s.objects)):
        u = dict(zip(s.objects.elements, choice))
        if any(s.src(u[x]) != x or s.tgt(u[x]) != x for x in s.objects):
            continue
        if all(s.comp[(u[s.tgt(f)], f)] == f and s.comp[(f, u[s.src(f)])] == f
               for f in s.morphisms):
            out.append(choice)
    return out


def test_examples():
    assert [q.carrier.images for q in find_quasi_units(catalog.terminal_semicategory())] == [("e",)]
    assert find_quasi_units(catalog.constant_composition()) == []
    arrow = catalog.walking_arrow()
    assert [q.carrier.images for q in find_quasi_units(forget_units(arrow))] == \
        [("id0", "id1")]


def test_search_agrees_with_definition_and_brute_force():
    for s in UNIVERSE:
        fast = [q.carrier.images for q in find_quasi_units(s)]
        assert fast == [q.carrier.images for q in find_quasi_units_bruteforce(s)]
        assert fast == _units_by_definition(s)


def test_at_most_one_quasi_unit():
    assert max(len(find_quasi_units_bruteforce(s)) for s in UNIVERSE) == 1


def test_quasi_unital_count_is_frozen():
    # fixed once from the definition-level search above
    assert sum(1 for s in UNIVERSE if _units_by_definition(s)) == 77


def test_underlying_of_category_has_identity_as_unit():
    for c in CATEGORIES:
        assert [q.carrier for q in find_quasi_units(forget_units(c))] == [c.identity]


def test_is_quasi_unital_examples():
    assert is_quasi_unital(forget_units(catalog.walking_arrow()))
    assert not is_quasi_unital(catalog.constant_composition())
    assert is_quasi_unital(empty_presentation(False))
    assert quasi_unit(empty_presentation(False)) == empty_quasi_unit()


def test_weak_quasi_unitality():
    assert not is_weakly_quasi_unital(catalog.constant_composition())
    assert is_weakly_quasi_unital(empty_presentation(False))
    assert is_weakly_quasi_unital(catalog.terminal_semicategory())
    assert weak_vs_strong_report(UNIVERSE).passed


def test_local_units_of_constant_composition():
    s = catalog.constant_composition()
    assert local_units(s, "*") == []


def test_promote_examples():
    promoted = promote_to_unital(catalog.terminal_semicategory())
    assert promoted == catalog.terminal_category()
    with pytest.raises(InvalidStructure):
        promote_to_unital(catalog.constant_composition())


def test_forget_examples():
    assert forget_units(catalog.terminal_category()) == catalog.terminal_semicategory()
    arrow = forget_units(catalog.walking_arrow())
    assert isinstance(arrow, SemicatPresentation)
    assert (len(arrow.objects), len(arrow.morphisms)) == (2, 3)


def test_promote_and_forget_are_inverse():
    for c in CATEGORIES:
        assert promote_to_unital(forget_units(c)) == c
    for s in UNIVERSE:
        if is_quasi_unital(s):
            assert forget_units(promote_to_unital(s)) == s


def test_quasi_unit_problems_reports_bad_candidates():
    s = catalog.constant_composition()
    for m in ("f", "g"):
        assert quasi_unit_problems(s, FinMap(s.objects, s.morphisms, (m,)))


# -- functors ---------------------------------------------------------------------

def _identity_functor(a):
    return CatFunctor(a, a, FinMap.identity(a.objects), FinMap.identity(a.morphisms))


def test_identity_functor_is_quasi_unital():
    for c in SMALL_CATS:
        s = forget_units(c)
        assert is_quasi_unital_functor(_identity_functor(s))


def test_unital_functors_are_quasi_unital():
    for c, d in itertools.product(SMALL_CATS, repeat=2):
        for phi in enumerate_functors(c, d, unital=True):
            forgotten = CatFunctor(forget_units(c), forget_units(d), phi.on_objects, phi.on_morphisms)
            assert is_quasi_unital_functor(forgotten)


def test_idempotent_semifunctor_is_not_quasi_unital():
    t = catalog.terminal_semicategory()
    ide = forget_units(catalog.walking_idempotent())
    phi = CatFunctor(t, ide, FinMap(t.objects, ide.objects, ("*",)),
                     FinMap(t.morphisms, ide.morphisms, ("e",)))
    assert not is_quasi_unital_functor(phi)
    assert not is_quasi_unital_functor_existential(phi)
    assert not is_quasi_unital_functor_by_restriction(phi)


def test_functor_tests_agree():
    cats = [forget_units(c) for c in SMALL_CATS]
    for a, b in itertools.product(cats, repeat=2):
        for phi in enumerate_functors(a, b):
            direct = is_quasi_unital_functor(phi)
            assert direct == is_quasi_unital_functor_existential(phi)
            assert direct == is_quasi_unital_functor_by_restriction(phi)


def test_factorization_labels():
    a = forget_units(catalog.walking_arrow())
    phi = _identity_functor(a)
    restricted, on_objects, on_morphisms = factor_through_restriction(phi)
    assert on_objects("0") == "(0,0)"
    assert on_morphisms("f") == "((0,1),f)"
    assert on_objects.cod == restricted.objects


def test_unital_functors_biject_with_quasi_unital_ones():
    for c, d in itertools.product(SMALL_CATS, repeat=2):
        result = unital_functors_vs_quasi_unital(c, d)
        assert result["bijective"]
        assert result["unital"] == result["quasi_unital"]


# -- restriction ------------------------------------------------------------------

def test_restrict_quasi_unit_examples():
    arrow = forget_units(catalog.walking_arrow())
    same, unit = restrict_quasi_unit(FinMap.identity(arrow.objects), arrow)
    assert unit.carrier.images == ("((0,0),id0)", "((1,1),id1)")
    point, unit = restrict_quasi_unit(FinMap(fs("y"), arrow.objects, ("0",)), arrow)
    assert unit.carrier.images == ("((y,y),id0)",)
    empty, unit = restrict_quasi_unit(FinMap(fs(), arrow.objects, ()), arrow)
    assert len(unit.carrier.dom) == 0


def test_cartesian_check_passes_on_universe():
    report = cartesian_subcategory_check(UNIVERSE, max_fibre=2, functor_pairs=False)
    assert report.passed and report.notes["quasi_unital_objects"] == 77


def test_cartesian_check_passes_on_categories():
    assert cartesian_subcategory_check(SMALL_CATS).passed


def test_cartesian_check_reports_mutated_table():
    arrow = catalog.walking_arrow()
    comp = dict(arrow.comp)
    comp[("f", "id0")] = "id0"
    s = arrow.underlying
    broken = CatPresentation.unchecked(
        SemicatPresentation.unchecked(s.objects, s.morphisms, s.src, s.tgt, comp), arrow.identity)
    report = cartesian_subcategory_check([catalog.walking_arrow(), broken])
    assert not report.passed
    assert report.counterexamples[0]["item"] == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([s for s in UNIVERSE if is_quasi_unital(s) and len(s.objects)]),
       st.integers(0, 2), st.data())
def test_restriction_of_quasi_unital_stays_quasi_unital(s, size, data):
    images = tuple(data.draw(st.sampled_from(s.objects.elements)) for _ in range(size))
    f = FinMap(labels(size, "y"), s.objects, images)
    restricted, unit = restrict_quasi_unit(f, s)
    assert [q.carrier for q in find_quasi_units(restricted)] == [unit.carrier]

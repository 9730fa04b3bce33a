import itertools

import pytest

from spanseg import catalog
from spanseg.catobj import empty_presentation, presentation_from_tables, semicat_of
from spanseg.enumeration import (
    UniverseBounds,
    enumerate_categories,
    enumerate_functors,
    enumerate_semicats,
    enumerate_two_fold,
    find_isomorphism,
    iso_classes,
    random_semicats,
)
from spanseg.structfile import dumps_line


def _brute_force(n_obj, n_mor, unital=False):
    """Count labelled structures by trying every table outright."""
    total = 0
    ends = list(itertools.product(range(n_obj), repeat=2))
    for shape in itertools.product(ends, repeat=n_mor):
        pairs = [(g, f) for g in range(n_mor) for f in range(n_mor) if shape[f][1] == shape[g][0]]
        for values in itertools.product(range(n_mor), repeat=len(pairs)):
            comp = dict(zip(pairs, values))
            if any(shape[h] != (shape[f][0], shape[g][1]) for (g, f), h in comp.items()):
                continue
            triples = [(h, g, f) for (g, f) in pairs for h in range(n_mor) if shape[h][0] == shape[g][1]]
            if any(comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)] for h, g, f in triples):
                continue
            if not unital:
                total += 1
                continue
            for units in itertools.product(range(n_mor), repeat=n_obj):
                if all(shape[units[x]] == (x, x) for x in range(n_obj)) and all(
                        comp[(units[shape[f][1]], f)] == f and comp[(f, units[shape[f][0]])] == f
                        for f in range(n_mor)):
                    total += 1
    return total


def _brute_force_upto(max_obj, max_mor, unital=False):
    return sum(_brute_force(o, m, unital) for o in range(max_obj + 1) for m in range(max_mor + 1))


FROZEN_SEMICATS = {(1, 1): 3, (1, 2): 11, (2, 2): 44, (1, 3): 124, (2, 3): 577}
FROZEN_CATEGORIES = {(1, 1): 2, (1, 2): 6, (2, 2): 8, (1, 3): 39, (2, 3): 77}


@pytest.mark.parametrize("bounds", sorted(FROZEN_SEMICATS))
def test_semicategory_counts(bounds):
    got = sum(1 for _ in enumerate_semicats(UniverseBounds(*bounds)))
    assert got == FROZEN_SEMICATS[bounds]
    if bounds != (2, 3):
        assert got == _brute_force_upto(*bounds)


@pytest.mark.parametrize("bounds", sorted(FROZEN_CATEGORIES))
def test_category_counts(bounds):
    got = sum(1 for _ in enumerate_categories(UniverseBounds(*bounds)))
    assert got == FROZEN_CATEGORIES[bounds]
    if bounds != (2, 3):
        assert got == _brute_force_upto(*bounds, unital=True)


def test_exact_bounds():
    exact = list(enumerate_semicats(UniverseBounds(1, 1), exact=True))
    assert len(exact) == 1
    assert exact[0].comp == {("m0", "m0"): "m0"}
    assert find_isomorphism(exact[0], catalog.terminal_semicategory()) is not None


def test_enumeration_order_is_stable():
    b = UniverseBounds(2, 2)
    first = [dumps_line(a) for a in enumerate_semicats(b)]
    assert first == [dumps_line(a) for a in enumerate_semicats(b)]
    assert len(set(first)) == len(first)


def test_seeded_sampling_is_reproducible():
    b = UniverseBounds(2, 3, seed=7)
    a = random_semicats(b, 15)
    assert [dumps_line(x) for x in a] == [dumps_line(x) for x in random_semicats(b, 15)]
    assert all(x.problems() == [] for x in a)


def test_functor_examples():
    t = catalog.terminal_category()
    assert len(list(enumerate_functors(t, t, unital=True))) == 1
    arrow = catalog.walking_arrow()
    assert len(list(enumerate_functors(arrow, arrow, unital=True))) == 3
    assert list(enumerate_functors(arrow, empty_presentation())) == []
    assert len(list(enumerate_functors(empty_presentation(), arrow))) == 1


def test_functors_match_brute_force():
    cats = list(enumerate_categories(UniverseBounds(2, 2)))
    for a, b in itertools.product(cats, repeat=2):
        got = {(f.on_objects.images, f.on_morphisms.images) for f in enumerate_functors(a, b)}
        brute = set()
        for objs in itertools.product(b.objects.elements, repeat=len(a.objects)):
            om = dict(zip(a.objects.elements, objs))
            for mors in itertools.product(b.morphisms.elements, repeat=len(a.morphisms)):
                mm = dict(zip(a.morphisms.elements, mors))
                if all(b.src(mm[f]) == om[a.src(f)] and b.tgt(mm[f]) == om[a.tgt(f)]
                       for f in a.morphisms) and all(
                        mm[h] == b.comp[(mm[g], mm[f])] for (g, f), h in a.comp.items()):
                    brute.add((objs, mors))
        assert got == brute


def _relabel(c, suffix):
    objs = [x + suffix for x in c.objects]
    rename = {m: m + suffix for m in c.morphisms}
    return presentation_from_tables(
        objs, {rename[m]: (c.src(m) + suffix, c.tgt(m) + suffix) for m in c.morphisms},
        {(rename[g], rename[f]): rename[h] for (g, f), h in c.comp.items()},
        {x + suffix: rename[c.identity(x)] for x in c.objects})


def test_iso_class_examples():
    arrow = catalog.walking_arrow()
    assert iso_classes([arrow]) == [arrow]
    assert len(iso_classes([arrow, _relabel(arrow, "'")])) == 1
    on_obj, on_mor = find_isomorphism(arrow, _relabel(arrow, "'"))
    assert on_obj.images == ("0'", "1'")
    assert len(iso_classes([arrow, catalog.discrete(2)])) == 2
    assert find_isomorphism(arrow, catalog.discrete(2)) is None


def _canonical(s):
    """Smallest encoding over every relabelling of objects and morphisms."""
    s = semicat_of(s)
    obs, mors = s.objects.elements, s.morphisms.elements
    best = None
    for po in itertools.permutations(range(len(obs))):
        on = dict(zip(obs, po))
        for pm in itertools.permutations(range(len(mors))):
            mn = dict(zip(mors, pm))
            key = (len(obs), tuple(sorted((mn[m], on[s.src(m)], on[s.tgt(m)]) for m in mors)),
                   tuple(sorted((mn[g], mn[f], mn[h]) for (g, f), h in s.comp.items())))
            if best is None or key < best:
                best = key
    return best


def test_iso_class_count_matches_canonical_forms():
    universe = list(enumerate_semicats(UniverseBounds(2, 3)))
    classes = iso_classes(universe)
    assert len(classes) == 89
    assert len({_canonical(s) for s in universe}) == 89


def test_two_fold_universe_names_are_unique():
    items = enumerate_two_fold(UniverseBounds(2, 3))
    names = [name for name, _ in items]
    assert len(set(names)) == len(names) == 94
    # posets on at most two points: empty, point, two points, chain
    assert sum(name.startswith("squares/") for name in names) == 4


def test_bounds_validation():
    with pytest.raises(ValueError):
        UniverseBounds(-1, 2)

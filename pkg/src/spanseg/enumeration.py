"""Exhaustive and randomized generation of small structures.

Enumeration order is fixed: by number of objects, then number of morphisms,
then the ``(src, tgt)`` assignment (lexicographic), then the composition
table (lexicographic over composable pairs in :meth:`composable_pairs` order).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence

from .catobj import (
    CatFunctor,
    CatPresentation,
    Presentation,
    SemicatPresentation,
    semicat_of,
)
from .finset import FinMap, labels


@dataclass(frozen=True)
class UniverseBounds:
    max_objects: int
    max_morphisms: int
    arity: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        if self.max_objects < 0 or self.max_morphisms < 0 or self.arity < 1:
            raise ValueError("bounds must be non-negative and arity positive")


def _shapes(n_obj: int, n_mor: int) -> Iterator[tuple[tuple[int, int], ...]]:
    ends = [(a, b) for a in range(n_obj) for b in range(n_obj)]
    return product(ends, repeat=n_mor)


def _tables(shape: Sequence[tuple[int, int]], require_units: Optional[Sequence[int]] = None
            ) -> Iterator[dict]:
    """Associative composition tables on integer morphisms with the given ends."""
    n = len(shape)
    pairs = [(g, f) for f in range(n) for g in range(n) if shape[g][0] == shape[f][1]]
    options = []
    for g, f in pairs:
        ends = (shape[f][0], shape[g][1])
        choices = [h for h in range(n) if shape[h] == ends]
        if require_units is not None:
            if g == require_units[shape[g][0]]:
                choices = [f] if f in choices else []
            elif f == require_units[shape[f][0]]:
                choices = [g] if g in choices else []
        options.append(choices)
    for choice in product(*options):
        table = dict(zip(pairs, choice))
        if _associative(shape, table):
            yield table


def _associative(shape, table) -> bool:
    for (g, f), gf in table.items():
        for h in range(len(shape)):
            if shape[h][0] == shape[g][1]:
                if table[(h, gf)] != table[(table[(h, g)], f)]:
                    return False
    return True


def _present(n_obj: int, shape, table, units=None) -> Presentation:
    objects = labels(n_obj, "o")
    morphisms = labels(len(shape), "m")
    src = FinMap(morphisms, objects, tuple(objects.elements[a] for a, _ in shape))
    tgt = FinMap(morphisms, objects, tuple(objects.elements[b] for _, b in shape))
    m = morphisms.elements
    comp = {(m[g], m[f]): m[h] for (g, f), h in table.items()}
    semi = SemicatPresentation(objects, morphisms, src, tgt, comp)
    if units is None:
        return semi
    return CatPresentation(semi, FinMap(objects, morphisms, tuple(m[u] for u in units)))


def _sizes(b: UniverseBounds, exact: bool):
    if exact:
        return [(b.max_objects, b.max_morphisms)]
    return [(o, m) for o in range(b.max_objects + 1) for m in range(b.max_morphisms + 1)]


def enumerate_semicats(b: UniverseBounds, exact: bool = False) -> Iterator[SemicatPresentation]:
    """Every associative structure within the bounds (``exact``: at the bounds only)."""
    for n_obj, n_mor in _sizes(b, exact):
        for shape in _shapes(n_obj, n_mor):
            for table in _tables(shape):
                yield _present(n_obj, shape, table)


def enumerate_categories(b: UniverseBounds, exact: bool = False) -> Iterator[CatPresentation]:
    """Categories with chosen identities, generated independently of semicategories."""
    for n_obj, n_mor in _sizes(b, exact):
        for shape in _shapes(n_obj, n_mor):
            endos = [[m for m in range(n_mor) if shape[m] == (x, x)] for x in range(n_obj)]
            for units in product(*endos):
                for table in _tables(shape, units):
                    yield _present(n_obj, shape, table, units)


def random_semicats(b: UniverseBounds, count: int, max_attempts: int = 100_000
                    ) -> list[SemicatPresentation]:
    """``count`` associative structures drawn from random tables (seeded)."""
    rng = random.Random(b.seed)
    out = []
    for _ in range(max_attempts):
        if len(out) >= count:
            break
        n_obj = rng.randint(1, max(1, b.max_objects))
        n_mor = rng.randint(0, b.max_morphisms)
        shape = tuple((rng.randrange(n_obj), rng.randrange(n_obj)) for _ in range(n_mor))
        table = {}
        ok = True
        for f in range(n_mor):
            for g in range(n_mor):
                if shape[g][0] == shape[f][1]:
                    choices = [h for h in range(n_mor) if shape[h] == (shape[f][0], shape[g][1])]
                    if not choices:
                        ok = False
                        break
                    table[(g, f)] = rng.choice(choices)
            if not ok:
                break
        if ok and _associative(shape, table):
            out.append(_present(n_obj, shape, table))
    return out


def functor_images(a: Presentation, b: Presentation, unital: bool = False
                   ) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Image sequences ``(objects, morphisms)`` of every (semi)functor ``a -> b``.

    Order: object maps lexicographically, then morphism maps lexicographically.
    """
    sa, sb = semicat_of(a), semicat_of(b)
    a_ends = [(sa.objects.index(sa.src(m)), sa.objects.index(sa.tgt(m))) for m in sa.morphisms]
    hom: dict = {}
    for k, n in enumerate(sb.morphisms):
        hom.setdefault((sb.objects.index(sb.src(n)), sb.objects.index(sb.tgt(n))), []).append(k)
    a_comp = [(sa.morphisms.index(g), sa.morphisms.index(f), sa.morphisms.index(h))
              for (g, f), h in sa.comp.items()]
    b_comp = {(sb.morphisms.index(g), sb.morphisms.index(f)): sb.morphisms.index(h)
              for (g, f), h in sb.comp.items()}
    a_units = {}
    if unital:
        a_units = {sa.morphisms.index(a.identity(x)): sa.objects.index(x) for x in sa.objects}
        b_units = [sb.morphisms.index(b.identity(y)) for y in sb.objects]
    for obj in product(range(len(sb.objects)), repeat=len(sa.objects)):
        options = []
        for k, (x, y) in enumerate(a_ends):
            choice = hom.get((obj[x], obj[y]), [])
            if k in a_units:
                unit = b_units[obj[a_units[k]]]
                choice = [unit] if unit in choice else []
            options.append(choice)
        for mor in product(*options):
            if all(b_comp[(mor[g], mor[f])] == mor[h] for g, f, h in a_comp):
                yield (tuple(sb.objects.elements[i] for i in obj),
                       tuple(sb.morphisms.elements[i] for i in mor))


def enumerate_functors(a: Presentation, b: Presentation, unital: bool = False
                       ) -> Iterator[CatFunctor]:
    """All structure-preserving (object map, morphism map) pairs, validated."""
    sa, sb = semicat_of(a), semicat_of(b)
    for obj, mor in functor_images(a, b, unital):
        yield CatFunctor(a, b, FinMap(sa.objects, sb.objects, obj),
                         FinMap(sa.morphisms, sb.morphisms, mor), unital)


def _signature(a: Presentation):
    s = semicat_of(a)
    degrees = sorted((sum(1 for m in s.morphisms if s.src(m) == x),
                      sum(1 for m in s.morphisms if s.tgt(m) == x)) for x in s.objects)
    return (type(a).__name__, len(s.objects), len(s.morphisms), tuple(degrees))


def find_isomorphism(a: Presentation, b: Presentation) -> Optional[tuple[FinMap, FinMap]]:
    """An isomorphism ``a -> b`` (object and morphism bijections), by exhaustive search."""
    if _signature(a) != _signature(b):
        return None
    sa, sb = semicat_of(a), semicat_of(b)
    for obj_images in permutations(sb.objects.elements):
        f0 = FinMap(sa.objects, sb.objects, obj_images)
        mors = list(sa.morphisms)
        used: set[str] = set()
        chosen: list[str] = []

        def search(k: int) -> bool:
            if k == len(mors):
                f1 = dict(zip(mors, chosen))
                if any(sb.comp[(f1[g], f1[f])] != f1[h] for (g, f), h in sa.comp.items()):
                    return False
                if isinstance(a, CatPresentation):
                    return all(f1[a.identity(x)] == b.identity(f0(x)) for x in sa.objects)
                return True
            m = mors[k]
            ends = (f0(sa.src(m)), f0(sa.tgt(m)))
            for n in sb.morphisms:
                if n not in used and (sb.src(n), sb.tgt(n)) == ends:
                    used.add(n)
                    chosen.append(n)
                    if search(k + 1):
                        return True
                    chosen.pop()
                    used.discard(n)
            return False

        if search(0):
            return f0, FinMap(sa.morphisms, sb.morphisms, tuple(chosen))
    return None


def iso_classes(items: Iterable[Presentation]) -> list[Presentation]:
    """First representative of each isomorphism class, in input order."""
    reps: list[Presentation] = []
    for item in items:
        if not any(find_isomorphism(item, r) is not None for r in reps):
            reps.append(item)
    return reps


def enumerate_two_fold(b: UniverseBounds, truncation: int = 2) -> list[tuple[str, object]]:
    """The 2-fold test universe, as ``(name, object)`` pairs.

    Square double nerves of the posets among the bounded categories, and the
    nerves of every locally preordered 2-category whose underlying category
    is one of the bounded categories (up to isomorphism).
    """
    from .nfold import compatible_preorders, is_poset, locally_preordered_nerve, square_double_nerve

    out = []
    reps = iso_classes(enumerate_categories(b))
    for k, c in enumerate(reps):
        if is_poset(c):
            out.append((f"squares/{k}", square_double_nerve(c, truncation)))
        for j, lp in enumerate(compatible_preorders(c)):
            out.append((f"preordered/{k}/{j}", locally_preordered_nerve(lp, truncation)))
    return out

"""Categories as monoids in spans over their object set.

A :class:`SpanMonoid` over ``X`` has a carrier span ``X <- A -> X``, a
multiplication ``A ×_X A -> A`` and an optional unit ``X -> A``.  The pair
``(a, b)`` in ``A ×_X A`` means "first ``a``, then ``b``", so for a
category the multiplication sends ``(a, b)`` to ``b ∘ a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Iterator, Optional, Sequence

from .catobj import (
    CatFunctor,
    CatPresentation,
    Presentation,
    SemicatPresentation,
    algebraic_to_simplicial,
    extensions_to_codiscrete,
    semicat_of,
)
from .finset import (
    FinMap,
    FinSet,
    InvalidStructure,
    all_maps,
    compose,
    pairing,
    pullback,
)
from .quasiunit import Report
from .spans import Span, SpanMorphism, identity_span, tensor_over_base


@dataclass(frozen=True)
class SpanMonoid:
    base: FinSet
    carrier: Span
    mult: FinMap
    unit: Optional[FinMap] = None

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, base, carrier, mult, unit=None) -> "SpanMonoid":
        obj = object.__new__(cls)
        for name, value in (("base", base), ("carrier", carrier), ("mult", mult), ("unit", unit)):
            object.__setattr__(obj, name, value)
        return obj

    @property
    def apex(self) -> FinSet:
        return self.carrier.apex

    def pairs(self) -> tuple[FinSet, FinMap, FinMap]:
        """``A ×_X A`` with its two projections."""
        return pullback(self.carrier.right, self.carrier.left)

    def triples(self):
        """Both bracketings of ``A ×_X A ×_X A`` and the associator between them.

        Returns ``(left_nested, right_nested, associator)`` where each nested
        limit is ``(apex, outer projection, inner projection)``.
        """
        pairs, p1, p2 = self.pairs()
        lefts = pullback(compose(self.carrier.right, p2), self.carrier.left)
        rights = pullback(self.carrier.right, compose(self.carrier.left, p1))
        lapex, l_ab, l_c = lefts
        rapex, r_a, r_bc = rights
        a_of = compose(p1, l_ab)
        bc = pairing(pairs, p1, p2, compose(p2, l_ab), l_c)
        associator = pairing(rapex, r_a, r_bc, a_of, bc)
        return lefts, rights, associator

    def problems(self) -> list[str]:
        x, span, m = self.base, self.carrier, self.mult
        if span.source != x or span.target != x:
            return ["carrier must be a span from the base to itself"]
        pairs, p1, p2 = self.pairs()
        if m.dom != pairs or m.cod != span.apex:
            return ["multiplication must run from the pullback of the carrier to its apex"]
        out = []
        if compose(span.left, m) != compose(span.left, p1):
            out.append("multiplication does not preserve the left leg")
        if compose(span.right, m) != compose(span.right, p2):
            out.append("multiplication does not preserve the right leg")
        if out:
            return out
        (lapex, l_ab, l_c), (rapex, r_a, r_bc), associator = self.triples()
        left_route = compose(m, pairing(pairs, p1, p2, compose(m, l_ab), l_c))
        right_route = compose(m, pairing(pairs, p1, p2, r_a, compose(m, r_bc)))
        if left_route != compose(right_route, associator):
            out.append("multiplication is not associative")
        if self.unit is not None:
            out.extend(unit_law_problems(self, self.unit))
        return out


def _unitors(m: SpanMonoid):
    """``X ×_X A`` and ``A ×_X X`` with their canonical maps to ``A``."""
    ident = identity_span(m.base)
    on_left = pullback(ident.right, m.carrier.left)
    on_right = pullback(m.carrier.right, ident.left)
    return on_left, on_right


def unit_law_problems(m: SpanMonoid, u: FinMap) -> list[str]:
    if u.dom != m.base or u.cod != m.apex:
        return ["unit must run from the base to the apex"]
    out = []
    ident = FinMap.identity(m.base)
    if compose(m.carrier.left, u) != ident or compose(m.carrier.right, u) != ident:
        return ["unit is not a section of both legs"]
    pairs, p1, p2 = m.pairs()
    (lx, lx_x, lx_a), (rx, rx_a, rx_x) = _unitors(m)
    left = compose(m.mult, pairing(pairs, p1, p2, compose(u, lx_x), lx_a))
    if left != lx_a:
        out.append("left unit law fails")
    right = compose(m.mult, pairing(pairs, p1, p2, rx_a, compose(u, rx_x)))
    if right != rx_a:
        out.append("right unit law fails")
    return out


def cat_to_span_monoid(a: Presentation) -> SpanMonoid:
    s = semicat_of(a)
    carrier = Span(s.src, s.tgt)
    pairs, p1, p2 = pullback(s.tgt, s.src)
    mult = FinMap(pairs, s.morphisms, tuple(
        s.comp[(g, f)] for f, g in zip(p1.images, p2.images)))
    unit = a.identity if isinstance(a, CatPresentation) else None
    return SpanMonoid(s.objects, carrier, mult, unit)


def span_monoid_to_cat(m: SpanMonoid) -> Presentation:
    problems = m.problems()
    if problems:
        raise InvalidStructure(problems[0])
    pairs, p1, p2 = m.pairs()
    comp = {(g, f): m.mult(z) for z, f, g in zip(pairs, p1.images, p2.images)}
    semi = SemicatPresentation(m.base, m.apex, m.carrier.left, m.carrier.right, comp)
    if m.unit is None:
        return semi
    return CatPresentation(semi, m.unit)


def quasi_unit_of_monoid(m: SpanMonoid) -> Optional[FinMap]:
    """The section of both legs satisfying the unit laws, ignoring ``m.unit``."""
    found = [u for u in all_maps(m.base, m.apex) if not unit_law_problems(m, u)]
    if len(found) > 1:
        raise InvalidStructure("more than one quasi-unit")
    return found[0] if found else None


def forget_monoid_unit(m: SpanMonoid) -> SpanMonoid:
    return SpanMonoid(m.base, m.carrier, m.mult)


# -- morphisms ------------------------------------------------------------------

@dataclass(frozen=True)
class MonoidMorphism:
    """A function on bases with a compatible map of apexes."""

    source: SpanMonoid
    target: SpanMonoid
    on_base: FinMap
    on_apex: FinMap


def monoid_morphism_problems(f: MonoidMorphism) -> list[str]:
    a, b, g, h = f.source, f.target, f.on_base, f.on_apex
    if g.dom != a.base or g.cod != b.base or h.dom != a.apex or h.cod != b.apex:
        return ["components have the wrong domain or codomain"]
    if compose(b.carrier.left, h) != compose(g, a.carrier.left):
        return ["apex map does not cover the base map on the left"]
    if compose(b.carrier.right, h) != compose(g, a.carrier.right):
        return ["apex map does not cover the base map on the right"]
    pa, pa1, pa2 = a.pairs()
    pb, pb1, pb2 = b.pairs()
    hh = pairing(pb, pb1, pb2, compose(h, pa1), compose(h, pa2))
    if compose(b.mult, hh) != compose(h, a.mult):
        return ["apex map does not respect multiplication"]
    return []


def _monoid_tables(m: SpanMonoid):
    left = [m.base.index(v) for v in m.carrier.left.images]
    right = [m.base.index(v) for v in m.carrier.right.images]
    pairs, p1, p2 = m.pairs()
    mult = {(m.apex.index(a), m.apex.index(b)): m.apex.index(c)
            for a, b, c in zip(p1.images, p2.images, m.mult.images)}
    return left, right, mult


def monoid_morphism_images(a: SpanMonoid, b: SpanMonoid
                           ) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Image sequences ``(base, apex)`` of every monoid morphism ``a -> b``.

    Base maps times every apex map over them, filtered by the multiplication law.
    """
    yield from _morphism_images(a, _monoid_tables(a), b, _monoid_tables(b))


def _morphism_images(a, a_tables, b, b_tables):
    a_left, a_right, a_mult = a_tables
    b_left, b_right, b_mult = b_tables
    by_ends: dict = {}
    for t, ends in enumerate(zip(b_left, b_right)):
        by_ends.setdefault(ends, []).append(t)
    for base in _cartesian(range(len(b.base)), repeat=len(a.base)):
        fibres = [by_ends.get((base[l], base[r]), []) for l, r in zip(a_left, a_right)]
        for h in _cartesian(*fibres):
            if all(b_mult[(h[x], h[y])] == h[z] for (x, y), z in a_mult.items()):
                yield (tuple(b.base.elements[i] for i in base),
                       tuple(b.apex.elements[i] for i in h))


def enumerate_monoid_morphisms(a: SpanMonoid, b: SpanMonoid) -> Iterator[MonoidMorphism]:
    for base, apex in monoid_morphism_images(a, b):
        f = MonoidMorphism(a, b, FinMap(a.base, b.base, base), FinMap(a.apex, b.apex, apex))
        problems = monoid_morphism_problems(f)
        if problems:
            raise InvalidStructure(problems[0])
        yield f


def functor_of_monoid_morphism(f: MonoidMorphism) -> CatFunctor:
    return CatFunctor(span_monoid_to_cat(f.source), span_monoid_to_cat(f.target),
                      f.on_base, f.on_apex)


def hom_set_comparison(a: Presentation, b: Presentation) -> dict:
    """Semifunctors ``a -> b`` against monoid morphisms between the translations."""
    from .enumeration import functor_images

    functors = set(functor_images(semicat_of(a), semicat_of(b)))
    morphisms = set(monoid_morphism_images(cat_to_span_monoid(semicat_of(a)),
                                           cat_to_span_monoid(semicat_of(b))))
    return {"functors": len(functors), "monoid_morphisms": len(morphisms),
            "bijective": functors == morphisms}


def hom_set_sweep(universe: Sequence[Presentation]) -> Report:
    """:func:`hom_set_comparison` for every ordered pair, translations computed once."""
    from .enumeration import functor_images

    report = Report("functor-monoid-morphism")
    semis = [semicat_of(a) for a in universe]
    monoids = [cat_to_span_monoid(s) for s in semis]
    tables = [_monoid_tables(m) for m in monoids]
    total = 0
    for i, a in enumerate(semis):
        for j, b in enumerate(semis):
            report.checked += 1
            functors = set(functor_images(a, b))
            morphisms = set(_morphism_images(monoids[i], tables[i], monoids[j], tables[j]))
            total += len(functors)
            if functors != morphisms:
                report.fail({"pair": [i, j], "functors": len(functors),
                             "monoid_morphisms": len(morphisms)})
    report.notes["functors"] = total
    return report


def square_witness(a: Presentation) -> SpanMorphism:
    """``carrier ⊗ carrier`` against the span ``X_0 <- X_2 -> X_0``, matched by label."""
    m = cat_to_span_monoid(a)
    tensor = tensor_over_base(m.base, m.carrier, m.carrier)
    nerve = algebraic_to_simplicial(semicat_of(a), 2)
    first = compose(nerve.face(1, 1), nerve.face(2, 2))
    last = compose(nerve.face(1, 0), nerve.face(2, 0))
    level2 = Span(first, last)
    return SpanMorphism(tensor, level2, FinMap(tensor.apex, level2.apex, tensor.apex.elements))


# -- maps into codiscrete objects -------------------------------------------------

def codiscrete_algebra_check(s: FinSet, universe: Iterable[Presentation],
                             truncation: int = 2) -> Report:
    """Maps into the codiscrete object on ``s`` against object maps into ``s``.

    Every object map must extend in exactly one way.
    """
    report = Report("codiscrete-algebra")
    for k, a in enumerate(universe):
        x = algebraic_to_simplicial(a, truncation)
        object_maps = list(all_maps(x.levels[0], s))
        extensions = 0
        for g in object_maps:
            report.checked += 1
            found = extensions_to_codiscrete(x, g, limit=2)
            extensions += len(found)
            if len(found) != 1:
                report.fail({"item": k, "object_map": list(g.images), "extensions": len(found)})
        report.notes.setdefault("counts", []).append([len(object_maps), extensions])
    return report

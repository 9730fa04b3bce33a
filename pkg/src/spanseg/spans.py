"""Spans of finite sets and diagrams on the interval posets.

Composition order: ``span_compose(s, t)`` for ``s: I <- A -> J`` and
``t: J <- B -> K`` is "first ``s``, then ``t``", with apex the canonical
pullback ``A ×_J B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .catobj import TruncatedSimplicialObject, algebraic_to_simplicial
from .finset import (
    FinMap,
    FinSet,
    InvalidStructure,
    compose,
    is_bijection,
    iterated_pullback,
    pullback,
)
from .simplex import (
    ShatMorphism,
    SigmaElement,
    identity as simplex_identity,
    pi_morphism,
    sigma_elements,
    sigma_leq,
)


@dataclass(frozen=True)
class Span:
    left: FinMap
    right: FinMap

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise InvalidStructure("span legs must share an apex")

    @property
    def apex(self) -> FinSet:
        return self.left.dom

    @property
    def source(self) -> FinSet:
        return self.left.cod

    @property
    def target(self) -> FinSet:
        return self.right.cod


@dataclass(frozen=True)
class SpanMorphism:
    source: Span
    target: Span
    apex_map: FinMap

    def __post_init__(self):
        s, t, m = self.source, self.target, self.apex_map
        if m.dom != s.apex or m.cod != t.apex:
            raise InvalidStructure("apex map has the wrong domain or codomain")
        if s.source != t.source or s.target != t.target:
            raise InvalidStructure("span morphisms fix the feet")
        if compose(t.left, m) != s.left or compose(t.right, m) != s.right:
            raise InvalidStructure("apex map does not commute with the legs")


def identity_span(x: FinSet) -> Span:
    ident = FinMap.identity(x)
    return Span(ident, ident)


def span_compose(s: Span, t: Span) -> Span:
    if s.target != t.source:
        raise InvalidStructure("spans do not meet at a common foot")
    _, p1, p2 = pullback(s.right, t.left)
    return Span(compose(s.left, p1), compose(t.right, p2))


def span_isomorphic(s: Span, t: Span) -> Optional[SpanMorphism]:
    """A bijective apex map commuting with the legs, or ``None``.

    Exhaustive backtracking over bijections; candidates for each apex
    element are restricted to elements with the same pair of feet.
    """
    if s.source != t.source or s.target != t.target:
        raise InvalidStructure("spans have different feet")
    if len(s.apex) != len(t.apex):
        return None
    feet_t = list(zip(t.left.images, t.right.images))
    wanted = list(zip(s.left.images, s.right.images))
    used = [False] * len(t.apex)
    chosen: list[int] = []

    def search(k: int) -> bool:
        if k == len(wanted):
            return True
        for pos, foot in enumerate(feet_t):
            if not used[pos] and foot == wanted[k]:
                used[pos] = True
                chosen.append(pos)
                if search(k + 1):
                    return True
                chosen.pop()
                used[pos] = False
        return False

    if not search(0):
        return None
    apex_map = FinMap(s.apex, t.apex, tuple(t.apex.elements[pos] for pos in chosen))
    return SpanMorphism(s, t, apex_map)


def tensor_over_base(x: FinSet, s: Span, t: Span) -> Span:
    """``X <- Y ×_X Z -> X``; the unit is :func:`identity_span`."""
    for foot in (s.source, s.target, t.source, t.target):
        if foot != x:
            raise InvalidStructure("all feet must equal the base")
    return span_compose(s, t)


# -- diagrams on interval posets ----------------------------------------------

Interval = tuple[int, int]


def covering_relations(n: int) -> list[tuple[Interval, Interval]]:
    """``(i,j) <= (i+1,j)`` and ``(i,j) <= (i,j-1)`` for ``i < j``."""
    out = []
    for e in sigma_elements(n):
        if e.lo < e.hi:
            out.append(((e.lo, e.hi), (e.lo + 1, e.hi)))
            out.append(((e.lo, e.hi), (e.lo, e.hi - 1)))
    return out


@dataclass(frozen=True)
class SigmaDiagram:
    """A functor from the interval poset of ``[n]`` to finite sets.

    An arrow runs from an interval to each of its subintervals; only the
    covering relations are stored.
    """

    ambient: int
    values: Mapping[Interval, FinSet]
    arrows: Mapping[tuple[Interval, Interval], FinMap]

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))
        object.__setattr__(self, "arrows", dict(self.arrows))
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, ambient, values, arrows) -> "SigmaDiagram":
        obj = object.__new__(cls)
        object.__setattr__(obj, "ambient", ambient)
        object.__setattr__(obj, "values", dict(values))
        object.__setattr__(obj, "arrows", dict(arrows))
        return obj

    def problems(self) -> list[str]:
        n = self.ambient
        keys = {(e.lo, e.hi) for e in sigma_elements(n)}
        if set(self.values) != keys:
            return ["values must be given on exactly the intervals of [n]"]
        covers = covering_relations(n)
        if set(self.arrows) != set(covers):
            return ["arrows must be given on exactly the covering relations"]
        out = []
        for (a, b), m in self.arrows.items():
            if m.dom != self.values[a] or m.cod != self.values[b]:
                out.append(f"arrow {a}->{b} has the wrong domain or codomain")
        if out:
            return out
        for e in sigma_elements(n):
            i, j = e.lo, e.hi
            if j - i >= 2:
                via_lo = compose(self.arrows[((i + 1, j), (i + 1, j - 1))],
                                 self.arrows[((i, j), (i + 1, j))])
                via_hi = compose(self.arrows[((i, j - 1), (i + 1, j - 1))],
                                 self.arrows[((i, j), (i, j - 1))])
                if via_lo != via_hi:
                    out.append(f"square at ({i},{j}) does not commute")
        return out

    def arrow(self, a: Interval, b: Interval) -> FinMap:
        """The value on ``a <= b``, composed from covering relations."""
        n = self.ambient
        if not sigma_leq(SigmaElement(n, *a), SigmaElement(n, *b)):
            raise InvalidStructure(f"{b} is not a subinterval of {a}")
        out = FinMap.identity(self.values[a])
        i, j = a
        while i < b[0]:
            out = compose(self.arrows[((i, j), (i + 1, j))], out)
            i += 1
        while j > b[1]:
            out = compose(self.arrows[((i, j), (i, j - 1))], out)
            j -= 1
        return out


def spanplus_comparison(f: SigmaDiagram, i: int, j: int) -> FinMap:
    """``F(i,j) -> F(i,i+1) ×_{F(i+1,i+1)} ... ×_{F(j-1,j-1)} F(j-1,j)``."""
    pieces = [(k, k + 1) for k in range(i, j)]
    rights = [f.arrow((k, k + 1), (k + 1, k + 1)) for k in range(i, j - 1)]
    lefts = [f.arrow((k + 1, k + 2), (k + 1, k + 1)) for k in range(i, j - 1)]
    apex, projections = iterated_pullback(f.values[pieces[0]], rights, lefts)
    lookup = {tuple(p.images[k] for p in projections): z for k, z in enumerate(apex)}
    legs = [f.arrow((i, j), piece) for piece in pieces]
    source = f.values[(i, j)]
    return FinMap(source, apex, tuple(
        lookup[tuple(leg.images[k] for leg in legs)] for k in range(len(source))))


def check_spanplus_segal(f: SigmaDiagram) -> bool:
    if f.problems():
        raise InvalidStructure("diagram is not functorial")
    for e in sigma_elements(f.ambient):
        if e.hi - e.lo >= 2 and not is_bijection(spanplus_comparison(f, e.lo, e.hi)):
            return False
    return True


def catobj_to_sigma_diagram(x, n: int) -> SigmaDiagram:
    """``F(i,j) = X_{j-i}``, with arrows ``X`` applied to the interval restriction maps."""
    if not isinstance(x, TruncatedSimplicialObject):
        x = algebraic_to_simplicial(x)
    if n > x.truncation:
        raise InvalidStructure(f"truncation {x.truncation} is below {n}")
    values = {(e.lo, e.hi): x.levels[e.hi - e.lo] for e in sigma_elements(n)}
    arrows = {}
    for a, b in covering_relations(n):
        big, small = SigmaElement(n, *a), SigmaElement(n, *b)
        m = ShatMorphism(big, small, simplex_identity(n))
        arrows[(a, b)] = x.apply(pi_morphism(m))
    return SigmaDiagram(n, values, arrows)

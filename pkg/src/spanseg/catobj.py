"""Category objects in finite sets, simplicial and algebraic.

A :class:`TruncatedSimplicialObject` stores levels ``X_0 .. X_N`` together
with face maps and, in the unital case, degeneracy maps.  A
:class:`SemicatPresentation` is the algebraic form: objects, morphisms,
source, target and a composition table.  The two are translated by
:func:`algebraic_to_simplicial` (nerve of composable strings) and
:func:`simplicial_to_algebraic`.

Equivalences of spaces are read as bijections of finite sets throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from itertools import product as _cartesian
from typing import Iterable, Mapping, Optional, Sequence, Union

from .finset import (
    FinMap,
    FinSet,
    InvalidStructure,
    compose,
    is_bijection,
    iterated_pullback,
    pairing,
    pullback,
    product,
    tuple_label,
)
from .simplex import SimplexMap, rho

DEFAULT_TRUNCATION = 3


def _unchecked(cls, **values):
    obj = object.__new__(cls)
    for f in fields(cls):
        object.__setattr__(obj, f.name, values[f.name])
    return obj


# -- algebraic presentations ---------------------------------------------------

@dataclass(frozen=True)
class SemicatPresentation:
    """A semicategory: ``comp[(g, f)]`` is ``g ∘ f``, defined iff ``src(g) == tgt(f)``."""

    objects: FinSet
    morphisms: FinSet
    src: FinMap
    tgt: FinMap
    comp: Mapping[tuple[str, str], str]

    def __post_init__(self):
        object.__setattr__(self, "comp", dict(self.comp))
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, objects, morphisms, src, tgt, comp) -> "SemicatPresentation":
        """Build without validation (used to produce deliberately broken data)."""
        return _unchecked(cls, objects=objects, morphisms=morphisms, src=src,
                          tgt=tgt, comp=dict(comp))

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [(g, f) for f in self.morphisms for g in self.morphisms
                if self.src(g) == self.tgt(f)]

    def problems(self) -> list[str]:
        out = []
        for name, m in (("src", self.src), ("tgt", self.tgt)):
            if m.dom != self.morphisms or m.cod != self.objects:
                out.append(f"{name} must map morphisms to objects")
        if out:
            return out
        pairs = self.composable_pairs()
        if set(self.comp) != set(pairs):
            missing = sorted(set(pairs) - set(self.comp))
            extra = sorted(set(self.comp) - set(pairs))
            out.append(f"composition table wrong: missing {missing}, extra {extra}")
            return out
        for (g, f), h in self.comp.items():
            if h not in self.morphisms:
                out.append(f"{g}∘{f} = {h!r} is not a morphism")
            elif self.src(h) != self.src(f) or self.tgt(h) != self.tgt(g):
                out.append(f"{g}∘{f} = {h} has the wrong source or target")
        if out:
            return out
        for g, f in pairs:
            gf = self.comp[(g, f)]
            for h in self.morphisms:
                if self.src(h) == self.tgt(g):
                    if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                        out.append(f"associativity fails at ({h},{g},{f})")
        return out

    def compose(self, g: str, f: str) -> str:
        return self.comp[(g, f)]


@dataclass(frozen=True)
class CatPresentation:
    underlying: SemicatPresentation
    identity: FinMap

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, underlying, identity) -> "CatPresentation":
        return _unchecked(cls, underlying=underlying, identity=identity)

    @property
    def objects(self) -> FinSet:
        return self.underlying.objects

    @property
    def morphisms(self) -> FinSet:
        return self.underlying.morphisms

    @property
    def src(self) -> FinMap:
        return self.underlying.src

    @property
    def tgt(self) -> FinMap:
        return self.underlying.tgt

    @property
    def comp(self) -> Mapping[tuple[str, str], str]:
        return self.underlying.comp

    def compose(self, g: str, f: str) -> str:
        return self.underlying.comp[(g, f)]

    def problems(self) -> list[str]:
        a, u = self.underlying, self.identity
        if u.dom != a.objects or u.cod != a.morphisms:
            return ["identity must map objects to morphisms"]
        out = []
        for x in a.objects:
            if a.src(u(x)) != x or a.tgt(u(x)) != x:
                out.append(f"identity of {x} is not an endomorphism of {x}")
        if out:
            return out
        for f in a.morphisms:
            if a.comp[(u(a.tgt(f)), f)] != f or a.comp[(f, u(a.src(f)))] != f:
                out.append(f"identities do not act trivially on {f}")
        return out


Presentation = Union[SemicatPresentation, CatPresentation]


def semicat_of(a: Presentation) -> SemicatPresentation:
    return a.underlying if isinstance(a, CatPresentation) else a


@dataclass(frozen=True)
class CatFunctor:
    source: Presentation
    target: Presentation
    on_objects: FinMap
    on_morphisms: FinMap
    unital: bool = False

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, source, target, on_objects, on_morphisms, unital=False):
        return _unchecked(cls, source=source, target=target, on_objects=on_objects,
                          on_morphisms=on_morphisms, unital=unital)

    def problems(self) -> list[str]:
        a, b = semicat_of(self.source), semicat_of(self.target)
        f0, f1 = self.on_objects, self.on_morphisms
        if f0.dom != a.objects or f0.cod != b.objects:
            return ["object map has the wrong domain or codomain"]
        if f1.dom != a.morphisms or f1.cod != b.morphisms:
            return ["morphism map has the wrong domain or codomain"]
        out = []
        for m in a.morphisms:
            if b.src(f1(m)) != f0(a.src(m)) or b.tgt(f1(m)) != f0(a.tgt(m)):
                out.append(f"{m} is not sent between the images of its endpoints")
        for (g, f), h in a.comp.items():
            if not out and b.comp[(f1(g), f1(f))] != f1(h):
                out.append(f"composite {g}∘{f} is not preserved")
        if self.unital:
            if not (isinstance(self.source, CatPresentation)
                    and isinstance(self.target, CatPresentation)):
                out.append("a unital functor needs unital endpoints")
            else:
                for x in a.objects:
                    if f1(self.source.identity(x)) != self.target.identity(f0(x)):
                        out.append(f"identity of {x} is not preserved")
        return out


def hom_set(a: Presentation, x: str, y: str) -> FinSet:
    a = semicat_of(a)
    if x not in a.objects or y not in a.objects:
        raise KeyError(f"unknown objects {x!r}, {y!r}")
    return FinSet(tuple(f for f in a.morphisms if a.src(f) == x and a.tgt(f) == y))


# -- simplicial presentation ---------------------------------------------------

@dataclass(frozen=True)
class TruncatedSimplicialObject:
    """Levels ``X_0 .. X_N`` with generator maps.

    ``faces[n - 1][i]`` is ``d_i: X_n -> X_{n-1}`` for ``1 <= n <= N``;
    ``degeneracies[n][i]`` is ``s_i: X_n -> X_{n+1}`` for ``0 <= n < N``, or
    ``degeneracies is None`` for a non-unital (semi-simplicial) object.
    """

    levels: tuple[FinSet, ...]
    faces: tuple[tuple[FinMap, ...], ...]
    degeneracies: Optional[tuple[tuple[FinMap, ...], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "faces", tuple(tuple(fs) for fs in self.faces))
        if self.degeneracies is not None:
            object.__setattr__(self, "degeneracies",
                               tuple(tuple(ss) for ss in self.degeneracies))
        shape = self.shape_problems()
        if shape:
            raise InvalidStructure(shape[0])
        bad = self.identity_violations()
        if bad:
            raise InvalidStructure(bad[0])

    @classmethod
    def unchecked(cls, levels, faces, degeneracies=None) -> "TruncatedSimplicialObject":
        return _unchecked(cls, levels=tuple(levels),
                          faces=tuple(tuple(fs) for fs in faces),
                          degeneracies=None if degeneracies is None
                          else tuple(tuple(ss) for ss in degeneracies))

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def unital(self) -> bool:
        return self.degeneracies is not None

    def face(self, n: int, i: int) -> FinMap:
        return self.faces[n - 1][i]

    def degeneracy(self, n: int, i: int) -> FinMap:
        if self.degeneracies is None:
            raise InvalidStructure("non-unital object has no degeneracies")
        return self.degeneracies[n][i]

    def shape_problems(self) -> list[str]:
        out = []
        top = self.truncation
        if top < 0:
            return ["a simplicial object needs at least level 0"]
        if len(self.faces) != top:
            return [f"expected face maps for levels 1..{top}"]
        for n in range(1, top + 1):
            if len(self.faces[n - 1]) != n + 1:
                out.append(f"level {n} needs {n + 1} face maps")
                continue
            for i, d in enumerate(self.faces[n - 1]):
                if d.dom != self.levels[n] or d.cod != self.levels[n - 1]:
                    out.append(f"d_{i} at level {n} has the wrong domain or codomain")
        if self.degeneracies is not None:
            if len(self.degeneracies) != top:
                return out + [f"expected degeneracies for levels 0..{top - 1}"]
            for n in range(top):
                if len(self.degeneracies[n]) != n + 1:
                    out.append(f"level {n} needs {n + 1} degeneracies")
                    continue
                for i, s in enumerate(self.degeneracies[n]):
                    if s.dom != self.levels[n] or s.cod != self.levels[n + 1]:
                        out.append(f"s_{i} at level {n} has the wrong domain or codomain")
        return out

    def identity_violations(self) -> list[str]:
        """All failing simplicial identities among the stored generators."""
        out = []
        d, top = self.face, self.truncation
        for n in range(2, top + 1):
            for j in range(n + 1):
                for i in range(j):
                    if compose(d(n - 1, i), d(n, j)) != compose(d(n - 1, j - 1), d(n, i)):
                        out.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on level {n}")
        if self.degeneracies is None:
            return out
        s = self.degeneracy
        for n in range(top):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = compose(d(n + 1, i), s(n, j))
                    if i < j:
                        rhs = compose(s(n - 1, j - 1), d(n, i))
                    elif i in (j, j + 1):
                        rhs = FinMap.identity(self.levels[n])
                    else:
                        rhs = compose(s(n - 1, j), d(n, i - 1))
                    if lhs != rhs:
                        out.append(f"d_{i} s_{j} identity fails on level {n}")
        for n in range(top - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if compose(s(n + 1, i), s(n, j)) != compose(s(n + 1, j + 1), s(n, i)):
                        out.append(f"s_{i} s_{j} != s_{j + 1} s_{i} on level {n}")
        return out

    def apply(self, phi: SimplexMap) -> FinMap:
        """``X(phi): X_n -> X_m`` for ``phi: [m] -> [n]``, via generators."""
        m, n = phi.domain_size, phi.codomain_size
        if n > self.truncation or m > self.truncation:
            raise InvalidStructure(f"{phi} leaves the truncation")
        values = list(phi.values)
        if not phi.is_injective():
            if not self.unital:
                raise InvalidStructure(f"{phi} is not injective; object is non-unital")
            j = next(k for k in range(m) if values[k] == values[k + 1])
            rest = SimplexMap(m - 1, n, tuple(values[:j + 1] + values[j + 2:]))
            return compose(self.degeneracy(m - 1, j), self.apply(rest))
        missing = [k for k in range(n + 1) if k not in values]
        if not missing:
            return FinMap.identity(self.levels[n])
        a = missing[-1]
        rest = SimplexMap(m, n - 1, tuple(v if v < a else v - 1 for v in values))
        return compose(self.apply(rest), self.face(n, a))


AnyObject = Union[TruncatedSimplicialObject, Presentation]


def truncate(x: TruncatedSimplicialObject, top: int) -> TruncatedSimplicialObject:
    if top > x.truncation:
        raise InvalidStructure(f"cannot truncate level {x.truncation} object at {top}")
    degs = None if x.degeneracies is None else x.degeneracies[:top]
    return TruncatedSimplicialObject.unchecked(x.levels[:top + 1], x.faces[:top], degs)


def _segal_lookup(apex: FinSet, projections: Sequence[FinMap]) -> dict:
    return {tuple(p.images[k] for p in projections): z for k, z in enumerate(apex)}


def segal_map(x: TruncatedSimplicialObject, n: int) -> Optional[FinMap]:
    """The comparison ``X_n -> X_1 ×_{X_0} ... ×_{X_0} X_1``.

    Returns ``None`` when the spine of some cell does not land in the limit
    (possible only when the identities fail).
    """
    edges = [x.apply(rho(k, k + 1, n)) for k in range(n)]
    if n == 0:
        return FinMap.identity(x.levels[0])
    target, source = x.face(1, 0), x.face(1, 1)
    apex, projections = iterated_pullback(x.levels[1], [target] * (n - 1), [source] * (n - 1))
    lookup = _segal_lookup(apex, projections)
    images = []
    for k in range(len(x.levels[n])):
        spine = tuple(e.images[k] for e in edges)
        if spine not in lookup:
            return None
        images.append(lookup[spine])
    return FinMap(x.levels[n], apex, tuple(images))


def segal_failure(x: TruncatedSimplicialObject, upto: Optional[int] = None) -> Optional[str]:
    top = x.truncation if upto is None else min(upto, x.truncation)
    for n in range(2, top + 1):
        m = segal_map(x, n)
        if m is None:
            return f"level {n}: spine of a cell is not composable"
        if not is_bijection(m):
            return (f"level {n}: {len(m.dom)} cells vs "
                    f"{len(m.cod)} composable strings, or not injective")
    return None


def check_segal(x: AnyObject, upto: Optional[int] = None) -> bool:
    """Segal condition at every level ``2 <= n <= upto`` (default: truncation)."""
    if not isinstance(x, TruncatedSimplicialObject):
        x = algebraic_to_simplicial(x)
    return segal_failure(x, upto) is None


def validate_simplicial(x: TruncatedSimplicialObject) -> list[str]:
    return x.shape_problems() or x.identity_violations()


# -- nerves --------------------------------------------------------------------

def _string_label(seq: Sequence[str]) -> str:
    return seq[0] if len(seq) == 1 else tuple_label(seq)


def composable_strings(a: Presentation, n: int) -> list[tuple[str, ...]]:
    """Strings ``(f_1, ..., f_n)`` with ``tgt(f_k) == src(f_{k+1})``, for ``n >= 1``."""
    if n < 1:
        raise ValueError("strings have length at least 1")
    a = semicat_of(a)
    strings = [(f,) for f in a.morphisms]
    for _ in range(n - 1):
        strings = [s + (g,) for s in strings for g in a.morphisms
                   if a.tgt(s[-1]) == a.src(g)]
    return strings


def algebraic_to_simplicial(a: Presentation, truncation: int = DEFAULT_TRUNCATION
                            ) -> TruncatedSimplicialObject:
    """The nerve: ``X_n`` is the set of composable ``n``-strings."""
    s = semicat_of(a)
    strings = {n: composable_strings(s, n) for n in range(1, truncation + 1)}
    levels = [s.objects] + [FinSet(tuple(_string_label(w) for w in strings[n]))
                            for n in range(1, truncation + 1)]
    faces = []
    for n in range(1, truncation + 1):
        if n == 1:
            faces.append((s.tgt, s.src))
            continue
        level = []
        for i in range(n + 1):
            def face(w, i=i):
                if i == 0:
                    return w[1:]
                if i == n:
                    return w[:-1]
                return w[:i - 1] + (s.comp[(w[i], w[i - 1])],) + w[i + 1:]
            level.append(FinMap(levels[n], levels[n - 1],
                                tuple(_string_label(face(w)) for w in strings[n])))
        faces.append(tuple(level))
    degeneracies = None
    if isinstance(a, CatPresentation):
        ident = a.identity
        degeneracies = [(ident,)] if truncation >= 1 else []
        for n in range(1, truncation):
            level = []
            for j in range(n + 1):
                def degen(w, j=j):
                    vertex = s.src(w[0]) if j == 0 else s.tgt(w[j - 1])
                    return w[:j] + (ident(vertex),) + w[j:]
                level.append(FinMap(levels[n], levels[n + 1],
                                    tuple(_string_label(degen(w)) for w in strings[n])))
            degeneracies.append(tuple(level))
    return TruncatedSimplicialObject(tuple(levels), tuple(faces),
                                     None if degeneracies is None else tuple(degeneracies))


def simplicial_to_algebraic(x: TruncatedSimplicialObject) -> Presentation:
    """Objects ``X_0``, morphisms ``X_1``, composition read off ``X_2``."""
    if x.truncation < 2:
        raise InvalidStructure("composition needs level 2")
    failure = segal_failure(x)
    if failure:
        raise InvalidStructure(f"Segal condition fails: {failure}")
    d0, d1, d2 = x.face(2, 0), x.face(2, 1), x.face(2, 2)
    comp = {(d0.images[k], d2.images[k]): d1.images[k] for k in range(len(x.levels[2]))}
    semi = SemicatPresentation(x.levels[0], x.levels[1], x.face(1, 1), x.face(1, 0), comp)
    if x.unital:
        return CatPresentation(semi, x.degeneracy(0, 0))
    return semi


def is_simplicial_map(components: Sequence[FinMap], x: TruncatedSimplicialObject,
                      y: TruncatedSimplicialObject, with_degeneracies: bool = True) -> bool:
    """Levelwise maps ``X_n -> Y_n`` commuting with the generators."""
    top = min(x.truncation, y.truncation)
    if len(components) < top + 1:
        return False
    for n in range(top + 1):
        c = components[n]
        if c.dom != x.levels[n] or c.cod != y.levels[n]:
            return False
    for n in range(1, top + 1):
        for i in range(n + 1):
            if compose(y.face(n, i), components[n]) != compose(components[n - 1], x.face(n, i)):
                return False
    if with_degeneracies and x.unital and y.unital:
        for n in range(top):
            for j in range(n + 1):
                if (compose(y.degeneracy(n, j), components[n])
                        != compose(components[n + 1], x.degeneracy(n, j))):
                    return False
    return True


def nerve_comparison(x: TruncatedSimplicialObject) -> list[FinMap]:
    """Levelwise maps from ``x`` to the nerve of its algebraic presentation.

    Each cell is sent to its spine of edges.  For a Segal object these are
    bijections forming a simplicial isomorphism.
    """
    nerve = algebraic_to_simplicial(simplicial_to_algebraic(x), x.truncation)
    out = [FinMap.identity(x.levels[0])]
    for n in range(1, x.truncation + 1):
        edges = [x.apply(rho(k, k + 1, n)) for k in range(n)]
        out.append(FinMap(x.levels[n], nerve.levels[n], tuple(
            _string_label(tuple(e.images[k] for e in edges))
            for k in range(len(x.levels[n])))))
    return out


# -- codiscrete objects and restriction ---------------------------------------

def _tuples(s: FinSet, n: int) -> list[tuple[str, ...]]:
    return list(_cartesian(s.elements, repeat=n + 1))


def _tuple_name(t: Sequence[str]) -> str:
    return t[0] if len(t) == 1 else tuple_label(t)


def codiscrete(s: FinSet, truncation: int = DEFAULT_TRUNCATION) -> TruncatedSimplicialObject:
    """Level ``n`` is ``S^(n+1)``; faces drop and degeneracies repeat coordinates."""
    tuples = [_tuples(s, n) for n in range(truncation + 1)]
    levels = [FinSet(tuple(_tuple_name(t) for t in ts)) for ts in tuples]
    faces = []
    for n in range(1, truncation + 1):
        faces.append(tuple(
            FinMap(levels[n], levels[n - 1],
                   tuple(_tuple_name(t[:i] + t[i + 1:]) for t in tuples[n]))
            for i in range(n + 1)))
    degeneracies = []
    for n in range(truncation):
        degeneracies.append(tuple(
            FinMap(levels[n], levels[n + 1],
                   tuple(_tuple_name(t[:j + 1] + t[j:]) for t in tuples[n]))
            for j in range(n + 1)))
    return TruncatedSimplicialObject(tuple(levels), tuple(faces), tuple(degeneracies))


def vertices(x: TruncatedSimplicialObject, n: int) -> list[FinMap]:
    """The maps ``X_n -> X_0`` over ``rho(k, k, n)``."""
    return [x.apply(rho(k, k, n)) for k in range(n + 1)]


def unit_map(x: TruncatedSimplicialObject) -> list[FinMap]:
    """Components ``X_n -> X_0^(n+1)`` recording the vertices of each cell."""
    target = codiscrete(x.levels[0], x.truncation)
    out = []
    for n in range(x.truncation + 1):
        vs = vertices(x, n)
        out.append(FinMap(x.levels[n], target.levels[n], tuple(
            _tuple_name(tuple(v.images[k] for v in vs)) for k in range(len(x.levels[n])))))
    return out


def codiscrete_map(f: FinMap, truncation: int = DEFAULT_TRUNCATION) -> list[FinMap]:
    """``f`` applied coordinatewise: ``codiscrete(Y) -> codiscrete(X)``."""
    src, dst = codiscrete(f.dom, truncation), codiscrete(f.cod, truncation)
    return [FinMap(src.levels[n], dst.levels[n],
                   tuple(_tuple_name(tuple(f(c) for c in t)) for t in _tuples(f.dom, n)))
            for n in range(truncation + 1)]


def extensions_to_codiscrete(x: TruncatedSimplicialObject, g: FinMap,
                             limit: int = 2) -> list[list[FinMap]]:
    """Simplicial maps ``X -> codiscrete(S)`` restricting to ``g`` on objects.

    Brute force: at each level every candidate tuple is tested against the
    face (and degeneracy) constraints; choices branch.  Stops after ``limit``
    solutions.
    """
    s = g.cod
    target = codiscrete(s, x.truncation)
    if g.dom != x.levels[0]:
        raise InvalidStructure("object map must start at X_0")
    solutions: list[list[FinMap]] = []

    def extend(partial: list[FinMap]):
        if len(solutions) >= limit:
            return
        n = len(partial)
        if n > x.truncation:
            solutions.append(list(partial))
            return
        below = partial[-1]
        per_cell = []
        for k, cell in enumerate(x.levels[n]):
            want_faces = [below(x.face(n, i).images[k]) for i in range(n + 1)]
            options = []
            for t in target.levels[n]:
                if all(target.face(n, i)(t) == want_faces[i] for i in range(n + 1)):
                    options.append(t)
            if x.unital:
                for j in range(n):
                    s_j = x.degeneracy(n - 1, j)
                    for pos, img in enumerate(s_j.images):
                        if img == cell:
                            forced = target.degeneracy(n - 1, j)(below.images[pos])
                            options = [t for t in options if t == forced]
            per_cell.append(options)
        for choice in _cartesian(*per_cell):
            extend(partial + [FinMap(x.levels[n], target.levels[n], choice)])
            if len(solutions) >= limit:
                return

    extend([g])
    return solutions


def _restriction(f: FinMap, x: TruncatedSimplicialObject):
    if f.cod != x.levels[0]:
        raise InvalidStructure("restriction map must land in X_0")
    top = x.truncation
    fy = codiscrete_map(f, top)
    units = unit_map(x)
    limits = [pullback(fy[n], units[n]) for n in range(top + 1)]
    levels = tuple(p for p, _, _ in limits)
    cy = codiscrete(f.dom, top)
    faces = []
    for n in range(1, top + 1):
        p, left, right = limits[n - 1]
        _, l_up, r_up = limits[n]
        faces.append(tuple(
            pairing(p, left, right, compose(cy.face(n, i), l_up), compose(x.face(n, i), r_up))
            for i in range(n + 1)))
    degeneracies = None
    if x.unital:
        degeneracies = []
        for n in range(top):
            p, left, right = limits[n + 1]
            _, l_dn, r_dn = limits[n]
            degeneracies.append(tuple(
                pairing(p, left, right, compose(cy.degeneracy(n, j), l_dn),
                        compose(x.degeneracy(n, j), r_dn))
                for j in range(n + 1)))
        degeneracies = tuple(degeneracies)
    restricted = TruncatedSimplicialObject(levels, tuple(faces), degeneracies)
    return restricted, [lim[2] for lim in limits], [lim[1] for lim in limits]


def restrict_along(f: FinMap, x: AnyObject) -> TruncatedSimplicialObject:
    """Level ``n`` is ``Y^(n+1) ×_{X_0^(n+1)} X_n``, the cartesian lift over ``f``."""
    if not isinstance(x, TruncatedSimplicialObject):
        x = algebraic_to_simplicial(x)
    return _restriction(f, x)[0]


def restriction_projection(f: FinMap, x: TruncatedSimplicialObject) -> list[FinMap]:
    """Components of the cartesian morphism ``f*X -> X``."""
    return _restriction(f, x)[1]


def restriction_level1_square(f: FinMap, x: TruncatedSimplicialObject
                              ) -> tuple[FinSet, FinMap, FinMap]:
    """``(Y × Y) ×_{X_0 × X_0} X_1`` with its projections."""
    yy, y1, y2 = product(f.dom, f.dom)
    xx, x1, x2 = product(x.levels[0], x.levels[0])
    ff = pairing(xx, x1, x2, compose(f, y1), compose(f, y2))
    ends = pairing(xx, x1, x2, x.face(1, 1), x.face(1, 0))
    return pullback(ff, ends)


# -- equivalences and completeness ----------------------------------------------

def is_equivalence_morphism(a: Presentation, f: str, mode: str = "representable") -> bool:
    s = semicat_of(a)
    if f not in s.morphisms:
        raise KeyError(f"unknown morphism {f!r}")
    x, y = s.src(f), s.tgt(f)
    if mode == "quasi-unit":
        from .quasiunit import find_quasi_units

        units = find_quasi_units(s)
        if not units:
            raise InvalidStructure("quasi-unit mode needs a quasi-unital input")
        u = units[0].carrier
        return any(s.comp[(g, f)] == u(x) and s.comp[(f, g)] == u(y)
                   for g in hom_set(s, y, x))
    if mode != "representable":
        raise ValueError(f"unknown mode {mode!r}")
    for z in s.objects:
        pre = [s.comp[(h, f)] for h in hom_set(s, y, z)]
        if sorted(pre) != sorted(hom_set(s, x, z)):
            return False
        post = [s.comp[(f, h)] for h in hom_set(s, z, x)]
        if sorted(post) != sorted(hom_set(s, z, y)):
            return False
    return True


def equivalences_subset(a: Presentation, mode: str = "representable") -> FinSet:
    s = semicat_of(a)
    return FinSet(tuple(f for f in s.morphisms if is_equivalence_morphism(s, f, mode)))


def is_complete(a: Presentation, criterion: str = "faces") -> bool:
    """Both face maps ``X_1^eq -> X_0`` are bijections (or, ``criterion="unit"``,
    the quasi-unit is a bijection onto ``X_1^eq``)."""
    s = semicat_of(a)
    eq = equivalences_subset(s)
    if criterion == "unit":
        from .quasiunit import find_quasi_units

        units = find_quasi_units(s)
        if not units:
            raise InvalidStructure("unit criterion needs a quasi-unital input")
        u = units[0].carrier
        return sorted(u.images) == sorted(eq.elements) and u.is_injective()
    if criterion != "faces":
        raise ValueError(f"unknown criterion {criterion!r}")
    for leg in (s.src, s.tgt):
        images = [leg(f) for f in eq]
        if sorted(images) != sorted(s.objects.elements):
            return False
    return True


def isomorphisms(c: CatPresentation) -> list[str]:
    """Morphisms with a two-sided inverse, by exhaustive search."""
    out = []
    for f in c.morphisms:
        x, y = c.src(f), c.tgt(f)
        if any(c.compose(g, f) == c.identity(x) and c.compose(f, g) == c.identity(y)
               for g in c.morphisms if c.src(g) == y and c.tgt(g) == x):
            out.append(f)
    return out


def is_gaunt(c: CatPresentation) -> bool:
    identities = set(c.identity.images)
    return all(f in identities for f in isomorphisms(c))


def levels_summary(x: TruncatedSimplicialObject) -> list[int]:
    return [len(level) for level in x.levels]


def empty_presentation(unital: bool = True) -> Presentation:
    empty = FinSet(())
    semi = SemicatPresentation(empty, empty, FinMap(empty, empty, ()),
                               FinMap(empty, empty, ()), {})
    return CatPresentation(semi, FinMap(empty, empty, ())) if unital else semi


def presentation_from_tables(objects: Iterable[str], morphisms: Mapping[str, tuple[str, str]],
                             comp: Mapping[tuple[str, str], str],
                             identities: Optional[Mapping[str, str]] = None) -> Presentation:
    """Convenience builder: ``morphisms`` maps a label to ``(src, tgt)``."""
    obs = FinSet(tuple(objects))
    mors = FinSet(tuple(morphisms))
    src = FinMap(mors, obs, tuple(morphisms[m][0] for m in mors))
    tgt = FinMap(mors, obs, tuple(morphisms[m][1] for m in mors))
    semi = SemicatPresentation(obs, mors, src, tgt, comp)
    if identities is None:
        return semi
    return CatPresentation(semi, FinMap.from_dict(obs, mors, identities))

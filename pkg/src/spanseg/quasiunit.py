"""Quasi-units of semicategories, quasi-unital functors and unit promotion.

A quasi-unit is a map ``u: objects -> morphisms`` with ``u(x): x -> x``
acting as a two-sided identity.  At the level of finite sets the laws hold
on the nose, so a quasi-unit is unique when it exists and promoting it to
the identity field gives a category.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Iterable, Optional

from .catobj import (
    CatFunctor,
    CatPresentation,
    Presentation,
    SemicatPresentation,
    algebraic_to_simplicial,
    hom_set,
    restrict_along,
    restriction_projection,
    semicat_of,
    simplicial_to_algebraic,
)
from .finset import FinMap, FinSet, InvalidStructure, all_maps, labels, pair_label, tuple_label


@dataclass(frozen=True)
class QuasiUnit:
    carrier: FinMap

    def __call__(self, x: str) -> str:
        return self.carrier(x)


def quasi_unit_problems(a: Presentation, u: FinMap) -> list[str]:
    """Which of the three defining clauses ``u`` breaks (empty when it is a quasi-unit)."""
    s = semicat_of(a)
    if u.dom != s.objects or u.cod != s.morphisms:
        return ["carrier must run from objects to morphisms"]
    out = []
    for x in s.objects:
        if s.src(u(x)) != x or s.tgt(u(x)) != x:
            out.append(f"u({x}) = {u(x)} is not an endomorphism of {x}")
    if out:
        return out
    for f in s.morphisms:
        if s.comp[(u(s.tgt(f)), f)] != f:
            out.append(f"left law fails at {f}")
        if s.comp[(f, u(s.src(f)))] != f:
            out.append(f"right law fails at {f}")
    return out


def local_units(s: SemicatPresentation, x: str) -> list[str]:
    """Endomorphisms of ``x`` acting as identities on everything that meets ``x``."""
    into = [f for f in s.morphisms if s.tgt(f) == x]
    out_of = [f for f in s.morphisms if s.src(f) == x]
    return [e for e in hom_set(s, x, x)
            if all(s.comp[(e, f)] == f for f in into)
            and all(s.comp[(f, e)] == f for f in out_of)]


def find_quasi_units(a: Presentation) -> list[QuasiUnit]:
    """All quasi-units, found object by object (the laws decouple per object)."""
    s = semicat_of(a)
    per_object = [local_units(s, x) for x in s.objects]
    return [QuasiUnit(FinMap(s.objects, s.morphisms, images))
            for images in _cartesian(*per_object)]


def find_quasi_units_bruteforce(a: Presentation) -> list[QuasiUnit]:
    """Reference search over every map ``objects -> morphisms``."""
    s = semicat_of(a)
    return [QuasiUnit(u) for u in all_maps(s.objects, s.morphisms)
            if not quasi_unit_problems(s, u)]


def is_quasi_unital(a: Presentation) -> bool:
    return bool(find_quasi_units(a))


def quasi_unit(a: Presentation) -> QuasiUnit:
    units = find_quasi_units(a)
    if not units:
        raise InvalidStructure("not quasi-unital")
    return units[0]


def is_weakly_quasi_unital(a: Presentation) -> bool:
    """Every object has an endomorphism ``u`` with ``u_*`` and ``u^*`` identities on hom-sets."""
    s = semicat_of(a)
    for x in s.objects:
        found = False
        for u in hom_set(s, x, x):
            if all(all(s.comp[(u, h)] == h for h in hom_set(s, z, x))
                   and all(s.comp[(h, u)] == h for h in hom_set(s, x, z))
                   for z in s.objects):
                found = True
                break
        if not found:
            return False
    return True


def promote_to_unital(a: Presentation) -> CatPresentation:
    s = semicat_of(a)
    return CatPresentation(s, quasi_unit(s).carrier)


def forget_units(c: Presentation) -> SemicatPresentation:
    return semicat_of(c)


# -- functors ---------------------------------------------------------------------

def is_quasi_unital_functor(phi: CatFunctor) -> bool:
    """``on_morphisms ∘ u == v ∘ on_objects`` for the quasi-units ``u``, ``v``."""
    u = quasi_unit(phi.source).carrier
    v = quasi_unit(phi.target).carrier
    return all(phi.on_morphisms(u(x)) == v(phi.on_objects(x)) for x in u.dom)


def is_quasi_unital_functor_existential(phi: CatFunctor) -> bool:
    """Some pair of quasi-units is carried one onto the other."""
    us, vs = find_quasi_units(phi.source), find_quasi_units(phi.target)
    if not us or not vs:
        raise InvalidStructure("endpoints must be quasi-unital")
    return any(all(phi.on_morphisms(u(x)) == v(phi.on_objects(x)) for x in u.carrier.dom)
               for u in us for v in vs)


def restricted_semicat(b: Presentation, f: FinMap, truncation: int = 2) -> SemicatPresentation:
    """``f^* B`` read back as a semicategory."""
    return simplicial_to_algebraic(
        restrict_along(f, algebraic_to_simplicial(semicat_of(b), truncation)))


def factor_through_restriction(phi: CatFunctor, restricted: Optional[SemicatPresentation] = None):
    """Split ``phi`` as ``A -> phi_0^* B -> B``.

    Returns the restricted semicategory and the first factor as an
    ``(objects map, morphisms map)`` pair; the first factor is the identity
    on objects.
    """
    a, b = semicat_of(phi.source), semicat_of(phi.target)
    if restricted is None:
        restricted = restricted_semicat(b, phi.on_objects)
    obj_map = FinMap(a.objects, restricted.objects, tuple(
        pair_label(x, phi.on_objects(x)) for x in a.objects))
    mor_map = FinMap(a.morphisms, restricted.morphisms, tuple(
        pair_label(tuple_label((a.src(m), a.tgt(m))), phi.on_morphisms(m))
        for m in a.morphisms))
    return restricted, obj_map, mor_map


def is_quasi_unital_functor_by_restriction(phi: CatFunctor,
                                          restricted: Optional[SemicatPresentation] = None
                                          ) -> bool:
    """The first factor through the restriction carries quasi-unit to quasi-unit.

    The quasi-unit of the restriction is searched for directly, not built
    from the one of the target.
    """
    u = quasi_unit(phi.source).carrier
    restricted, obj_map, mor_map = factor_through_restriction(phi, restricted)
    units = find_quasi_units(restricted)
    if not units:
        return False
    v = units[0].carrier
    return all(mor_map(u(x)) == v(obj_map(x)) for x in u.dom)


def restrict_quasi_unit(f: FinMap, a: Presentation, truncation: int = 2
                        ) -> tuple[SemicatPresentation, QuasiUnit]:
    """The restriction of ``a`` along ``f`` and its induced quasi-unit ``y -> ((y,y), u(f y))``."""
    s = semicat_of(a)
    u = quasi_unit(s).carrier
    restricted = simplicial_to_algebraic(restrict_along(f, algebraic_to_simplicial(s, truncation)))
    carrier = FinMap(restricted.objects, restricted.morphisms, tuple(
        pair_label(tuple_label((y, y)), u(f(y))) for y in f.dom))
    induced = QuasiUnit(carrier)
    problems = quasi_unit_problems(restricted, carrier)
    if problems:
        raise InvalidStructure(f"induced unit is not a quasi-unit: {problems[0]}")
    return restricted, induced


# -- whole-universe checks ------------------------------------------------------

def unital_functors_vs_quasi_unital(c: CatPresentation, d: CatPresentation) -> dict:
    """Compare unital functors ``c -> d`` with quasi-unital semifunctors between the forgotten pair."""
    from .enumeration import enumerate_functors

    unital = {(f.on_objects.images, f.on_morphisms.images)
              for f in enumerate_functors(c, d, unital=True)}
    quasi = {(f.on_objects.images, f.on_morphisms.images)
             for f in enumerate_functors(forget_units(c), forget_units(d))
             if is_quasi_unital_functor(f)}
    return {"unital": len(unital), "quasi_unital": len(quasi), "bijective": unital == quasi,
            "witness": sorted(unital)[:1]}


@dataclass
class Report:
    """Outcome of a sweep: counts of checked cases and any counterexamples."""

    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, item) -> None:
        self.counterexamples.append(item)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexamples": self.counterexamples, "notes": self.notes}


def _claimed_unit(a: Presentation) -> Optional[FinMap]:
    if isinstance(a, CatPresentation):
        return a.identity
    units = find_quasi_units(a)
    return units[0].carrier if units else None


def cartesian_subcategory_check(universe: Iterable[Presentation], max_fibre: int = 2,
                                functor_pairs: bool = True) -> Report:
    """Quasi-unital objects are stable under restriction, and quasi-unitality of a
    morphism is detected by its factor through the restriction.

    Objects carrying an ``identity`` field are checked against that declared
    unit, so a corrupted table is reported rather than skipped.  Restrictions
    run along every map into the object set from sets of size ``<= max_fibre``.
    """
    from .enumeration import enumerate_functors

    report = Report("cartesian-subcategory")
    quasi_unital = []
    for k, a in enumerate(universe):
        u = _claimed_unit(a)
        if u is None:
            continue
        s = semicat_of(a)
        problems = quasi_unit_problems(s, u)
        if problems:
            report.fail({"item": k, "clause": "declared unit", "detail": problems[0]})
            continue
        quasi_unital.append((k, s))
        x = algebraic_to_simplicial(s, 2)
        for size in range(max_fibre + 1):
            for f in all_maps(labels(size, "y"), s.objects):
                report.checked += 1
                restricted_x = restrict_along(f, x)
                restricted = simplicial_to_algebraic(restricted_x)
                found = find_quasi_units(restricted)
                if not found:
                    report.fail({"item": k, "clause": "restriction", "map": list(f.images)})
                    continue
                v = found[0].carrier
                proj = restriction_projection(f, x)
                if any(proj[1](v(pair_label(y, f(y)))) != u(f(y)) for y in f.dom):
                    report.fail({"item": k, "clause": "projection", "map": list(f.images)})
    if functor_pairs:
        cache: dict = {}
        for i, a in quasi_unital:
            for j, b in quasi_unital:
                for phi in enumerate_functors(a, b):
                    report.checked += 1
                    key = (j, phi.on_objects.images, a.objects)
                    if key not in cache:
                        cache[key] = restricted_semicat(b, phi.on_objects)
                    by_restriction = is_quasi_unital_functor_by_restriction(phi, cache[key])
                    if is_quasi_unital_functor(phi) != by_restriction:
                        report.fail({"item": [i, j], "clause": "factorization",
                                     "objects": list(phi.on_objects.images),
                                     "morphisms": list(phi.on_morphisms.images)})
    report.notes["quasi_unital_objects"] = len(quasi_unital)
    return report


def weak_vs_strong_report(universe: Iterable[Presentation]) -> Report:
    """Records that pointwise and global quasi-unitality agree on every instance."""
    report = Report("weak-quasi-unitality")
    for k, a in enumerate(universe):
        report.checked += 1
        if is_weakly_quasi_unital(a) != is_quasi_unital(a):
            report.fail({"item": k})
    return report


def empty_quasi_unit() -> QuasiUnit:
    empty = FinSet(())
    return QuasiUnit(FinMap(empty, empty, ()))

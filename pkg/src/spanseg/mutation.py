"""Single-entry mutants of simplicial objects and composition tables."""

from __future__ import annotations

from typing import Iterator

from .catobj import (
    SemicatPresentation,
    TruncatedSimplicialObject,
    check_segal,
    semicat_of,
)
from .finset import FinMap


def face_mutants(x: TruncatedSimplicialObject) -> Iterator[tuple[str, TruncatedSimplicialObject]]:
    """Every way of changing one entry of one face map."""
    for n, level in enumerate(x.faces, start=1):
        for i, d in enumerate(level):
            for k, cell in enumerate(d.dom):
                for other in d.cod:
                    if other == d.images[k]:
                        continue
                    images = d.images[:k] + (other,) + d.images[k + 1:]
                    faces = [list(row) for row in x.faces]
                    faces[n - 1][i] = FinMap(d.dom, d.cod, images)
                    yield (f"d{i} on level {n} at {cell} -> {other}",
                           TruncatedSimplicialObject.unchecked(
                               x.levels, tuple(tuple(row) for row in faces), x.degeneracies))


def composition_mutants(a) -> Iterator[tuple[str, SemicatPresentation]]:
    """Every change of one composite to a morphism with different ends.

    Changes to a parallel morphism are left out: they can land on another
    valid table, which no checker can tell apart from a genuine input.
    """
    s = semicat_of(a)
    for (g, f), h in s.comp.items():
        for other in s.morphisms:
            if (s.src(other), s.tgt(other)) == (s.src(h), s.tgt(h)):
                continue
            comp = dict(s.comp)
            comp[(g, f)] = other
            yield (f"{g}∘{f} -> {other}",
                   SemicatPresentation.unchecked(s.objects, s.morphisms, s.src, s.tgt, comp))


def simplicial_mutant_detected(x: TruncatedSimplicialObject) -> bool:
    """Caught by shape or identity validation, or by the Segal condition."""
    if x.shape_problems() or x.identity_violations():
        return True
    return not check_segal(x)


def table_mutant_detected(s: SemicatPresentation) -> bool:
    return bool(s.problems())

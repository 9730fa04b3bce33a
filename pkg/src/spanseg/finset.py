"""Labeled finite sets and functions between them.

Limits are canonical: a product or pullback is a literal set of pairs,
labeled ``"(x,y)"`` and ordered lexicographically by the positions of the
factors.  Recomputing a limit always yields the same element sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product as _cartesian
from typing import Iterable, Iterator, Mapping, Sequence


class InvalidStructure(ValueError):
    """Raised when input data violates a structural invariant."""


def pair_label(x: str, y: str) -> str:
    return f"({x},{y})"


def tuple_label(items: Sequence[str]) -> str:
    return "(" + ",".join(items) + ")"


@dataclass(frozen=True)
class FinSet:
    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        index = {}
        for pos, label in enumerate(elements):
            if not isinstance(label, str):
                raise InvalidStructure(f"label {label!r} is not text")
            if label in index:
                raise InvalidStructure(f"duplicate label {label!r}")
            index[label] = pos
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *labels: str) -> "FinSet":
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self}") from None

    def __str__(self):
        return "{" + ", ".join(self.elements) + "}"


@dataclass(frozen=True)
class FinMap:
    """A total function ``dom -> cod``, stored as images aligned with ``dom``."""

    dom: FinSet
    cod: FinSet
    images: tuple[str, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.dom):
            raise InvalidStructure(
                f"map assigns {len(images)} values to {len(self.dom)} elements")
        for x, y in zip(self.dom, images):
            if y not in self.cod:
                raise InvalidStructure(f"{x!r} is sent to {y!r}, not in codomain")

    @classmethod
    def from_dict(cls, dom: FinSet, cod: FinSet, assignment: Mapping[str, str]) -> "FinMap":
        missing = [x for x in dom if x not in assignment]
        if missing:
            raise InvalidStructure(f"unassigned elements {missing}")
        extra = [x for x in assignment if x not in dom]
        if extra:
            raise InvalidStructure(f"assignment mentions non-elements {extra}")
        return cls(dom, cod, tuple(assignment[x] for x in dom))

    @classmethod
    def from_function(cls, dom: FinSet, cod: FinSet, fn) -> "FinMap":
        return cls(dom, cod, tuple(fn(x) for x in dom))

    @classmethod
    def identity(cls, a: FinSet) -> "FinMap":
        return cls(a, a, a.elements)

    def __call__(self, x: str) -> str:
        return self.images[self.dom.index(x)]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.dom.elements, self.images))

    def then(self, other: "FinMap") -> "FinMap":
        """Diagrammatic composite: first ``self``, then ``other``."""
        return compose(other, self)

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return set(self.images) == set(self.cod.elements)

    def fibre(self, y: str) -> tuple[str, ...]:
        return tuple(x for x, fx in zip(self.dom, self.images) if fx == y)


def compose(g: FinMap, f: FinMap) -> FinMap:
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise InvalidStructure("cannot compose: codomain of f is not the domain of g")
    return FinMap(f.dom, g.cod, tuple(g(y) for y in f.images))


def product(a: FinSet, b: FinSet) -> tuple[FinSet, FinMap, FinMap]:
    pairs = [(x, y) for x in a for y in b]
    p = FinSet(tuple(pair_label(x, y) for x, y in pairs))
    return (p,
            FinMap(p, a, tuple(x for x, _ in pairs)),
            FinMap(p, b, tuple(y for _, y in pairs)))


def pullback(f: FinMap, g: FinMap) -> tuple[FinSet, FinMap, FinMap]:
    """Canonical pullback of ``A -f-> J <-g- B`` with its two projections."""
    if f.cod != g.cod:
        raise InvalidStructure("pullback needs a common codomain")
    pairs = [(x, y) for x, fx in zip(f.dom, f.images)
             for y, gy in zip(g.dom, g.images) if fx == gy]
    p = FinSet(tuple(pair_label(x, y) for x, y in pairs))
    return (p,
            FinMap(p, f.dom, tuple(x for x, _ in pairs)),
            FinMap(p, g.dom, tuple(y for _, y in pairs)))


def pairing(p: FinSet, left: FinMap, right: FinMap, c: FinMap, d: FinMap) -> FinMap:
    """The map ``C -> P`` induced by a cone ``(c, d)`` over a canonical limit ``P``.

    ``P`` is a product or pullback with projections ``left``, ``right``.
    Raises ``InvalidStructure`` if the cone does not factor through ``P``.
    """
    if c.dom != d.dom:
        raise InvalidStructure("cone legs must share a domain")
    lookup = {(lx, rx): z for z, lx, rx in zip(p, left.images, right.images)}
    images = []
    for x, cx, dx in zip(c.dom, c.images, d.images):
        if (cx, dx) not in lookup:
            raise InvalidStructure(f"cone does not factor at {x!r}")
        images.append(lookup[(cx, dx)])
    return FinMap(c.dom, p, tuple(images))


def iterated_pullback(first: FinSet, rights: Sequence[FinMap],
                      lefts: Sequence[FinMap]) -> tuple[FinSet, list[FinMap]]:
    """Canonical limit of a zig-zag ``A_0 -> J_0 <- A_1 -> J_1 <- ... <- A_k``.

    ``rights[t]: A_t -> J_t`` and ``lefts[t]: A_{t+1} -> J_t``.  The limit is
    built left-nested, so labels look like ``((a0,a1),a2)``.  Returns the limit
    and its projections onto each ``A_t``.
    """
    if len(rights) != len(lefts):
        raise InvalidStructure("zig-zag needs as many right legs as left legs")
    apex = first
    projections = [FinMap.identity(first)]
    for right, left in zip(rights, lefts):
        apex, p1, p2 = pullback(compose(right, projections[-1]), left)
        projections = [compose(pr, p1) for pr in projections] + [p2]
    return apex, projections


def is_bijection(f: FinMap) -> bool:
    return len(f.dom) == len(f.cod) and f.is_injective()


def invert(f: FinMap) -> FinMap:
    if not is_bijection(f):
        raise InvalidStructure("only bijections can be inverted")
    back = {y: x for x, y in zip(f.dom, f.images)}
    return FinMap(f.cod, f.dom, tuple(back[y] for y in f.cod))


def all_maps(a: FinSet, b: FinSet) -> Iterator[FinMap]:
    """Every function ``a -> b``, lexicographic in the images."""
    for images in _cartesian(b.elements, repeat=len(a)):
        yield FinMap(a, b, images)


def all_bijections(a: FinSet, b: FinSet) -> Iterator[FinMap]:
    if len(a) != len(b):
        return
    for images in permutations(b.elements):
        yield FinMap(a, b, images)


def subset(a: FinSet, keep: Iterable[str]) -> tuple[FinSet, FinMap]:
    """Sub-object of ``a`` in ``a``'s order, with its inclusion."""
    keep = set(keep)
    s = FinSet(tuple(x for x in a if x in keep))
    return s, FinMap(s, a, s.elements)


def labels(n: int, prefix: str) -> FinSet:
    return FinSet(tuple(f"{prefix}{k}" for k in range(n)))

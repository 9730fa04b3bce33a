"""Combinatorics of the simplex category and of the interval category over it.

An ordinal ``[n] = {0, ..., n}`` is written by its top index ``n``.  A
monotone map ``[m] -> [n]`` is a :class:`SimplexMap` holding its value
sequence.

The interval category has objects ``([n], (i, j))`` with ``0 <= i <= j <= n``.
A morphism ``([n], (i, j)) -> ([m], (i', j'))`` carries a simplex map
``phi: [m] -> [n]`` (note the reversed direction) with
``i <= phi(i') <= phi(j') <= j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True)
class SimplexMap:
    domain_size: int
    codomain_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if self.domain_size < 0 or self.codomain_size < 0:
            raise ValueError("ordinal indices must be non-negative")
        if len(values) != self.domain_size + 1:
            raise ValueError(
                f"[{self.domain_size}] needs {self.domain_size + 1} values, got {len(values)}")
        if any(not 0 <= v <= self.codomain_size for v in values):
            raise ValueError(f"values {values} leave [{self.codomain_size}]")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"values {values} are not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.codomain_size + 1))

    def is_identity(self) -> bool:
        return self.domain_size == self.codomain_size and self.values == tuple(
            range(self.domain_size + 1))

    def __str__(self):
        return f"[{self.domain_size}]->[{self.codomain_size}]{self.values}"


def identity(n: int) -> SimplexMap:
    return SimplexMap(n, n, tuple(range(n + 1)))


def compose_values(g: tuple[int, ...], f: tuple[int, ...]) -> tuple[int, ...]:
    """``g ∘ f`` on bare value sequences."""
    return tuple(g[v] for v in f)


def compose_simplex(g: SimplexMap, f: SimplexMap) -> SimplexMap:
    """``g ∘ f``."""
    if f.codomain_size != g.domain_size:
        raise ValueError(f"cannot compose {g} after {f}")
    return SimplexMap(f.domain_size, g.codomain_size, compose_values(g.values, f.values))


def is_inert(phi: SimplexMap) -> bool:
    start = phi.values[0]
    return all(v == start + i for i, v in enumerate(phi.values))


def rho(i: int, j: int, n: int) -> SimplexMap:
    """The inert map ``[j-i] -> [n]`` hitting ``{i, ..., j}``."""
    if not 0 <= i <= j <= n:
        raise ValueError(f"need 0 <= i <= j <= n, got i={i}, j={j}, n={n}")
    return SimplexMap(j - i, n, tuple(range(i, j + 1)))


def coface(n: int, k: int) -> SimplexMap:
    """``[n-1] -> [n]`` skipping ``k``."""
    return SimplexMap(n - 1, n, tuple(t if t < k else t + 1 for t in range(n)))


def codegeneracy(n: int, k: int) -> SimplexMap:
    """``[n+1] -> [n]`` hitting ``k`` twice."""
    return SimplexMap(n + 1, n, tuple(t if t <= k else t - 1 for t in range(n + 2)))


def monotone_maps(m: int, n: int) -> Iterator[SimplexMap]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order."""
    for values in combinations_with_replacement(range(n + 1), m + 1):
        yield SimplexMap(m, n, values)


def injective_maps(m: int, n: int) -> Iterator[SimplexMap]:
    for phi in monotone_maps(m, n):
        if phi.is_injective():
            yield phi


# -- intervals ---------------------------------------------------------------

@dataclass(frozen=True)
class SigmaElement:
    ambient: int
    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi <= self.ambient:
            raise ValueError(f"invalid interval ({self.lo},{self.hi}) in [{self.ambient}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo


def sigma_elements(n: int) -> list[SigmaElement]:
    return [SigmaElement(n, i, j) for i in range(n + 1) for j in range(i, n + 1)]


def sigma_leq(a: SigmaElement, b: SigmaElement) -> bool:
    """``a <= b`` iff ``b`` is a subinterval of ``a``."""
    if a.ambient != b.ambient:
        raise ValueError("intervals live in different ordinals")
    return a.lo <= b.lo <= b.hi <= a.hi


def sigma_pushforward(phi: SimplexMap, a: SigmaElement) -> SigmaElement:
    if a.ambient != phi.domain_size:
        raise ValueError(f"interval in [{a.ambient}] cannot be pushed along {phi}")
    return SigmaElement(phi.codomain_size, phi(a.lo), phi(a.hi))


# -- the interval category -----------------------------------------------------

ShatObject = SigmaElement  # ([n], (i, j)) is the interval (i, j) in [n]


@dataclass(frozen=True)
class ShatMorphism:
    source: ShatObject
    target: ShatObject
    underlying: SimplexMap

    def __post_init__(self):
        phi, s, t = self.underlying, self.source, self.target
        if phi.domain_size != t.ambient or phi.codomain_size != s.ambient:
            raise ValueError(f"{phi} does not run from [{t.ambient}] to [{s.ambient}]")
        if not s.lo <= phi(t.lo) <= phi(t.hi) <= s.hi:
            raise ValueError(f"{phi} does not send ({t.lo},{t.hi}) into ({s.lo},{s.hi})")


def shat_identity(x: ShatObject) -> ShatMorphism:
    return ShatMorphism(x, x, identity(x.ambient))


def shat_compose(second: ShatMorphism, first: ShatMorphism) -> ShatMorphism:
    """``second ∘ first``; underlying maps compose in the opposite order."""
    if first.target != second.source:
        raise ValueError("morphisms are not composable")
    return ShatMorphism(first.source, second.target,
                        compose_simplex(first.underlying, second.underlying))


def shat_is_cartesian(m: ShatMorphism) -> bool:
    phi = m.underlying
    return (m.source.lo, m.source.hi) == (phi(m.target.lo), phi(m.target.hi))


def shat_objects(max_ambient: int) -> list[ShatObject]:
    return [x for n in range(max_ambient + 1) for x in sigma_elements(n)]


def shat_morphisms(source: ShatObject, target: ShatObject) -> Iterator[ShatMorphism]:
    for phi in monotone_maps(target.ambient, source.ambient):
        if source.lo <= phi(target.lo) <= phi(target.hi) <= source.hi:
            yield ShatMorphism(source, target, phi)


def pi_object(x: ShatObject) -> int:
    return x.hi - x.lo


def pi_morphism(m: ShatMorphism) -> SimplexMap:
    """The restriction ``[j'-i'] -> [j-i]``, ``t -> phi(t+i') - i``.

    As a map in the opposite simplex category this runs ``[j-i] -> [j'-i']``,
    so ``pi_morphism(b ∘ a) == compose_simplex(pi_morphism(a), pi_morphism(b))``.
    """
    s, t = m.source, m.target
    return SimplexMap(pi_object(t), pi_object(s),
                      pi_values(m.underlying.values, s.lo, t.lo, t.hi))


def pi_values(phi: tuple[int, ...], source_lo: int, target_lo: int, target_hi: int
              ) -> tuple[int, ...]:
    """Value sequence of :func:`pi_morphism` for a morphism over ``phi``."""
    return tuple(phi[k] - source_lo for k in range(target_lo, target_hi + 1))


def psi(n: int) -> ShatObject:
    return SigmaElement(n, 0, n)


def psi_morphism(phi: SimplexMap) -> ShatMorphism:
    return ShatMorphism(psi(phi.codomain_size), psi(phi.domain_size), phi)


def eta_component(x: ShatObject) -> ShatMorphism:
    return ShatMorphism(x, psi(pi_object(x)), rho(x.lo, x.hi, x.ambient))


def epsilon_component(x: ShatObject) -> ShatMorphism:
    return ShatMorphism(psi(x.ambient), x, identity(x.ambient))


def in_w(m: ShatMorphism) -> bool:
    return pi_morphism(m).is_identity()


def in_i(m: ShatMorphism) -> bool:
    return shat_is_cartesian(m) and is_inert(m.underlying)


def w_triangle_factorization(w: ShatMorphism) -> tuple[ShatMorphism, ShatMorphism]:
    """Split a morphism inverted by ``pi_morphism`` through the interval ordinal.

    Returns ``(down_source, down_target)``, both cartesian over inert maps,
    with ``shat_compose(down_target, w) == down_source``.
    """
    if not in_w(w):
        raise ValueError("morphism is not sent to an identity")
    return eta_component(w.source), eta_component(w.target)

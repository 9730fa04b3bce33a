"""Multisimplicial objects in finite sets: n-uple and n-fold Segal conditions.

A :class:`MultiSimplicialObject` of arity ``n`` has a finite set for every
multi-index in ``{0..N}^n``.  Structure maps are stored per axis: a face
``d_i`` in axis ``a`` is keyed ``(a, index, i)`` with ``index`` its source,
and likewise for degeneracies.  Fixing all coordinates but one gives a
:class:`~spanseg.catobj.TruncatedSimplicialObject`, the slice along that axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable, Hashable, Mapping, Optional, Sequence

from .catobj import (
    CatPresentation,
    TruncatedSimplicialObject,
    check_segal,
    hom_set,
    is_complete,
    semicat_of,
    simplicial_to_algebraic,
)
from .finset import FinMap, FinSet, InvalidStructure, compose, is_bijection, tuple_label
from .quasiunit import QuasiUnit, find_quasi_units
from .simplex import SimplexMap, codegeneracy, coface, rho

Index = tuple[int, ...]


def _shift(index: Index, axis: int, delta: int) -> Index:
    return index[:axis] + (index[axis] + delta,) + index[axis + 1:]


@dataclass(frozen=True)
class MultiSimplicialObject:
    arity: int
    truncation: int
    levels: Mapping[Index, FinSet]
    faces: Mapping[tuple[int, Index, int], FinMap]
    degeneracies: Mapping[tuple[int, Index, int], FinMap]
    unital: tuple[bool, ...]

    def __post_init__(self):
        for name in ("levels", "faces", "degeneracies"):
            object.__setattr__(self, name, dict(getattr(self, name)))
        object.__setattr__(self, "unital", tuple(self.unital))
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    @classmethod
    def unchecked(cls, arity, truncation, levels, faces, degeneracies, unital):
        obj = object.__new__(cls)
        for name, value in (("arity", arity), ("truncation", truncation),
                            ("levels", dict(levels)), ("faces", dict(faces)),
                            ("degeneracies", dict(degeneracies)), ("unital", tuple(unital))):
            object.__setattr__(obj, name, value)
        return obj

    def indices(self) -> list[Index]:
        return list(_cartesian(range(self.truncation + 1), repeat=self.arity))

    def operators(self, index: Index):
        """``(kind, axis, position)`` of every generator leaving ``index``."""
        out = []
        for axis in range(self.arity):
            n = index[axis]
            if n >= 1:
                out.extend(("d", axis, i) for i in range(n + 1))
            if self.unital[axis] and n < self.truncation:
                out.extend(("s", axis, j) for j in range(n + 1))
        return out

    def operator(self, kind: str, axis: int, index: Index, position: int) -> FinMap:
        table = self.faces if kind == "d" else self.degeneracies
        return table[(axis, index, position)]

    def shape_problems(self) -> list[str]:
        if self.arity < 1 or self.truncation < 0:
            return ["arity must be positive and truncation non-negative"]
        if len(self.unital) != self.arity:
            return ["one unitality flag per axis"]
        indices = self.indices()
        if set(self.levels) != set(indices):
            return ["levels must cover every multi-index"]
        wanted_faces, wanted_degens = set(), set()
        for index in indices:
            for kind, axis, pos in self.operators(index):
                (wanted_faces if kind == "d" else wanted_degens).add((axis, index, pos))
        if set(self.faces) != wanted_faces:
            return ["faces must be given exactly for every axis, index and position"]
        if set(self.degeneracies) != wanted_degens:
            return ["degeneracies must be given exactly on the unital axes"]
        out = []
        for (axis, index, pos), m in self.faces.items():
            if m.dom != self.levels[index] or m.cod != self.levels[_shift(index, axis, -1)]:
                out.append(f"face {pos} in axis {axis} at {index} has the wrong ends")
        for (axis, index, pos), m in self.degeneracies.items():
            if m.dom != self.levels[index] or m.cod != self.levels[_shift(index, axis, 1)]:
                out.append(f"degeneracy {pos} in axis {axis} at {index} has the wrong ends")
        return out

    def problems(self) -> list[str]:
        out = self.shape_problems()
        if out:
            return out
        for axis in range(self.arity):
            for fixed in self.slice_positions(axis):
                violations = self.slice(axis, fixed, check=False).identity_violations()
                if violations:
                    return [f"axis {axis} slice at {fixed}: {violations[0]}"]
        return self.cross_axis_violations()

    def cross_axis_violations(self) -> list[str]:
        """Generators in different axes commute."""
        out = []
        for index in self.indices():
            ops = self.operators(index)
            for ka, a, i in ops:
                for kb, b, j in ops:
                    if a >= b:
                        continue
                    first_a = self.operator(ka, a, index, i)
                    mid_a = _shift(index, a, -1 if ka == "d" else 1)
                    mid_b = _shift(index, b, -1 if kb == "d" else 1)
                    route_ab = compose(self.operator(kb, b, mid_a, j), first_a)
                    route_ba = compose(self.operator(ka, a, mid_b, i),
                                       self.operator(kb, b, index, j))
                    if route_ab != route_ba:
                        out.append(f"{ka}{i} in axis {a} and {kb}{j} in axis {b} "
                                   f"do not commute at {index}")
        return out

    def slice_positions(self, axis: int) -> list[Index]:
        """Multi-indices with the coordinate at ``axis`` set to ``-1`` as a placeholder."""
        others = _cartesian(range(self.truncation + 1), repeat=self.arity - 1)
        return [tuple(o[:axis]) + (-1,) + tuple(o[axis:]) for o in others]

    def slice(self, axis: int, fixed: Index, check: bool = True) -> TruncatedSimplicialObject:
        """The simplicial object ``n -> X_{fixed with n at axis}``."""
        def at(n):
            return fixed[:axis] + (n,) + fixed[axis + 1:]

        top = self.truncation
        levels = tuple(self.levels[at(n)] for n in range(top + 1))
        faces = tuple(tuple(self.faces[(axis, at(n), i)] for i in range(n + 1))
                      for n in range(1, top + 1))
        degeneracies = None
        if self.unital[axis]:
            degeneracies = tuple(tuple(self.degeneracies[(axis, at(n), j)] for j in range(n + 1))
                                 for n in range(top))
        if check:
            return TruncatedSimplicialObject(levels, faces, degeneracies)
        return TruncatedSimplicialObject.unchecked(levels, faces, degeneracies)

    def fix(self, axis: int, value: int) -> "MultiSimplicialObject":
        """The object of arity ``n - 1`` with coordinate ``axis`` held at ``value``."""
        if self.arity < 2:
            raise InvalidStructure("cannot fix the only axis")

        def drop(index):
            return index[:axis] + index[axis + 1:]

        keep = [i for i in self.indices() if i[axis] == value]
        levels = {drop(i): self.levels[i] for i in keep}
        faces = {(b - (b > axis), drop(i), p): m for (b, i, p), m in self.faces.items()
                 if b != axis and i[axis] == value}
        degens = {(b - (b > axis), drop(i), p): m for (b, i, p), m in self.degeneracies.items()
                  if b != axis and i[axis] == value}
        unital = self.unital[:axis] + self.unital[axis + 1:]
        return MultiSimplicialObject(self.arity - 1, self.truncation, levels, faces, degens, unital)

    def apply(self, axis: int, index: Index, phi: SimplexMap) -> FinMap:
        """``X(phi)`` in one axis, starting at ``index``."""
        if phi.codomain_size != index[axis]:
            raise InvalidStructure("simplex map does not end at the given coordinate")
        fixed = index[:axis] + (-1,) + index[axis + 1:]
        return self.slice(axis, fixed, check=False).apply(phi)


def levels_table(x: MultiSimplicialObject) -> dict[Index, int]:
    return {i: len(s) for i, s in sorted(x.levels.items())}


# -- construction from cells ------------------------------------------------------

def from_cells(arity: int, truncation: int, cells: Callable[[Index], Sequence],
               act: Callable[[int, SimplexMap, Index, Hashable], Hashable],
               label: Callable[[Index, Hashable], str], unital: bool = True
               ) -> MultiSimplicialObject:
    """Build levels and generators from an explicit cell model.

    ``cells(index)`` lists the cells at ``index``; ``act(axis, phi, index, c)``
    is the action of a simplex map in one axis on a cell at ``index``.
    """
    indices = list(_cartesian(range(truncation + 1), repeat=arity))
    payloads = {i: list(cells(i)) for i in indices}
    levels = {i: FinSet(tuple(label(i, c) for c in payloads[i])) for i in indices}
    faces, degens = {}, {}
    for i in indices:
        for axis in range(arity):
            n = i[axis]
            if n >= 1:
                down = _shift(i, axis, -1)
                for k in range(n + 1):
                    phi = coface(n, k)
                    faces[(axis, i, k)] = FinMap(levels[i], levels[down], tuple(
                        label(down, act(axis, phi, i, c)) for c in payloads[i]))
            if unital and n < truncation:
                up = _shift(i, axis, 1)
                for k in range(n + 1):
                    phi = codegeneracy(n, k)
                    degens[(axis, i, k)] = FinMap(levels[i], levels[up], tuple(
                        label(up, act(axis, phi, i, c)) for c in payloads[i]))
    return MultiSimplicialObject(arity, truncation, levels, faces, degens, (unital,) * arity)


def external_product(*factors: TruncatedSimplicialObject) -> MultiSimplicialObject:
    """``(p_1, ..., p_n) -> X1_{p_1} × ... × Xn_{p_n}`` with each factor acting in its own axis."""
    if len(factors) < 2:
        raise InvalidStructure("need at least two factors")
    truncation = factors[0].truncation
    if any(x.truncation != truncation for x in factors):
        raise InvalidStructure("factors must share a truncation")
    unital = all(x.unital for x in factors)

    def cells(index):
        return list(_cartesian(*(x.levels[p].elements for x, p in zip(factors, index))))

    def act(axis, phi, index, cell):
        moved = factors[axis].apply(phi)(cell[axis])
        return cell[:axis] + (moved,) + cell[axis + 1:]

    def label(index, cell):
        return tuple_label(cell)

    return from_cells(len(factors), truncation, cells, act, label, unital)


def singleton(arity: int = 2, truncation: int = 2) -> MultiSimplicialObject:
    return from_cells(arity, truncation, lambda i: ["*"], lambda a, phi, i, c: c,
                      lambda i, c: "*")


# square double nerves

def _grid_cells(c: CatPresentation, p: int, q: int) -> list[tuple]:
    """Commuting ``(p+1) × (q+1)`` grids in ``c``, as ``(objects, horizontal, vertical)``."""
    s = semicat_of(c)
    out = []
    homs = {(x, y): hom_set(s, x, y).elements for x in s.objects for y in s.objects}
    for flat in _cartesian(s.objects.elements, repeat=(p + 1) * (q + 1)):
        objs = tuple(tuple(flat[a * (q + 1) + b] for b in range(q + 1)) for a in range(p + 1))
        slots = ([(objs[a][b], objs[a + 1][b]) for a in range(p) for b in range(q + 1)]
                 + [(objs[a][b], objs[a][b + 1]) for a in range(p + 1) for b in range(q)])
        options = [homs[ends] for ends in slots]
        for choice in _cartesian(*options):
            hs = choice[:p * (q + 1)]
            vs = choice[p * (q + 1):]
            h = tuple(tuple(hs[a * (q + 1) + b] for b in range(q + 1)) for a in range(p))
            v = tuple(tuple(vs[a * q + b] for b in range(q)) for a in range(p + 1))
            if all(s.comp[(v[a + 1][b], h[a][b])] == s.comp[(h[a][b + 1], v[a][b])]
                   for a in range(p) for b in range(q)):
                out.append((objs, h, v))
    return out


def _path(c: CatPresentation, start: str, edges: Sequence[str]) -> str:
    out = c.identity(start)
    for e in edges:
        out = c.compose(e, out)
    return out


def _transpose(cell, rows: int, cols: int) -> tuple:
    """Swap the two axes of a grid with ``rows x cols`` objects."""
    objs, h, v = cell
    t_objs = tuple(tuple(objs[a][b] for a in range(rows)) for b in range(cols))
    t_h = tuple(tuple(v[a][b] for a in range(rows)) for b in range(cols - 1))
    t_v = tuple(tuple(h[a][b] for a in range(rows - 1)) for b in range(cols))
    return t_objs, t_h, t_v


def _grid_act(c: CatPresentation, axis: int, phi: SimplexMap, cell) -> tuple:
    if axis == 1:
        rows, cols = len(cell[0]), len(cell[0][0])
        moved = _grid_act(c, 0, phi, _transpose(cell, rows, cols))
        return _transpose(moved, phi.domain_size + 1, rows)
    objs, h, v = cell
    cols = len(objs[0])
    new_objs = tuple(objs[phi(a)] for a in range(phi.domain_size + 1))
    new_h = tuple(tuple(_path(c, objs[phi(a)][b], [h[k][b] for k in range(phi(a), phi(a + 1))])
                        for b in range(cols))
                  for a in range(phi.domain_size))
    new_v = tuple(v[phi(a)] for a in range(phi.domain_size + 1))
    return new_objs, new_h, new_v


def _grid_label(index: Index, cell) -> str:
    objs, h, v = cell
    if index == (0, 0):
        return objs[0][0]
    flat = [x for col in objs for x in col]
    rows = [x for col in h for x in col]
    cols = [x for col in v for x in col]
    return "<" + ",".join(flat) + "|" + ",".join(rows) + "|" + ",".join(cols) + ">"


def square_double_nerve(c: CatPresentation, truncation: int = 2) -> MultiSimplicialObject:
    """``(p, q) ->`` commuting ``[p] × [q]`` grids in ``c``."""
    return from_cells(2, truncation, lambda i: _grid_cells(c, *i),
                      lambda axis, phi, i, cell: _grid_act(c, axis, phi, cell), _grid_label)


# locally preordered 2-categories

@dataclass(frozen=True)
class LocallyPreordered:
    """A category whose hom-sets carry a preorder compatible with composition."""

    underlying: CatPresentation
    le: frozenset

    def __post_init__(self):
        object.__setattr__(self, "le", frozenset(self.le))
        problems = self.problems()
        if problems:
            raise InvalidStructure(problems[0])

    def problems(self) -> list[str]:
        c, le = self.underlying, self.le
        out = []
        for f, g in le:
            if f not in c.morphisms or g not in c.morphisms:
                return [f"{f} <= {g} mentions an unknown morphism"]
            if (c.src(f), c.tgt(f)) != (c.src(g), c.tgt(g)):
                out.append(f"{f} <= {g} compares morphisms with different ends")
        if out:
            return out
        for f in c.morphisms:
            if (f, f) not in le:
                out.append(f"{f} <= {f} is missing")
        for f, g in le:
            for g2, h in le:
                if g == g2 and (f, h) not in le:
                    out.append(f"{f} <= {g} <= {h} but not {f} <= {h}")
        for f, g in le:
            for k in c.morphisms:
                if c.src(k) == c.tgt(f) and (c.compose(k, f), c.compose(k, g)) not in le:
                    out.append(f"post-composition with {k} breaks {f} <= {g}")
                if c.tgt(k) == c.src(f) and (c.compose(f, k), c.compose(g, k)) not in le:
                    out.append(f"pre-composition with {k} breaks {f} <= {g}")
        return out

    def chains(self, x: str, y: str, q: int) -> list[tuple[str, ...]]:
        out = [(f,) for f in hom_set(self.underlying, x, y)]
        for _ in range(q):
            out = [ch + (g,) for ch in out for g in hom_set(self.underlying, x, y)
                   if (ch[-1], g) in self.le]
        return out


def locally_discrete(c: CatPresentation) -> LocallyPreordered:
    return LocallyPreordered(c, frozenset((f, f) for f in c.morphisms))


def _lp_cells(k: LocallyPreordered, p: int, q: int) -> list[tuple]:
    c = k.underlying
    out = []
    for objs in _cartesian(c.objects.elements, repeat=p + 1):
        per_step = [k.chains(objs[t], objs[t + 1], q) for t in range(p)]
        for chains in _cartesian(*per_step):
            out.append((objs, chains))
    return out


def _lp_act(k: LocallyPreordered, axis: int, phi: SimplexMap, cell) -> tuple:
    c = k.underlying
    objs, chains = cell
    if axis == 1:
        return objs, tuple(tuple(ch[phi(t)] for t in range(phi.domain_size + 1))
                           for ch in chains)
    q = len(chains[0]) - 1 if chains else None
    new_objs = tuple(objs[phi(a)] for a in range(phi.domain_size + 1))
    new_chains = []
    for a in range(phi.domain_size):
        lo, hi = phi(a), phi(a + 1)
        if q is None:
            raise InvalidStructure("cannot insert identities without a height")
        new_chains.append(tuple(_path(c, objs[lo], [chains[s][t] for s in range(lo, hi)])
                                for t in range(q + 1)))
    return new_objs, tuple(new_chains)


def _lp_label(index: Index, cell) -> str:
    objs, chains = cell
    if index[0] == 0:
        return objs[0]
    names = [ch[0] if len(ch) == 1 else "[" + "|".join(ch) + "]" for ch in chains]
    return names[0] if len(names) == 1 else tuple_label(names)


def locally_preordered_nerve(k: LocallyPreordered, truncation: int = 2) -> MultiSimplicialObject:
    """Axis 0 composes 1-cells, axis 1 stacks 2-cells; the 0-column is constant."""

    def cells(index):
        p, q = index
        return _lp_cells(k, p, q)

    def act(axis, phi, index, cell):
        if axis == 0 and index[0] == 0:
            # only the constant column: repeat the object and use identity chains
            x = cell[0][0]
            chain = tuple(k.underlying.identity(x) for _ in range(index[1] + 1))
            return (x,) * (phi.domain_size + 1), (chain,) * phi.domain_size
        return _lp_act(k, axis, phi, cell)

    return from_cells(2, truncation, cells, act, _lp_label)


# -- conditions ------------------------------------------------------------------

def check_n_uple_segal(x: MultiSimplicialObject) -> bool:
    for axis in range(x.arity):
        for fixed in x.slice_positions(axis):
            if not check_segal(x.slice(axis, fixed, check=False)):
                return False
    return True


def _all_bijective(x: MultiSimplicialObject) -> bool:
    maps = list(x.faces.values()) + list(x.degeneracies.values())
    return all(is_bijection(m) for m in maps)


def check_constancy(x: MultiSimplicialObject) -> bool:
    """The n-fold condition: the 0-slice of the first axis is constant and each
    positive slice is (n-1)-fold, recursively.  For arity 1 this is the Segal
    condition."""
    if x.arity == 1:
        return check_segal(x.slice(0, (-1,), check=False))
    if not check_n_uple_segal(x):
        return False
    if not _all_bijective(x.fix(0, 0)):
        return False
    return all(check_constancy(x.fix(0, p)) for p in range(1, x.truncation + 1))


# -- quasi-units and promotion -------------------------------------------------------

def forget_axis(x: MultiSimplicialObject, axis: int) -> MultiSimplicialObject:
    degens = {key: m for key, m in x.degeneracies.items() if key[0] != axis}
    unital = tuple(False if a == axis else u for a, u in enumerate(x.unital))
    return MultiSimplicialObject(x.arity, x.truncation, x.levels, x.faces, degens, unital)


def forget_all(x: MultiSimplicialObject) -> MultiSimplicialObject:
    for axis in range(x.arity):
        x = forget_axis(x, axis)
    return x


def find_quasi_units_nfold(x: MultiSimplicialObject
                           ) -> Optional[dict[int, dict[Index, QuasiUnit]]]:
    """Per non-unital axis, the quasi-unit of every slice; ``None`` if one is missing."""
    family: dict[int, dict[Index, QuasiUnit]] = {}
    for axis in range(x.arity):
        if x.unital[axis]:
            continue
        family[axis] = {}
        for fixed in x.slice_positions(axis):
            sl = x.slice(axis, fixed, check=False)
            if not check_segal(sl):
                return None
            units = find_quasi_units(simplicial_to_algebraic(sl))
            if not units:
                return None
            family[axis][fixed] = units[0]
    return family


def _slice_degeneracies(sl: TruncatedSimplicialObject, u: FinMap) -> list[list[FinMap]]:
    """Degeneracies of a Segal slice built from its quasi-unit by inserting it in spines."""
    top = sl.truncation
    out = [[u]] if top >= 1 else []
    for n in range(1, top):
        spine_index = {}
        edges_up = [sl.apply(rho(k, k + 1, n + 1)) for k in range(n + 1)]
        for cell in sl.levels[n + 1]:
            spine_index[tuple(e(cell) for e in edges_up)] = cell
        edges = [sl.apply(rho(k, k + 1, n)) for k in range(n)]
        verts = [sl.apply(rho(k, k, n)) for k in range(n + 1)]
        level = []
        for j in range(n + 1):
            images = []
            for cell in sl.levels[n]:
                spine = [e(cell) for e in edges]
                spine.insert(j, u(verts[j](cell)))
                images.append(spine_index[tuple(spine)])
            level.append(FinMap(sl.levels[n], sl.levels[n + 1], tuple(images)))
        out.append(level)
    return out


def promote_axis(x: MultiSimplicialObject, axis: int) -> MultiSimplicialObject:
    if x.unital[axis]:
        return x
    degens = dict(x.degeneracies)
    for fixed in x.slice_positions(axis):
        sl = x.slice(axis, fixed, check=False)
        if not check_segal(sl):
            raise InvalidStructure(f"slice at {fixed} in axis {axis} is not Segal")
        units = find_quasi_units(simplicial_to_algebraic(sl))
        if not units:
            raise InvalidStructure(f"slice at {fixed} in axis {axis} is not quasi-unital")
        u = units[0].carrier
        for n, level in enumerate(_slice_degeneracies(sl, u)):
            at = fixed[:axis] + (n,) + fixed[axis + 1:]
            for j, m in enumerate(level):
                degens[(axis, at, j)] = m
    unital = tuple(True if a == axis else f for a, f in enumerate(x.unital))
    return MultiSimplicialObject(x.arity, x.truncation, x.levels, x.faces, degens, unital)


def promote_nfold(x: MultiSimplicialObject) -> MultiSimplicialObject:
    """Promote every non-unital axis, outermost first."""
    for axis in range(x.arity):
        x = promote_axis(x, axis)
    return x


# -- completeness -----------------------------------------------------------------

def _slice_complete(sl: TruncatedSimplicialObject) -> bool:
    return is_complete(simplicial_to_algebraic(sl))


def designated_slices(x: MultiSimplicialObject) -> list[TruncatedSimplicialObject]:
    """``X_{1..1, •, 0..0}`` with the free axis in each position."""
    out = []
    for k in range(x.arity):
        fixed = (1,) * k + (-1,) + (0,) * (x.arity - k - 1)
        out.append(x.slice(k, fixed, check=False))
    return out


def is_complete_nfold(x: MultiSimplicialObject) -> bool:
    """Every designated 1-dimensional slice is complete."""
    if find_quasi_units_nfold(x) is None or not check_constancy(x):
        raise InvalidStructure("completeness needs a quasi-unital n-fold Segal object")
    return all(_slice_complete(sl) for sl in designated_slices(x))


def is_complete_nfold_recursive(x: MultiSimplicialObject) -> bool:
    """``X_{•,0..0}`` complete and ``X_{1,•..•}`` complete as an object of one arity less."""
    if x.arity == 1:
        return _slice_complete(x.slice(0, (-1,), check=False))
    first = x.slice(0, (-1,) + (0,) * (x.arity - 1), check=False)
    return _slice_complete(first) and is_complete_nfold_recursive(x.fix(0, 1))


# -- small universes ----------------------------------------------------------------

def compatible_preorders(c: CatPresentation) -> list[LocallyPreordered]:
    """Every hom-wise preorder on ``c`` that composition respects."""
    from itertools import combinations

    diagonal = [(f, f) for f in c.morphisms]
    candidates = [(f, g) for f in c.morphisms for g in c.morphisms
                  if f != g and (c.src(f), c.tgt(f)) == (c.src(g), c.tgt(g))]
    out = []
    for size in range(len(candidates) + 1):
        for extra in combinations(candidates, size):
            trial = LocallyPreordered.__new__(LocallyPreordered)
            object.__setattr__(trial, "underlying", c)
            object.__setattr__(trial, "le", frozenset(diagonal + list(extra)))
            if not trial.problems():
                out.append(LocallyPreordered(c, trial.le))
    return out


def is_poset(c: CatPresentation) -> bool:
    s = semicat_of(c)
    for x in s.objects:
        for y in s.objects:
            n = len(hom_set(s, x, y))
            if n > 1 or (x != y and n and hom_set(s, y, x)):
                return False
    return True

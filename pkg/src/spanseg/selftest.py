"""The acceptance sweep: eleven exhaustive checks over a bounded universe.

Each check returns a :class:`CriterionResult` whose text is a pure function
of the bounds, so reports are byte-identical across runs.
"""

from __future__ import annotations

import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from . import catalog
from .catobj import (
    CatPresentation,
    algebraic_to_simplicial,
    check_segal,
    is_complete,
    is_gaunt,
    restrict_along,
    restriction_level1_square,
    restriction_projection,
)
from .enumeration import (
    UniverseBounds,
    enumerate_categories,
    enumerate_semicats,
    enumerate_two_fold,
    iso_classes,
    random_semicats,
)
from .finset import FinMap, FinSet, all_maps, compose, is_bijection, labels
from .mutation import (
    composition_mutants,
    face_mutants,
    simplicial_mutant_detected,
    table_mutant_detected,
)
from .nfold import (
    check_constancy,
    forget_all,
    is_complete_nfold,
    is_complete_nfold_recursive,
    promote_nfold,
)
from .quasiunit import (
    find_quasi_units,
    find_quasi_units_bruteforce,
    forget_units,
    is_quasi_unital,
    is_weakly_quasi_unital,
    promote_to_unital,
    unital_functors_vs_quasi_unital,
)
from .simplex import (
    compose_values,
    eta_component,
    identity,
    in_i,
    in_w,
    monotone_maps,
    pi_morphism,
    pi_values,
    psi,
    psi_morphism,
    shat_compose,
    shat_morphisms,
    shat_objects,
    w_triangle_factorization,
)
from .spanalg import (
    cat_to_span_monoid,
    codiscrete_algebra_check,
    hom_set_sweep,
    quasi_unit_of_monoid,
    span_monoid_to_cat,
)
from .spans import catobj_to_sigma_diagram, check_spanplus_segal

DEFAULT_BOUNDS = UniverseBounds(2, 3, seed=0)
PI_AMBIENT = 4
MIN_MUTANTS = 100


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    summary: str
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.title}: {self.summary}"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "summary": self.summary, "details": self.details}


class Universe:
    """Lazily enumerated structures within the bounds."""

    def __init__(self, bounds: UniverseBounds):
        self.bounds = bounds

    @cached_property
    def semicats(self):
        return list(enumerate_semicats(self.bounds))

    @cached_property
    def categories(self):
        return list(enumerate_categories(self.bounds))

    @cached_property
    def category_classes(self):
        return iso_classes(self.categories)

    @cached_property
    def two_fold(self):
        return enumerate_two_fold(self.bounds)


def bounds_from_env(default: UniverseBounds = DEFAULT_BOUNDS) -> UniverseBounds:
    objects = int(os.environ.get("SPANSEG_MAX_OBJECTS", default.max_objects))
    morphisms = int(os.environ.get("SPANSEG_MAX_MORPHISMS", default.max_morphisms))
    return UniverseBounds(objects, morphisms, default.arity, default.seed)


# -- the checks ---------------------------------------------------------------------

def quasi_unit_uniqueness(u: Universe) -> CriterionResult:
    worst, disagree = 0, []
    for k, a in enumerate(u.semicats):
        fast = [q.carrier for q in find_quasi_units(a)]
        slow = [q.carrier for q in find_quasi_units_bruteforce(a)]
        worst = max(worst, len(slow))
        if fast != slow:
            disagree.append(k)
    quasi = sum(1 for a in u.semicats if is_quasi_unital(a))
    ok = worst <= 1 and not disagree
    return CriterionResult(1, "quasi-unit uniqueness", ok,
                           f"{len(u.semicats)} semicategories, {quasi} quasi-unital, "
                           f"at most {worst} quasi-unit each",
                           {"semicategories": len(u.semicats), "quasi_unital": quasi,
                            "max_units": worst, "search_disagreements": disagree})


def unit_promotion(u: Universe) -> CriterionResult:
    bad_round = []
    promoted = 0
    for k, a in enumerate(u.semicats):
        if is_quasi_unital(a):
            promoted += 1
            if forget_units(promote_to_unital(a)) != a:
                bad_round.append(["semicat", k])
    for k, c in enumerate(u.categories):
        if promote_to_unital(forget_units(c)) != c:
            bad_round.append(["cat", k])
    pairs = unital = 0
    bad_pairs, witness = [], None
    for i, c in enumerate(u.categories):
        for j, d in enumerate(u.categories):
            r = unital_functors_vs_quasi_unital(c, d)
            pairs += 1
            unital += r["unital"]
            if not r["bijective"] or r["unital"] != r["quasi_unital"]:
                bad_pairs.append([i, j])
            if witness is None and r["unital"] > 1:
                witness = {"pair": [i, j], "functor": [list(x) for x in r["witness"][0]]}
    ok = not bad_round and not bad_pairs
    return CriterionResult(2, "unit promotion", ok,
                           f"{promoted} promotions and {len(u.categories)} forgets round-trip; "
                           f"{pairs} category pairs, {unital} unital functors matched",
                           {"round_trip_failures": bad_round, "pair_failures": bad_pairs,
                            "unital_functors": unital, "witness": witness})


def constant_composition_witness(u: Universe) -> CriterionResult:
    from .cli import main

    g = catalog.constant_composition()
    associative = not g.problems()
    quasi = is_quasi_unital(g)
    weak = is_weakly_quasi_unital(g)
    from .structfile import dumps

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "constant.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(g))
        sink = io.StringIO()
        with redirect_stdout(sink), redirect_stderr(sink):
            code = main(["promote", path])
    ok = associative and not quasi and not weak and code == 1
    return CriterionResult(3, "constant-composition witness", ok,
                           f"associative={associative}, quasi-unital={quasi}, "
                           f"weakly quasi-unital={weak}, promote exit code {code}",
                           {"associative": associative, "quasi_unital": quasi,
                            "weakly_quasi_unital": weak, "promote_exit": code})


def span_algebra(u: Universe) -> CriterionResult:
    items = u.semicats + u.categories
    bad_round, bad_units = [], []
    for k, a in enumerate(items):
        m = cat_to_span_monoid(a)
        if span_monoid_to_cat(m) != a:
            bad_round.append(k)
        found = find_quasi_units(a)
        expected = found[0].carrier if found else None
        if quasi_unit_of_monoid(m) != expected:
            bad_units.append(k)
        if isinstance(a, CatPresentation) and m.unit != a.identity:
            bad_units.append(k)
    sweep = hom_set_sweep(u.semicats)
    ok = not bad_round and not bad_units and sweep.passed
    return CriterionResult(4, "span-algebra translation", ok,
                           f"{len(items)} round trips; {sweep.checked} pairs, "
                           f"{sweep.notes['functors']} semifunctors matched with monoid morphisms",
                           {"round_trip_failures": bad_round, "unit_failures": bad_units,
                            "hom_set_failures": sweep.counterexamples[:5]})


def segal_machinery(u: Universe) -> CriterionResult:
    not_segal = [k for k, a in enumerate(u.semicats + u.categories)
                 if not check_segal(algebraic_to_simplicial(a))]
    mutants = killed = 0
    survivors = []
    sources = [("walking arrow", catalog.walking_arrow()),
               ("walking isomorphism", catalog.walking_isomorphism()),
               ("walking idempotent", catalog.walking_idempotent()),
               ("chain 2", catalog.chain(2))]
    for name, c in sources:
        for desc, x in face_mutants(algebraic_to_simplicial(c, 3)):
            mutants += 1
            if simplicial_mutant_detected(x):
                killed += 1
            else:
                survivors.append(f"{name}: {desc}")
        for desc, s in composition_mutants(c):
            mutants += 1
            if table_mutant_detected(s):
                killed += 1
            else:
                survivors.append(f"{name}: {desc}")
    ok = not not_segal and mutants >= MIN_MUTANTS and killed == mutants
    return CriterionResult(5, "Segal machinery", ok,
                           f"{len(u.semicats) + len(u.categories)} nerves Segal; "
                           f"{killed}/{mutants} mutants killed",
                           {"non_segal_nerves": not_segal, "mutants": mutants,
                            "killed": killed, "survivors": survivors[:10]})


def interval_combinatorics(u: Universe, ambient: int = PI_AMBIENT) -> CriterionResult:
    objs = shat_objects(ambient)
    homs = {(x, y): list(shat_morphisms(x, y)) for x in objs for y in objs}
    outgoing = {x: [m for y in objs for m in homs[(x, y)]] for x in objs}
    pis = {}
    for ms in homs.values():
        for m in ms:
            pis[m] = pi_morphism(m).values
    pairs = 0
    failures = []
    # functoriality on bare value sequences, through the same helpers the
    # object-level functions use
    for (x, y), ms in homs.items():
        for a in ms:
            fa = a.underlying.values
            for b in outgoing[y]:
                pairs += 1
                z = b.target
                composite = pi_values(compose_values(fa, b.underlying.values), x.lo, z.lo, z.hi)
                if composite != compose_values(pis[a], pis[b]):
                    failures.append(["functoriality", str(a), str(b)])
    # spot-check the object-level composite against the bare route
    for (x, y), ms in list(homs.items())[:50]:
        for a in ms[:3]:
            for b in outgoing[y][:3]:
                if pi_morphism(shat_compose(b, a)).values != compose_values(pis[a], pis[b]):
                    failures.append(["object-level composite", str(a), str(b)])
    for x in objs:
        if pis[next(m for m in homs[(x, x)] if m.underlying == identity(x.ambient))] != \
                tuple(range(x.hi - x.lo + 1)):
            failures.append(["identity", str(x)])
    psi_checked = 0
    for m in range(ambient + 1):
        for n in range(ambient + 1):
            for phi in monotone_maps(m, n):
                psi_checked += 1
                if pi_morphism(psi_morphism(phi)) != phi:
                    failures.append(["pi after psi", str(phi)])
    for x in objs:
        eta = eta_component(x)
        if not in_i(eta) or not in_w(eta) or eta.target != psi(x.hi - x.lo):
            failures.append(["eta", str(x)])
    w_count = 0
    for ms in homs.values():
        for w in ms:
            if in_w(w):
                w_count += 1
                down_source, down_target = w_triangle_factorization(w)
                if not (in_i(down_source) and in_i(down_target)
                        and shat_compose(down_target, w) == down_source):
                    failures.append(["triangle", str(w)])
    morphisms = sum(len(ms) for ms in homs.values())
    return CriterionResult(6, "interval combinatorics", not failures,
                           f"ambient <= {ambient}: {len(objs)} objects, {morphisms} morphisms, "
                           f"{pairs} composable pairs, {psi_checked} simplex maps, "
                           f"{w_count} triangles",
                           {"failures": failures[:10]})


def kan_extensions(u: Universe) -> CriterionResult:
    items = u.semicats + u.categories
    reports = [codiscrete_algebra_check(labels(size, "s"), items) for size in (0, 1, 2)]
    failures = [c for r in reports for c in r.counterexamples][:10]
    extensions = sum(r.checked for r in reports)
    squares = 0
    for k, a in enumerate(items):
        x = algebraic_to_simplicial(a, 2)
        for size in range(3):
            for f in all_maps(labels(size, "y"), x.levels[0]):
                squares += 1
                restricted = restrict_along(f, x)
                square, to_pairs, to_x = restriction_level1_square(f, x)
                witness = FinMap(restricted.levels[1], square, restricted.levels[1].elements) \
                    if restricted.levels[1] == square else None
                projections = restriction_projection(f, x)
                if witness is None or not is_bijection(witness) or \
                        compose(to_x, witness) != projections[1]:
                    failures.append({"item": k, "map": list(f.images)})
    ok = not failures
    return CriterionResult(7, "codiscrete and restriction", ok,
                           f"{extensions} object maps extend uniquely; "
                           f"{squares} restrictions match the level-1 square",
                           {"failures": failures[:10]})


def completeness(u: Universe) -> CriterionResult:
    disagreements = []
    complete = 0
    for k, c in enumerate(u.categories):
        faces = is_complete(c)
        unit = is_complete(c, criterion="unit")
        gaunt = is_gaunt(c)
        complete += faces
        if not faces == unit == gaunt:
            disagreements.append(k)
    iso_rejected = not is_complete(catalog.walking_isomorphism())
    arrow_accepted = is_complete(catalog.walking_arrow())
    ok = not disagreements and iso_rejected and arrow_accepted
    return CriterionResult(8, "completeness", ok,
                           f"{len(u.categories)} categories, {complete} complete, all agree "
                           f"with the gaunt oracle; walking isomorphism rejected={iso_rejected}, "
                           f"walking arrow accepted={arrow_accepted}",
                           {"disagreements": disagreements})


def _with_duplicate(x, level: int):
    """``x`` with one non-degenerate cell of ``level`` doubled (breaks the Segal condition)."""
    from .catobj import TruncatedSimplicialObject

    degenerate = set()
    if x.unital and level >= 1:
        for s in x.degeneracies[level - 1]:
            degenerate.update(s.images)
    cells = [c for c in x.levels[level] if c not in degenerate]
    if not cells:
        return None
    cell = cells[0]
    copy = cell + "'"
    levels = list(x.levels)
    levels[level] = FinSet(x.levels[level].elements + (copy,))
    faces = [list(row) for row in x.faces]
    if level >= 1:
        faces[level - 1] = [FinMap(levels[level], d.cod, d.images + (d(cell),))
                            for d in faces[level - 1]]
    if level + 1 <= x.truncation:
        faces[level] = [FinMap(d.dom, levels[level], d.images) for d in faces[level]]
    degens = None
    if x.unital:
        degens = [list(row) for row in x.degeneracies]
        if level < x.truncation:
            degens[level] = [FinMap(levels[level], s.cod, s.images + (s(cell),))
                             for s in degens[level]]
        if level >= 1:
            degens[level - 1] = [FinMap(s.dom, levels[level], s.images)
                                 for s in degens[level - 1]]
    return TruncatedSimplicialObject(levels, faces, degens)


def spanplus(u: Universe) -> CriterionResult:
    sources = []
    for a in u.semicats + u.categories:
        x = algebraic_to_simplicial(a, 3)
        sources.append(x)
        # a unital object can only take a copy at the top level
        for level in ((3,) if x.unital else (2, 3)):
            dup = _with_duplicate(x, level)
            if dup is not None:
                sources.append(dup)
    disagreements = []
    non_segal = 0
    for k, x in enumerate(sources):
        non_segal += not check_segal(x)
        for n in range(4):
            if check_spanplus_segal(catobj_to_sigma_diagram(x, n)) != check_segal(x, upto=n):
                disagreements.append([k, n])
    ok = not disagreements
    return CriterionResult(9, "interval-diagram Segal condition", ok,
                           f"{len(sources)} simplicial objects ({non_segal} not Segal), "
                           f"n = 0..3, conditions agree",
                           {"disagreements": disagreements[:10]})


def two_fold(u: Universe) -> CriterionResult:
    failures = []
    n_fold = complete = 0
    for name, x in u.two_fold:
        if promote_nfold(forget_all(x)) != x:
            failures.append(["round trip", name])
        if check_constancy(x):
            n_fold += 1
            a, b = is_complete_nfold(x), is_complete_nfold_recursive(x)
            complete += a
            if a != b:
                failures.append(["completeness", name])
    one_dim = 0
    for c in u.category_classes:
        from .nfold import MultiSimplicialObject

        x = algebraic_to_simplicial(c, 2)
        levels = {(n,): x.levels[n] for n in range(3)}
        faces = {(0, (n,), i): x.face(n, i) for n in range(1, 3) for i in range(n + 1)}
        degens = {(0, (n,), j): x.degeneracy(n, j) for n in range(2) for j in range(n + 1)}
        m = MultiSimplicialObject(1, 2, levels, faces, degens, (True,))
        one_dim += 1
        if is_complete_nfold(m) != is_complete(c) or check_constancy(m) != check_segal(x):
            failures.append(["arity one", str(one_dim)])
    ok = not failures
    return CriterionResult(10, "two-fold objects", ok,
                           f"{len(u.two_fold)} round trips; {n_fold} two-fold Segal, "
                           f"{complete} complete, both formulations agree; "
                           f"{one_dim} arity-one cases match",
                           {"failures": failures[:10]})


def determinism(u: Universe) -> CriterionResult:
    from .cli import enumerate_stream

    b = u.bounds
    first = enumerate_stream(b, iso=False)
    second = enumerate_stream(b, iso=False)
    seeded = [random_semicats(UniverseBounds(b.max_objects, b.max_morphisms, seed=b.seed), 20)
              for _ in range(2)]
    again = quasi_unit_uniqueness(Universe(b)).as_dict()
    ok = first == second and seeded[0] == seeded[1] and again == quasi_unit_uniqueness(u).as_dict()
    return CriterionResult(11, "determinism", ok,
                           f"enumeration stream of {len(first.splitlines())} records identical "
                           f"across runs; seeded sampling and reports stable",
                           {"records": len(first.splitlines())})


CRITERIA: list[Callable[[Universe], CriterionResult]] = [
    quasi_unit_uniqueness, unit_promotion, constant_composition_witness, span_algebra,
    segal_machinery, interval_combinatorics, kan_extensions, completeness, spanplus,
    two_fold, determinism,
]


def run(bounds: Optional[UniverseBounds] = None,
        only: Optional[list[int]] = None) -> list[CriterionResult]:
    u = Universe(bounds or bounds_from_env())
    results = []
    for number, check in enumerate(CRITERIA, start=1):
        if only is None or number in only:
            results.append(check(u))
    return results


def render(results: list[CriterionResult], bounds: UniverseBounds, as_json: bool = False) -> str:
    if as_json:
        return json.dumps({"bounds": {"max_objects": bounds.max_objects,
                                      "max_morphisms": bounds.max_morphisms,
                                      "seed": bounds.seed},
                           "passed": all(r.passed for r in results),
                           "criteria": [r.as_dict() for r in results]}, indent=2) + "\n"
    head = (f"selftest with max_objects={bounds.max_objects}, "
            f"max_morphisms={bounds.max_morphisms}, seed={bounds.seed}")
    passed = sum(r.passed for r in results)
    return "\n".join([head] + [r.line() for r in results]
                     + [f"{passed}/{len(results)} criteria pass"]) + "\n"

"""Command-line interface.

Exit codes: 0 when the property holds (or the command succeeded), 1 when it
fails, 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catobj import (
    CatPresentation,
    SemicatPresentation,
    TruncatedSimplicialObject,
    algebraic_to_simplicial,
    codiscrete,
    is_complete,
    restrict_along,
    segal_failure,
    semicat_of,
    simplicial_to_algebraic,
)
from .enumeration import (
    UniverseBounds,
    enumerate_categories,
    enumerate_semicats,
    iso_classes,
    random_semicats,
)
from .finset import FinMap, FinSet, InvalidStructure
from .nfold import (
    MultiSimplicialObject,
    check_constancy,
    check_n_uple_segal,
    find_quasi_units_nfold,
    is_complete_nfold,
    promote_nfold,
)
from .quasiunit import (
    local_units,
    find_quasi_units,
    is_quasi_unital_functor,
    is_quasi_unital_functor_by_restriction,
    promote_to_unital,
)
from .spanalg import SpanMonoid, cat_to_span_monoid, quasi_unit_of_monoid, span_monoid_to_cat
from .spans import SigmaDiagram, check_spanplus_segal
from .structfile import StructureFileError, dumps, dumps_line, encode, load

OK, FAILS, MALFORMED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Outcome:
    """What a command reports: a verdict, text lines and machine-readable fields."""

    def __init__(self, holds: bool, message: str, **fields):
        self.holds = holds
        self.message = message
        self.fields = fields
        self.structure = None

    @property
    def code(self) -> int:
        return OK if self.holds else FAILS


def _presentation(obj):
    if isinstance(obj, (SemicatPresentation, CatPresentation)):
        return obj
    if isinstance(obj, SpanMonoid):
        return span_monoid_to_cat(obj)
    if isinstance(obj, TruncatedSimplicialObject):
        return simplicial_to_algebraic(obj)
    raise UsageError("expected a semicat, cat, span-monoid or simplicial file")


def _unit_dict(u: FinMap) -> dict:
    return dict(zip(u.dom.elements, u.images))


# -- commands ---------------------------------------------------------------------

def cmd_validate(obj, args) -> Outcome:
    kind = encode(obj)["kind"]
    return Outcome(True, f"valid {kind}", kind=kind)


def cmd_check_segal(obj, args) -> Outcome:
    if isinstance(obj, MultiSimplicialObject):
        holds = check_n_uple_segal(obj)
        return Outcome(holds, "n-uple Segal condition " + ("holds" if holds else "fails"),
                       n_fold=holds and check_constancy(obj))
    if isinstance(obj, SigmaDiagram):
        holds = check_spanplus_segal(obj)
        return Outcome(holds, "interval-diagram Segal condition " + ("holds" if holds else "fails"))
    if isinstance(obj, (SemicatPresentation, CatPresentation, SpanMonoid)):
        obj = algebraic_to_simplicial(_presentation(obj))
    if not isinstance(obj, TruncatedSimplicialObject):
        raise UsageError("check-segal needs a simplicial, multisimplicial, sigma-diagram, "
                         "semicat, cat or span-monoid file")
    failure = segal_failure(obj)
    if failure is None:
        return Outcome(True, f"Segal condition holds up to level {obj.truncation}")
    return Outcome(False, f"Segal condition fails: {failure}", counterexample=failure)


def cmd_quasi_units(obj, args) -> Outcome:
    if isinstance(obj, MultiSimplicialObject):
        family = find_quasi_units_nfold(obj)
        if family is None:
            return Outcome(False, "no quasi-unit in some axis")
        witness = {str(axis): {str(list(k)): _unit_dict(q.carrier) for k, q in units.items()}
                   for axis, units in family.items()}
        return Outcome(True, f"quasi-units found on {len(family)} non-unital axes",
                       quasi_units=witness)
    if isinstance(obj, SpanMonoid):
        u = quasi_unit_of_monoid(obj)
        if u is None:
            return Outcome(False, "no quasi-unit")
        return Outcome(True, "quasi-unit: " + ", ".join(f"{x} -> {m}" for x, m in
                                                         zip(u.dom, u.images)),
                       quasi_unit=_unit_dict(u))
    a = _presentation(obj)
    units = find_quasi_units(a)
    if not units:
        s = semicat_of(a)
        lacking = [x for x in s.objects if not local_units(s, x)]
        return Outcome(False, f"no quasi-unit: no local unit at {', '.join(lacking)}",
                       quasi_unit=None, counterexample={"objects_without_unit": lacking})
    u = units[0].carrier
    return Outcome(True, "quasi-unit: " + ", ".join(f"{x} -> {m}" for x, m in
                                                     zip(u.dom, u.images)),
                   quasi_unit=_unit_dict(u))


def cmd_promote(obj, args) -> Outcome:
    if isinstance(obj, MultiSimplicialObject):
        try:
            promoted = promote_nfold(obj)
        except InvalidStructure as exc:
            return Outcome(False, f"cannot promote: {exc}")
        out = Outcome(True, "promoted every axis")
        out.structure = promoted
        return out
    a = _presentation(obj)
    if not find_quasi_units(a):
        return Outcome(False, "no quasi-unit: cannot promote")
    promoted = promote_to_unital(a)
    out = Outcome(True, "promoted to a category")
    # answer in the same kind of file as the question
    if isinstance(obj, TruncatedSimplicialObject):
        out.structure = algebraic_to_simplicial(promoted, obj.truncation)
    elif isinstance(obj, SpanMonoid):
        out.structure = cat_to_span_monoid(promoted)
    else:
        out.structure = promoted
    return out


def cmd_check_functor(obj, args) -> Outcome:
    from .catobj import CatFunctor

    if not isinstance(obj, CatFunctor):
        raise UsageError("check-functor needs a functor file")
    missing = [name for name, end in (("source", obj.source), ("target", obj.target))
               if not find_quasi_units(end)]
    if missing:
        return Outcome(False, f"{' and '.join(missing)} not quasi-unital",
                       counterexample={"not_quasi_unital": missing})
    direct = is_quasi_unital_functor(obj)
    via_restriction = is_quasi_unital_functor_by_restriction(obj)
    if direct != via_restriction:
        return Outcome(False, "the two quasi-unitality tests disagree",
                       direct=direct, by_restriction=via_restriction)
    u = find_quasi_units(obj.source)[0].carrier
    if direct:
        return Outcome(True, "quasi-unital functor", direct=direct, by_restriction=via_restriction)
    bad = [x for x in u.dom
           if obj.on_morphisms(u(x)) != find_quasi_units(obj.target)[0].carrier(obj.on_objects(x))]
    return Outcome(False, f"quasi-unit not preserved at {bad[0]}", direct=direct,
                   by_restriction=via_restriction, counterexample={"object": bad[0]})


def cmd_to_span_alg(obj, args) -> Outcome:
    a = _presentation(obj)
    out = Outcome(True, "translated to a span monoid")
    out.structure = cat_to_span_monoid(a)
    return out


def cmd_from_span_alg(obj, args) -> Outcome:
    if not isinstance(obj, SpanMonoid):
        raise UsageError("from-span-alg needs a span-monoid file")
    out = Outcome(True, "translated to a (semi)category")
    out.structure = span_monoid_to_cat(obj)
    return out


def cmd_check_complete(obj, args) -> Outcome:
    if isinstance(obj, MultiSimplicialObject):
        if args.arity is not None and args.arity != obj.arity:
            raise UsageError(f"file has arity {obj.arity}, not {args.arity}")
        try:
            holds = is_complete_nfold(obj)
        except InvalidStructure as exc:
            return Outcome(False, f"not a quasi-unital n-fold Segal object: {exc}")
        return Outcome(holds, "complete" if holds else "not complete")
    if args.arity not in (None, 1):
        raise UsageError(f"a one-dimensional input has arity 1, not {args.arity}")
    a = _presentation(obj)
    if not find_quasi_units(a):
        return Outcome(False, "not quasi-unital")
    holds = is_complete(a)
    return Outcome(holds, "complete" if holds else "not complete")


def cmd_codiscrete(obj, args) -> Outcome:
    if not isinstance(obj, FinSet):
        raise UsageError("codiscrete needs a finset file")
    out = Outcome(True, f"codiscrete object on {len(obj)} elements")
    out.structure = codiscrete(obj, args.truncation)
    return out


def cmd_restrict(objs, args) -> Outcome:
    f, x = objs
    if not isinstance(f, FinMap):
        raise UsageError("restrict needs a finmap file first")
    if isinstance(x, (SemicatPresentation, CatPresentation)):
        x = algebraic_to_simplicial(x, args.truncation)
    if not isinstance(x, TruncatedSimplicialObject):
        raise UsageError("restrict needs a semicat, cat or simplicial file second")
    try:
        restricted = restrict_along(f, x)
    except InvalidStructure as exc:
        raise UsageError(str(exc)) from exc
    out = Outcome(True, "restricted along the object map")
    out.structure = restricted
    return out


def enumerate_stream(b: UniverseBounds, iso: bool = False, categories: bool = False,
                     sample: Optional[int] = None, exact: bool = False) -> str:
    if sample is not None:
        items = random_semicats(b, sample)
    elif categories:
        items = list(enumerate_categories(b, exact))
    else:
        items = list(enumerate_semicats(b, exact))
    if iso:
        items = iso_classes(items)
    return "".join(dumps_line(a) + "\n" for a in items)


SINGLE_INPUT = {
    "validate": cmd_validate,
    "check-segal": cmd_check_segal,
    "quasi-units": cmd_quasi_units,
    "promote": cmd_promote,
    "check-functor": cmd_check_functor,
    "to-span-alg": cmd_to_span_alg,
    "from-span-alg": cmd_from_span_alg,
    "check-complete": cmd_check_complete,
    "codiscrete": cmd_codiscrete,
}

HELP = {
    "validate": "load a structure file and check its invariants",
    "check-segal": "Segal condition of a (multi)simplicial object, interval diagram or category",
    "quasi-units": "find the quasi-unit of a semicategory, span monoid or 2-fold object",
    "promote": "turn a quasi-unital structure into a unital one",
    "check-functor": "is a semifunctor between quasi-unital semicategories quasi-unital",
    "to-span-alg": "translate a (semi)category into a monoid in spans",
    "from-span-alg": "translate a monoid in spans back into a (semi)category",
    "check-complete": "completeness of a quasi-unital (n-fold) Segal object",
    "codiscrete": "the codiscrete simplicial object on a finite set",
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spanseg", description="Finite checks for category objects, "
                     "quasi-units and monoids in spans.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in HELP.items():
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("-o", "--output", help="write the resulting structure here")
        if name == "check-complete":
            p.add_argument("--arity", type=int, help="expected arity of the input")
        if name == "codiscrete":
            p.add_argument("--truncation", type=int, default=3)
    p = sub.add_parser("restrict", help="restrict along a map into the objects")
    p.add_argument("map_file")
    p.add_argument("file")
    p.add_argument("--truncation", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p = sub.add_parser("enumerate", help="stream every structure within the bounds")
    p.add_argument("--max-objects", type=int, required=True)
    p.add_argument("--max-morphisms", type=int, required=True)
    p.add_argument("--iso-classes", action="store_true", help="one representative per class")
    p.add_argument("--categories", action="store_true", help="categories instead of semicategories")
    p.add_argument("--exact", action="store_true", help="only structures at the bounds")
    p.add_argument("--seed", type=int, help="sample instead of enumerating exhaustively")
    p.add_argument("--count", type=int, default=20, help="sample size with --seed")
    p.add_argument("--json", action="store_true")
    p = sub.add_parser("selftest", help="run the full acceptance sweep")
    p.add_argument("--max-objects", type=int)
    p.add_argument("--max-morphisms", type=int)
    p.add_argument("--only", type=int, action="append", help="run only this criterion")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(outcome: Outcome, args, out) -> None:
    structure_text = dumps(outcome.structure) if outcome.structure is not None else None
    if structure_text is not None and args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(structure_text)
    if args.json:
        report = {"command": args.command, "holds": outcome.holds, "message": outcome.message}
        report.update(outcome.fields)
        if structure_text is not None and not args.output:
            report["result"] = encode(outcome.structure)
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    elif structure_text is not None and not args.output:
        out.write(structure_text)
    else:
        out.write(outcome.message + "\n")


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        err.write(f"spanseg: {exc}\n")
        return MALFORMED
    try:
        if args.command == "enumerate":
            b = UniverseBounds(args.max_objects, args.max_morphisms, seed=args.seed)
            out.write(enumerate_stream(b, iso=args.iso_classes, categories=args.categories,
                                       sample=args.count if args.seed is not None else None,
                                       exact=args.exact))
            return OK
        if args.command == "selftest":
            from . import selftest

            base = selftest.bounds_from_env()
            b = UniverseBounds(args.max_objects if args.max_objects is not None
                               else base.max_objects,
                               args.max_morphisms if args.max_morphisms is not None
                               else base.max_morphisms, seed=base.seed)
            results = selftest.run(b, args.only)
            out.write(selftest.render(results, b, args.json))
            return OK if all(r.passed for r in results) else FAILS
        if args.command == "restrict":
            outcome = cmd_restrict((load(args.map_file), load(args.file)), args)
        else:
            outcome = SINGLE_INPUT[args.command](load(args.file), args)
        _emit(outcome, args, out)
        return outcome.code
    except (StructureFileError, UsageError, ValueError) as exc:
        err.write(f"spanseg: {exc}\n")
        return MALFORMED
    except OSError as exc:
        err.write(f"spanseg: {exc}\n")
        return MALFORMED


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

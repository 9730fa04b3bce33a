"""Self-describing JSON structure files.

Every file is ``{"format_version": "1", "kind": ..., "payload": {...}}``.
Loading validates the payload against the invariants of its type and rejects
unknown fields.  :func:`dumps` is deterministic, so ``dumps(loads(text))``
is a fixed point after one normalization pass.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Iterator

from .catobj import (
    CatFunctor,
    CatPresentation,
    SemicatPresentation,
    TruncatedSimplicialObject,
    semicat_of,
)
from .finset import FinMap, FinSet, InvalidStructure
from .nfold import MultiSimplicialObject
from .spanalg import SpanMonoid
from .spans import SigmaDiagram, Span

FORMAT_VERSION = "1"
KINDS = ("finset", "finmap", "span", "span-monoid", "semicat", "cat", "functor",
         "simplicial", "multisimplicial", "sigma-diagram")


class StructureFileError(ValueError):
    """Malformed structure file: bad JSON, wrong fields or invalid payload."""


def _fields(record: Any, required: Iterable[str], optional: Iterable[str] = (),
            where: str = "record") -> dict:
    if not isinstance(record, dict):
        raise StructureFileError(f"{where} must be an object")
    required, optional = list(required), list(optional)
    unknown = set(record) - set(required) - set(optional)
    if unknown:
        raise StructureFileError(f"unknown field(s) in {where}: {', '.join(sorted(unknown))}")
    missing = [k for k in required if k not in record]
    if missing:
        raise StructureFileError(f"missing field(s) in {where}: {', '.join(missing)}")
    return record


def _labels(value: Any, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise StructureFileError(f"{where} must be a list of strings")
    return tuple(value)


def _finset(value: Any, where: str) -> FinSet:
    return FinSet(_labels(value, where))


def _index(value: Any, where: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise StructureFileError(f"{where} must be a list of integers")
    return tuple(value)


# -- encoding ---------------------------------------------------------------------

def _enc_finmap(m: FinMap) -> dict:
    return {"dom": list(m.dom.elements), "cod": list(m.cod.elements), "images": list(m.images)}


def _enc_semicat(s: SemicatPresentation) -> dict:
    return {"objects": list(s.objects.elements),
            "morphisms": [[m, s.src(m), s.tgt(m)] for m in s.morphisms],
            "composition": [[g, f, s.comp[(g, f)]] for g, f in s.composable_pairs()]}


def _enc_presentation(a) -> dict:
    if isinstance(a, CatPresentation):
        out = _enc_semicat(a.underlying)
        out["identities"] = [[x, a.identity(x)] for x in a.objects]
        return {"kind": "cat", "payload": out}
    return {"kind": "semicat", "payload": _enc_semicat(a)}


def encode(obj) -> dict:
    """The ``{"format_version", "kind", "payload"}`` record for ``obj``."""
    if isinstance(obj, FinSet):
        kind, payload = "finset", {"elements": list(obj.elements)}
    elif isinstance(obj, FinMap):
        kind, payload = "finmap", _enc_finmap(obj)
    elif isinstance(obj, Span):
        kind, payload = "span", {"apex": list(obj.apex.elements),
                                 "source": list(obj.source.elements),
                                 "target": list(obj.target.elements),
                                 "left": list(obj.left.images),
                                 "right": list(obj.right.images)}
    elif isinstance(obj, SpanMonoid):
        pairs, p1, p2 = obj.pairs()
        kind, payload = "span-monoid", {
            "base": list(obj.base.elements),
            "apex": list(obj.apex.elements),
            "left": list(obj.carrier.left.images),
            "right": list(obj.carrier.right.images),
            "mult": [[a, b, c] for a, b, c in zip(p1.images, p2.images, obj.mult.images)],
            "unit": None if obj.unit is None else list(obj.unit.images)}
    elif isinstance(obj, (SemicatPresentation, CatPresentation)):
        record = _enc_presentation(obj)
        kind, payload = record["kind"], record["payload"]
    elif isinstance(obj, CatFunctor):
        kind, payload = "functor", {
            "source": _enc_presentation(obj.source),
            "target": _enc_presentation(obj.target),
            "objects": list(obj.on_objects.images),
            "morphisms": list(obj.on_morphisms.images),
            "unital": obj.unital}
    elif isinstance(obj, TruncatedSimplicialObject):
        kind, payload = "simplicial", {
            "levels": [list(level.elements) for level in obj.levels],
            "faces": [[list(d.images) for d in level] for level in obj.faces],
            "degeneracies": None if obj.degeneracies is None else
            [[list(s.images) for s in level] for level in obj.degeneracies]}
    elif isinstance(obj, MultiSimplicialObject):
        kind, payload = "multisimplicial", {
            "arity": obj.arity,
            "truncation": obj.truncation,
            "unital": list(obj.unital),
            "levels": [{"index": list(i), "elements": list(obj.levels[i].elements)}
                       for i in obj.indices()],
            "faces": [{"axis": a, "index": list(i), "position": p, "images": list(m.images)}
                      for (a, i, p), m in sorted(obj.faces.items())],
            "degeneracies": [{"axis": a, "index": list(i), "position": p,
                              "images": list(m.images)}
                             for (a, i, p), m in sorted(obj.degeneracies.items())]}
    elif isinstance(obj, SigmaDiagram):
        kind, payload = "sigma-diagram", {
            "ambient": obj.ambient,
            "values": [{"interval": list(k), "elements": list(v.elements)}
                       for k, v in sorted(obj.values.items())],
            "arrows": [{"from": list(a), "to": list(b), "images": list(m.images)}
                       for (a, b), m in sorted(obj.arrows.items())]}
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")
    return {"format_version": FORMAT_VERSION, "kind": kind, "payload": payload}


def dumps(obj) -> str:
    return json.dumps(encode(obj), indent=2, ensure_ascii=False) + "\n"


def dumps_line(obj) -> str:
    """One-line form for record streams."""
    return json.dumps(encode(obj), ensure_ascii=False, separators=(",", ":"))


# -- decoding -------------------------------------------------------------------

def _dec_finmap(p: Any, where: str) -> FinMap:
    p = _fields(p, ["dom", "cod", "images"], where=where)
    return FinMap(_finset(p["dom"], f"{where}.dom"), _finset(p["cod"], f"{where}.cod"),
                  _labels(p["images"], f"{where}.images"))


def _triples(value: Any, width: int, where: str) -> list[tuple[str, ...]]:
    if not isinstance(value, list):
        raise StructureFileError(f"{where} must be a list")
    out = []
    for row in value:
        row = _labels(row, where)
        if len(row) != width:
            raise StructureFileError(f"every entry of {where} needs {width} labels")
        out.append(row)
    return out


def _dec_semicat(p: Any, where: str, unital: bool):
    names = ["objects", "morphisms", "composition"] + (["identities"] if unital else [])
    p = _fields(p, names, where=where)
    objects = _finset(p["objects"], f"{where}.objects")
    rows = _triples(p["morphisms"], 3, f"{where}.morphisms")
    morphisms = FinSet(tuple(r[0] for r in rows))
    src = FinMap(morphisms, objects, tuple(r[1] for r in rows))
    tgt = FinMap(morphisms, objects, tuple(r[2] for r in rows))
    comp = {}
    for g, f, h in _triples(p["composition"], 3, f"{where}.composition"):
        if (g, f) in comp:
            raise StructureFileError(f"composite {g}∘{f} given twice")
        comp[(g, f)] = h
    semi = SemicatPresentation(objects, morphisms, src, tgt, comp)
    if not unital:
        return semi
    ident = dict(_triples(p["identities"], 2, f"{where}.identities"))
    return CatPresentation(semi, FinMap.from_dict(objects, morphisms, ident))


def _dec_presentation(record: Any, where: str):
    record = _fields(record, ["kind", "payload"], where=where)
    if record["kind"] not in ("semicat", "cat"):
        raise StructureFileError(f"{where} must be a semicat or cat")
    return _dec_semicat(record["payload"], f"{where}.payload", record["kind"] == "cat")


def decode(record: Any):
    record = _fields(record, ["format_version", "kind", "payload"], where="file")
    if record["format_version"] != FORMAT_VERSION:
        raise StructureFileError(f"unsupported format_version {record['format_version']!r}")
    kind, p = record["kind"], record["payload"]
    if kind not in KINDS:
        raise StructureFileError(f"unknown kind {kind!r}")
    try:
        return _decode_payload(kind, p)
    except InvalidStructure as exc:
        raise StructureFileError(f"invalid {kind}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StructureFileError):
            raise
        raise StructureFileError(f"malformed {kind}: {exc}") from exc


def _decode_payload(kind: str, p: Any):
    if kind == "finset":
        return _finset(_fields(p, ["elements"], where="payload")["elements"], "elements")
    if kind == "finmap":
        return _dec_finmap(p, "payload")
    if kind == "span":
        p = _fields(p, ["apex", "source", "target", "left", "right"], where="payload")
        apex = _finset(p["apex"], "apex")
        return Span(FinMap(apex, _finset(p["source"], "source"), _labels(p["left"], "left")),
                    FinMap(apex, _finset(p["target"], "target"), _labels(p["right"], "right")))
    if kind == "span-monoid":
        p = _fields(p, ["base", "apex", "left", "right", "mult", "unit"], where="payload")
        base, apex = _finset(p["base"], "base"), _finset(p["apex"], "apex")
        carrier = Span(FinMap(apex, base, _labels(p["left"], "left")),
                       FinMap(apex, base, _labels(p["right"], "right")))
        table = {}
        for a, b, c in _triples(p["mult"], 3, "mult"):
            table[(a, b)] = c
        shell = SpanMonoid.unchecked(base, carrier, None)
        pairs, p1, p2 = shell.pairs()
        wanted = list(zip(p1.images, p2.images))
        if set(wanted) != set(table) or len(wanted) != len(p["mult"]):
            raise StructureFileError("mult must list each composable pair exactly once")
        mult = FinMap(pairs, apex, tuple(table[k] for k in wanted))
        unit = None if p["unit"] is None else FinMap(base, apex, _labels(p["unit"], "unit"))
        return SpanMonoid(base, carrier, mult, unit)
    if kind in ("semicat", "cat"):
        return _dec_semicat(p, "payload", kind == "cat")
    if kind == "functor":
        p = _fields(p, ["source", "target", "objects", "morphisms", "unital"], where="payload")
        a = _dec_presentation(p["source"], "source")
        b = _dec_presentation(p["target"], "target")
        sa, sb = semicat_of(a), semicat_of(b)
        if not isinstance(p["unital"], bool):
            raise StructureFileError("unital must be true or false")
        return CatFunctor(a, b, FinMap(sa.objects, sb.objects, _labels(p["objects"], "objects")),
                          FinMap(sa.morphisms, sb.morphisms,
                                 _labels(p["morphisms"], "morphisms")), p["unital"])
    if kind == "simplicial":
        p = _fields(p, ["levels", "faces", "degeneracies"], where="payload")
        if not isinstance(p["levels"], list) or not p["levels"]:
            raise StructureFileError("levels must be a non-empty list")
        levels = tuple(_finset(v, "levels") for v in p["levels"])
        top = len(levels) - 1
        if not isinstance(p["faces"], list) or len(p["faces"]) != top:
            raise StructureFileError("one list of faces per positive level")
        faces = tuple(tuple(FinMap(levels[n + 1], levels[n], _labels(d, "faces"))
                            for d in row) for n, row in enumerate(p["faces"]))
        degens = None
        if p["degeneracies"] is not None:
            if not isinstance(p["degeneracies"], list) or len(p["degeneracies"]) != top:
                raise StructureFileError("one list of degeneracies per level below the top")
            degens = tuple(tuple(FinMap(levels[n], levels[n + 1], _labels(s, "degeneracies"))
                                 for s in row) for n, row in enumerate(p["degeneracies"]))
        return TruncatedSimplicialObject(levels, faces, degens)
    if kind == "multisimplicial":
        p = _fields(p, ["arity", "truncation", "unital", "levels", "faces", "degeneracies"],
                    where="payload")
        levels = {}
        for entry in p["levels"]:
            entry = _fields(entry, ["index", "elements"], where="level")
            levels[_index(entry["index"], "index")] = _finset(entry["elements"], "elements")

        def maps(entries, step):
            out = {}
            for entry in entries:
                entry = _fields(entry, ["axis", "index", "position", "images"], where="map")
                index = _index(entry["index"], "index")
                axis = entry["axis"]
                target = index[:axis] + (index[axis] + step,) + index[axis + 1:]
                if index not in levels or target not in levels:
                    raise StructureFileError(f"map at {index} in axis {axis} leaves the levels")
                out[(axis, index, entry["position"])] = FinMap(
                    levels[index], levels[target], _labels(entry["images"], "images"))
            return out

        unital = p["unital"]
        if not isinstance(unital, list) or not all(isinstance(u, bool) for u in unital):
            raise StructureFileError("unital must be a list of booleans")
        return MultiSimplicialObject(p["arity"], p["truncation"], levels,
                                     maps(p["faces"], -1), maps(p["degeneracies"], 1), unital)
    if kind == "sigma-diagram":
        p = _fields(p, ["ambient", "values", "arrows"], where="payload")
        values = {}
        for entry in p["values"]:
            entry = _fields(entry, ["interval", "elements"], where="value")
            values[_index(entry["interval"], "interval")] = _finset(entry["elements"], "elements")
        arrows = {}
        for entry in p["arrows"]:
            entry = _fields(entry, ["from", "to", "images"], where="arrow")
            a, b = _index(entry["from"], "from"), _index(entry["to"], "to")
            if a not in values or b not in values:
                raise StructureFileError(f"arrow {a}->{b} names an unknown interval")
            arrows[(a, b)] = FinMap(values[a], values[b], _labels(entry["images"], "images"))
        return SigmaDiagram(p["ambient"], values, arrows)
    raise StructureFileError(f"unknown kind {kind!r}")


def loads(text: str):
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"not valid JSON: {exc}") from exc
    return decode(record)


def load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def iter_records(text: str) -> Iterator:
    """Decode a stream of one-line records."""
    for n, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                yield decode(json.loads(line))
            except json.JSONDecodeError as exc:
                raise StructureFileError(f"line {n}: not valid JSON: {exc}") from exc

"""Small named (semi)categories used throughout the tests and examples."""

from __future__ import annotations

from .catobj import CatPresentation, SemicatPresentation, presentation_from_tables


def terminal_category() -> CatPresentation:
    return presentation_from_tables(["*"], {"e": ("*", "*")}, {("e", "e"): "e"}, {"*": "e"})


def terminal_semicategory() -> SemicatPresentation:
    """One object, one idempotent morphism, no declared identity."""
    return presentation_from_tables(["*"], {"e": ("*", "*")}, {("e", "e"): "e"})


def walking_arrow() -> CatPresentation:
    return presentation_from_tables(
        ["0", "1"],
        {"id0": ("0", "0"), "f": ("0", "1"), "id1": ("1", "1")},
        {("id0", "id0"): "id0", ("f", "id0"): "f", ("id1", "f"): "f", ("id1", "id1"): "id1"},
        {"0": "id0", "1": "id1"})


def walking_isomorphism() -> CatPresentation:
    mors = {"id0": ("0", "0"), "f": ("0", "1"), "g": ("1", "0"), "id1": ("1", "1")}
    comp = {("id0", "id0"): "id0", ("id1", "id1"): "id1",
            ("f", "id0"): "f", ("id1", "f"): "f", ("g", "id1"): "g", ("id0", "g"): "g",
            ("g", "f"): "id0", ("f", "g"): "id1"}
    return presentation_from_tables(["0", "1"], mors, comp, {"0": "id0", "1": "id1"})


def walking_idempotent() -> CatPresentation:
    """One object with morphisms ``1`` (identity) and ``e`` where ``e∘e = e``."""
    comp = {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"}
    return presentation_from_tables(["*"], {"1": ("*", "*"), "e": ("*", "*")}, comp, {"*": "1"})


def constant_composition() -> SemicatPresentation:
    """One object, morphisms ``f`` and ``g``, every composite equal to ``g``."""
    comp = {(a, b): "g" for a in ("f", "g") for b in ("f", "g")}
    return presentation_from_tables(["*"], {"f": ("*", "*"), "g": ("*", "*")}, comp)


def discrete(n: int) -> CatPresentation:
    obs = [str(k) for k in range(n)]
    return presentation_from_tables(
        obs, {f"id{x}": (x, x) for x in obs}, {(f"id{x}", f"id{x}"): f"id{x}" for x in obs},
        {x: f"id{x}" for x in obs})


def poset_category(elements, leq) -> CatPresentation:
    """The category with one morphism ``a<=b`` whenever ``leq(a, b)``."""
    elements = [str(e) for e in elements]
    name = {}
    mors = {}
    for a in elements:
        for b in elements:
            if leq(a, b):
                label = f"id{a}" if a == b else f"{a}<={b}"
                name[(a, b)] = label
                mors[label] = (a, b)
    comp = {}
    for (a, b), f in name.items():
        for (c, d), g in name.items():
            if b == c:
                comp[(g, f)] = name[(a, d)]
    return presentation_from_tables(elements, mors, comp, {a: name[(a, a)] for a in elements})


def chain(n: int) -> CatPresentation:
    """The ordinal ``[n]`` as a category."""
    return poset_category(range(n + 1), lambda a, b: int(a) <= int(b))


"""JSON encodings with a fixed key order.

Groups are written as literals (``"Z/2+Z/4+Z"``), maps as row-major integer
matrices.  A diagram is ``{"kind", "A", "B", "C", <maps>}`` with keys that do
not apply to the kind left out; an extension is ``{"V", "M", "U", "i", "p"}``.
"""

from __future__ import annotations

import json
from typing import Any

from .diagrams import DiagramMorphism, EtaDiagram, ExtEtaDiagram, MooreDiagram
from .errors import ParseError
from .ext import ExtClass, Extension
from .groups import FgGroup, Homomorphism, parse_group

_MAPS = {
    "eta": (("eta", "A", "C"),),
    "moore": (("phi", "A", "B"), ("psi", "B", "A")),
    "eed": (("eta", "A", "C"), ("chi", "C", "B"), ("psi", "B", "A")),
}
_GROUPS = {"eta": ("A", "C"), "moore": ("A", "B"), "eed": ("A", "B", "C")}


def group_to_json(U: FgGroup) -> str:
    return str(U)


def group_from_json(obj: Any) -> FgGroup:
    if not isinstance(obj, str):
        raise ParseError(f"group literal must be a string, got {obj!r}")
    return parse_group(obj)


def matrix_to_json(f: Homomorphism) -> list[list[int]]:
    return [list(row) for row in f.matrix]


def _matrix(obj: Any, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(obj, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in obj
    ):
        raise ParseError(f"{where}: expected a list of integer rows")
    return tuple(tuple(r) for r in obj)


def hom_from_json(obj: Any, domain: FgGroup, codomain: FgGroup, where: str = "map") -> Homomorphism:
    """Build a homomorphism; shape and well-definedness errors are domain errors."""
    return Homomorphism(domain, codomain, _matrix(obj, where))


def _require(obj: Any, keys) -> None:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")


# -- extensions -------------------------------------------------------------------------


def extension_to_json(E: Extension) -> dict:
    return {"V": str(E.V), "M": str(E.M), "U": str(E.U),
            "i": matrix_to_json(E.i), "p": matrix_to_json(E.p)}


def extension_from_json(obj: Any) -> Extension:
    _require(obj, ("V", "M", "U", "i", "p"))
    V, M, U = (group_from_json(obj[k]) for k in ("V", "M", "U"))
    return Extension(V, M, U, hom_from_json(obj["i"], V, M, "i"), hom_from_json(obj["p"], M, U, "p"))


def ext_class_to_json(c: ExtClass) -> dict:
    return {"U": str(c.U), "V": str(c.V), "cosets": [list(x) for x in c.cosets]}


def ext_class_from_json(obj: Any) -> ExtClass:
    _require(obj, ("U", "V", "cosets"))
    return ExtClass(group_from_json(obj["U"]), group_from_json(obj["V"]), _matrix(obj["cosets"], "cosets"))


# -- diagrams -----------------------------------------------------------------------------


def diagram_to_json(d) -> dict:
    out: dict[str, Any] = {"kind": d.kind}
    for g in _GROUPS[d.kind]:
        out[g] = str(getattr(d, g))
    for name, _, _ in _MAPS[d.kind]:
        out[name] = matrix_to_json(getattr(d, name))
    return out


def diagram_from_json(obj: Any):
    _require(obj, ("kind",))
    kind = obj["kind"]
    if kind not in _MAPS:
        raise ParseError(f"unknown diagram kind {kind!r}")
    _require(obj, _GROUPS[kind] + tuple(n for n, _, _ in _MAPS[kind]))
    groups = {g: group_from_json(obj[g]) for g in _GROUPS[kind]}
    maps = {n: hom_from_json(obj[n], groups[s], groups[t], n) for n, s, t in _MAPS[kind]}
    if kind == "eta":
        return EtaDiagram(groups["A"], groups["C"], maps["eta"])
    if kind == "moore":
        return MooreDiagram(groups["A"], groups["B"], maps["phi"], maps["psi"])
    return ExtEtaDiagram(groups["A"], groups["B"], groups["C"], maps["eta"], maps["chi"], maps["psi"])


def morphism_to_json(m: DiagramMorphism) -> dict:
    out: dict[str, Any] = {"source": diagram_to_json(m.source), "target": diagram_to_json(m.target)}
    for x, k in zip("abc", "fgh"):
        if x in m.source.objects:
            out[k] = matrix_to_json(m.component(x))
    return out


def morphism_from_json(obj: Any) -> DiagramMorphism:
    _require(obj, ("source", "target"))
    s, t = diagram_from_json(obj["source"]), diagram_from_json(obj["target"])
    comps = {}
    for x, k in zip("abc", "fgh"):
        if x in s.objects:
            _require(obj, (k,))
            comps[k] = hom_from_json(obj[k], s.at(x), t.at(x), k)
    return DiagramMorphism(s, t, **comps)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def dumps(obj: Any) -> str:
    """Deterministic single-line JSON: insertion order is kept, separators are fixed."""
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def diagram_display(d) -> str:
    """One-line rendering, e.g. ``Z/4 -[[1]]-> Z/2 -[[1]]-> Z/2 -[[2]]-> Z/4`` for an EED."""
    def arrow(f: Homomorphism) -> str:
        return " -" + json.dumps(matrix_to_json(f), separators=(",", ":")) + "-> "

    if d.kind == "eed":
        return f"{d.B}{arrow(d.psi)}{d.A}{arrow(d.eta)}{d.C}{arrow(d.chi)}{d.B}"
    if d.kind == "moore":
        return f"{d.A}{arrow(d.phi)}{d.B}{arrow(d.psi)}{d.A}"
    return f"{d.A}{arrow(d.eta)}{d.C}"

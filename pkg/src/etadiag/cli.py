"""Command-line front end.

Exit codes: 0 on success, 1 for malformed input (group literals, JSON,
missing files, unknown suite), 2 for domain errors such as a failed relation
or an ill-defined matrix.  ``verify`` also exits with 3 when a suite fails.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path
from typing import Sequence

from . import cj
from . import diagrams as D
from . import duality as Du
from . import ext as X
from . import groups as G
from . import serialize as S
from .errors import EtaDiagError, GroupMismatch, ParseError
from .verify import SUITES, run_verify


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return S.loads(text)


def _emit(args, text: str, obj) -> None:
    print(S.dumps(obj) if args.format == "json" else text)


def _cmd_group(args) -> int:
    U = G.parse_group(args.literal)
    _emit(args, str(U), {"group": str(U), "order": U.order if U.is_finite else None})
    return 0


def _cmd_hom(args) -> int:
    U, V = G.parse_group(args.U), G.parse_group(args.V)
    H = G.hom_group(U, V).group
    _emit(args, str(H), {"U": str(U), "V": str(V), "hom": str(H)})
    return 0


def _cmd_ext(args) -> int:
    U, V = G.parse_group(args.U), G.parse_group(args.V)
    E = X.ext_group(U, V)
    _emit(args, str(E), {"U": str(U), "V": str(V), "ext": str(E)})
    return 0


def _cmd_phi(args) -> int:
    E = S.extension_from_json(_read_json(args.file))
    f = X.phi(E)
    obj = {"domain": str(f.domain), "codomain": str(f.codomain), "matrix": S.matrix_to_json(f),
           "class": S.ext_class_to_json(X.classify(E))}
    _emit(args, f"{f.domain} -{S.dumps(obj['matrix']).replace(' ', '')}-> {f.codomain}", obj)
    return 0


def _cmd_diagram(args) -> int:
    ds = [S.diagram_from_json(_read_json(p)) for p in args.files]
    if args.action == "validate":
        for d in ds:
            D.validate(d)
        _emit(args, "valid", {"valid": True, "count": len(ds)})
    elif args.action == "exact":
        flags = []
        for d in ds:
            if d.kind == "eta":
                raise GroupMismatch("exactness is defined for moore and eed diagrams only")
            D.validate(d)
            flags.append(D.is_exact(d))
        _emit(args, "\n".join(str(f).lower() for f in flags), {"exact": flags})
    else:
        if len(ds) != 2:
            raise ParseError("homset takes exactly two diagram files")
        mg = D.morphism_group(ds[0], ds[1])
        size = mg.group.order if mg.group.is_finite else None
        obj = {"group": str(mg.group), "size": size}
        if args.list:
            obj["morphisms"] = [{k: S.matrix_to_json(v) for k, v in m.components().items()} for m in mg]
        lines = [f"{mg.group} ({size if size is not None else 'infinite'} morphisms)"]
        lines += [S.dumps(m) for m in obj.get("morphisms", [])]
        _emit(args, "\n".join(lines), obj)
    return 0


def _cmd_dual(args) -> int:
    N = S.diagram_from_json(_read_json(args.file))
    if N.kind != "eed":
        raise GroupMismatch("duals are defined for eed diagrams")
    D.validate(N)
    out = Du.j_dual(N) if args.which == "j" else Du.delta_dual_explicit(N)
    obj = S.diagram_to_json(out)
    obj["exact"] = D.is_exact(out)
    _emit(args, S.diagram_display(out) + ("" if obj["exact"] else "  (not exact)"), obj)
    return 0


def _cj_table_text() -> str:
    lines = ["J(x, y)   " + "".join(f"{y:<8}" for y in cj.OBJECTS)]
    for x in cj.OBJECTS:
        lines.append(f"{x:<10}" + "".join(f"{str(cj.cj_hom(x, y)):<8}" for y in cj.OBJECTS))
    lines.append("")
    lines.append("generators: " + ", ".join(f"{n}: {x}->{y}" for (x, y), n in cj.GENERATOR_NAMES.items()))
    lines.append("relations: beta.rho = 0, rho.eta.beta = 2*1_b")
    lines.append("")
    lines.append("gen(y,z) o gen(x,y) = m * gen(x,z):")
    for x, y, z, m in cj.composition_table():
        lines.append(f"  {x} -> {y} -> {z}: {m}")
    return "\n".join(lines)


def _cmd_cj(args) -> int:
    if args.action == "table":
        obj = {
            "hom_groups": {f"{x},{y}": str(cj.cj_hom(x, y)) for x in cj.OBJECTS for y in cj.OBJECTS},
            "composition": [list(t) for t in cj.composition_table()],
        }
        _emit(args, _cj_table_text(), obj)
        return 0
    if args.x not in cj.OBJECTS:
        raise ParseError(f"unknown object {args.x!r}; expected a, b or c")
    F = cj.representable(args.x)
    _emit(args, S.diagram_display(F), S.diagram_to_json(F))
    return 0


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise ParseError(f"unknown suite {args.suite!r}; choose from {', '.join([*SUITES, 'all'])}")
    report = run_verify(args.suite, args.max_order, args.seed)
    _emit(args, report.to_text(), report.to_json(timing=args.timing))
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="etadiag", description="Exact computations with eta-diagrams.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="normalize a group literal")
    g.add_argument("op", choices=("normalize",))
    g.add_argument("literal")
    g.set_defaults(run=_cmd_group)

    for name, fn, help_ in (("hom", _cmd_hom, "the group Hom(U, V)"), ("ext", _cmd_ext, "the group Ext(U, V)")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("U")
        s.add_argument("V")
        s.set_defaults(run=fn)

    s = sub.add_parser("phi", help="Phi of an extension given as JSON")
    s.add_argument("file")
    s.set_defaults(run=_cmd_phi)

    s = sub.add_parser("diagram", help="validate, test exactness or list morphisms")
    s.add_argument("action", choices=("validate", "exact", "homset"))
    s.add_argument("files", nargs="+")
    s.add_argument("--list", action="store_true", help="homset: also print every morphism")
    s.set_defaults(run=_cmd_diagram)

    s = sub.add_parser("dual", help="the J or Delta dual of an EED")
    s.add_argument("which", choices=("j", "delta"))
    s.add_argument("file")
    s.set_defaults(run=_cmd_dual)

    s = sub.add_parser("cj", help="tables of the category J")
    s.add_argument("action", choices=("table", "representable"))
    s.add_argument("x", nargs="?", default="b")
    s.set_defaults(run=_cmd_cj)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite")
    s.add_argument("--max-order", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timing", action="store_true", help="include the duration in JSON output")
    s.set_defaults(run=_cmd_verify)
    return p


def _normalize_argv(argv: list[str]) -> list[str]:
    # accept --format anywhere on the line, not only before the subcommand
    out, fmt = [], []
    it = iter(argv)
    for a in it:
        if a == "--format":
            fmt = ["--format", next(it, "")]
        elif a.startswith("--format="):
            fmt = ["--format", a.split("=", 1)[1]]
        else:
            out.append(a)
    return fmt + out


def main(argv: Sequence[str] | None = None) -> int:
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return 0 if exc.code == 0 else 1
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except EtaDiagError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def run_query(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command in-process and return ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails
(the report is still written), 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import catalog, io
from .affine import Embedding, check_morphism, injectivity_rank, t_bijective
from .lie import (JacobiError, LieAlgebra, RequiresInstantiationError, ad_matrix, derived_series,
                  jacobi_defects, lower_central_series, nilpotency_class)
from .matrix import (DimensionError, MatrixError, PolyMatrix, UnsupportedInputError, char_poly, determinant,
                     element_type, is_nilpotent, jordan_chevalley, minimal_polynomial)
from .poly import PolyError
from .structures import (PlasStructure, StructureError, completeness_report, induce_plas, left_mult,
                         right_mult, shift_nilpotency_locus, shifted_right, verify_plas)
from . import qlinalg

VERBS = ("check-algebra", "verify-embedding", "induce", "verify-plas", "complete", "charpoly", "jordan", "catalog")
CRITERIA = {
    "right": "R nilpotent",
    "left": "L nilpotent",
    "right-shifted": "R − ½ad nilpotent",
    "unit-shift-det": "det(I + R − ½ad) = 1",
}


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    input: str | None = None
    checks: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    text_skip: set = field(default_factory=set)

    def check(self, name: str, value: bool) -> bool:
        self.checks.append({"name": name, "value": bool(value)})
        return bool(value)

    @property
    def ok(self) -> bool:
        return all(c["value"] for c in self.checks)

    def as_dict(self) -> dict:
        return {"command": self.command, "input": self.input, "ok": self.ok, "checks": self.checks,
                "details": self.details, "warnings": self.warnings}

    def as_text(self) -> str:
        lines = [f"{self.command}: {self.input}" if self.input else self.command]
        for c in self.checks:
            lines.append(f"{c['name']}: {'true' if c['value'] else 'false'}")
        for k, v in self.details.items():
            if k in self.text_skip:
                continue
            lines.append(_text_detail(k, v))
        lines += [f"warning: {w}" for w in self.warnings]
        lines.append(f"verdict: {'pass' if self.ok else 'fail'}")
        return "\n".join(lines)


def _text_detail(key: str, value: Any) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list) and all(isinstance(c, str) for c in value[0]):
        width = max(len(c) for r in value for c in r)
        body = "\n".join("  [ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in value)
        return f"{key}:\n{body}"
    if isinstance(value, str) and "\n" in value:
        return f"{key}:\n{value}"
    if isinstance(value, (dict, list)):
        return f"{key}: {json.dumps(value, ensure_ascii=False)}"
    return f"{key}: {value}"


def report_schema() -> dict:
    from importlib import resources
    return json.loads(resources.files("postlie").joinpath("data/report.schema.json").read_text())


# -- helpers --------------------------------------------------------------------

def _params(items: Sequence[str]) -> dict[str, Fraction]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--param expects name=value, got {item!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--param {name}: {value!r} is not a rational number") from None
    return out


def _load(path: str) -> tuple[str, Any]:
    if not Path(path).exists() and not path.endswith(".json"):
        return "algebra", io.bundled_algebra(path)
    doc = io.read_json(path)
    return io.sniff(doc), doc


def _instantiate_plas(p: PlasStructure, vals: dict) -> PlasStructure:
    vals = {k: v for k, v in vals.items() if k in p.ctx}
    if not vals:
        return p
    prod = [[tuple(c.subs(vals) for c in v) for v in row] for row in p.product]
    return PlasStructure(p.g.instantiate(vals), p.h.instantiate(vals), prod)


def _plas_from(kind: str, doc, vals, report: Report) -> PlasStructure:
    if kind == "plas":
        return _instantiate_plas(io.plas_from_dict(doc), vals)
    if kind == "embedding":
        e = io.embedding_from_dict(doc)
        if vals:
            e = e.instantiate(vals)
        rep = check_morphism(e)
        if not report.check("embedding is a morphism", rep.ok):
            report.details["morphism_defect"] = rep.describe()
            raise _MathFailure()
        return induce_plas(e)
    raise io.InputError(f"expected a PLAS or embedding file, got {kind}")


class _MathFailure(Exception):
    pass


def _unused(vals: dict, ctx_names, report: Report) -> None:
    extra = sorted(set(vals) - set(ctx_names))
    if extra:
        report.warnings.append(f"parameters not used by this input: {extra}")


# -- verbs ----------------------------------------------------------------------

def cmd_check_algebra(args, report: Report) -> None:
    kind, doc = _load(args.input)
    if kind != "algebra":
        raise io.InputError(f"expected an algebra file, got {kind}")
    alg = io.load_algebra(doc, check=False)
    vals = _params(args.param)
    _unused(vals, alg.params, report)
    report.details["name"] = alg.name
    report.details["dim"] = alg.dim
    bad = jacobi_defects(alg)
    report.check("Jacobi identity", not bad)
    if bad:
        (i, j, k), vec = bad[0]
        report.details["jacobi_witness"] = f"(e{i + 1}, e{j + 1}, e{k + 1}) -> {[str(c) for c in vec]}"
        return
    inst = alg.instantiate(vals)
    if inst.is_constant():
        report.details["lower_central_series"] = lower_central_series(inst)
        report.details["derived_series"] = derived_series(inst)
        report.details["nilpotency_class"] = nilpotency_class(inst)
    else:
        report.warnings.append(f"series need values for {list(inst.params)} (use --param)")


def cmd_verify_embedding(args, report: Report) -> None:
    kind, doc = _load(args.input)
    if kind != "embedding":
        raise io.InputError(f"expected an embedding file, got {kind}")
    e = io.embedding_from_dict(doc)
    vals = _params(args.param)
    _unused(vals, e.ctx.names, report)
    mr = check_morphism(e)
    report.check("morphism", mr.ok)
    if not mr.ok:
        report.details["morphism_defect"] = mr.describe()
    tb = t_bijective(e, vals)
    report.details["det_t"] = str(tb.det)
    if tb.bijective is None:
        report.warnings.append("det t depends on parameters; pass --param to decide bijectivity")
    else:
        report.check("t bijective", tb.bijective)
    if not [p for p in e.ctx.names if p in e.source.params and p not in vals]:
        report.details["injectivity_rank"] = injectivity_rank(e, vals)


def cmd_induce(args, report: Report) -> dict | None:
    kind, doc = _load(args.input)
    if kind != "embedding":
        raise io.InputError(f"expected an embedding file, got {kind}")
    e = io.embedding_from_dict(doc)
    vals = _params(args.param)
    if vals:
        e = e.instantiate(vals)
    mr = check_morphism(e)
    if not report.check("morphism", mr.ok):
        report.details["morphism_defect"] = mr.describe()
        return None
    tb = t_bijective(e)
    if not report.check("t invertible", bool(tb.bijective)):
        report.details["det_t"] = str(tb.det)
        return None
    p = induce_plas(e)
    report.check("PLAS axioms", verify_plas(p).ok)
    report.details["L_x"] = left_mult(p, p.h.generic("x")).to_strings()
    report.details["R_y"] = right_mult(p, p.h.generic("y")).to_strings()
    plas_doc = io.plas_to_dict(p)
    report.details["plas"] = plas_doc
    report.text_skip.add("plas")
    return plas_doc


def cmd_verify_plas(args, report: Report) -> None:
    kind, doc = _load(args.input)
    vals = _params(args.param)
    p = _plas_from(kind, doc, vals, report)
    report.check("g satisfies Jacobi", not jacobi_defects(p.g))
    report.check("h satisfies Jacobi", not jacobi_defects(p.h))
    ax = verify_plas(p)
    names = ("axiom 1: g bracket", "axiom 2: L of the g bracket", "axiom 3: L_x derivation of h")
    for ok, name in zip(ax.axioms, names):
        report.check(name, ok)
    if ax.witnesses:
        report.details["witnesses"] = list(ax.witnesses)


def cmd_complete(args, report: Report) -> None:
    kind, doc = _load(args.input)
    vals = _params(args.param)
    p = _plas_from(kind, doc, vals, report)
    cr = completeness_report(p, vals)
    crit = args.criterion
    value = {"right": cr.right_nilpotent, "left": cr.left_nilpotent,
             "right-shifted": cr.shifted_nilpotent, "unit-shift-det": cr.unit_shift_complete}[crit]
    report.check(CRITERIA[crit], value)
    report.details["criterion"] = crit
    report.details["h_nilpotency_class"] = cr.h_class
    if crit == "unit-shift-det":
        report.details["det(I + R - 1/2 ad)"] = str(cr.unit_shift_det)
    if crit in ("right-shifted", "unit-shift-det"):
        report.details["R - 1/2 ad"] = shifted_right(p).to_strings()
        if cr.caveat:
            report.warnings.append(cr.caveat)
        try:
            locus = shift_nilpotency_locus(p, vals)
            report.details["shift_locus"] = locus.describe()
        except (StructureError, RequiresInstantiationError) as exc:
            report.warnings.append(f"shift locus not computed: {exc}")


def _map_matrix(p: PlasStructure, which: str) -> PolyMatrix:
    if which == "left":
        return left_mult(p, p.h.generic("x"))
    if which == "right":
        return right_mult(p, p.h.generic("y"))
    if which == "shifted":
        return shifted_right(p)
    return ad_matrix(p.h, p.h.generic("y"))


def cmd_charpoly(args, report: Report) -> None:
    kind, doc = _load(args.input)
    vals = _params(args.param)
    if kind == "matrix":
        m = io.matrix_from_json(doc)
        m = m.subs({k: v for k, v in vals.items() if k in m.ctx})
        report.details["map"] = "matrix"
    else:
        p = _plas_from(kind, doc, vals, report)
        m = _map_matrix(p, args.map)
        report.details["map"] = args.map
    if not m.is_square():
        raise DimensionError(f"matrix is {m.rows} x {m.cols}, not square")
    cp = char_poly(m)
    report.details["matrix"] = m.to_strings()
    report.details["charpoly"] = cp.format()
    report.details["nilpotent"] = is_nilpotent(m)


def cmd_jordan(args, report: Report) -> None:
    kind, doc = _load(args.input)
    if kind != "matrix":
        raise io.InputError(f"expected a matrix file, got {kind}")
    m = io.matrix_from_json(doc)
    vals = _params(args.param)
    m = m.subs({k: v for k, v in vals.items() if k in m.ctx})
    jp = jordan_chevalley(m)
    S, N = jp.semisimple, jp.nilpotent
    report.details["S"] = S.to_strings()
    report.details["N"] = N.to_strings()
    report.details["type"] = element_type(m).value
    mp = minimal_polynomial(S.to_rational())
    report.check("S + N = M", S + N == m)
    report.check("SN = NS", S @ N == N @ S)
    report.check("N nilpotent", is_nilpotent(N))
    report.check("S minimal polynomial squarefree", qlinalg.is_squarefree(mp))


def cmd_catalog(args, report: Report) -> None:
    vals = _params(args.param)
    rows = catalog.load_catalog()
    if args.row:
        try:
            rows = [catalog.get_row(rows, r) for r in args.row]
        except KeyError as exc:
            raise UsageError(f"unknown row {exc.args[0]!r}; see `catalog --list`") from None
    if args.list:
        report.details["rows"] = [r.id for r in rows]
        return
    summary = catalog.verify_all(vals, rows)
    for r in summary.reports:
        report.check(f"{r.id} matches", r.ok)
    report.details["counts"] = summary.counts()
    report.details["rows"] = [r.as_dict() for r in summary.reports]
    report.text_skip.add("rows")
    report.details["summary"] = "\n".join(r.describe() for r in summary.reports)
    for r in summary.reports:
        report.warnings += [f"{r.id}: {w}" for w in r.warnings]


HANDLERS = {
    "check-algebra": cmd_check_algebra,
    "verify-embedding": cmd_verify_embedding,
    "induce": cmd_induce,
    "verify-plas": cmd_verify_plas,
    "complete": cmd_complete,
    "charpoly": cmd_charpoly,
    "jordan": cmd_jordan,
    "catalog": cmd_catalog,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                        help="instantiate a parameter (repeatable)")
    common.add_argument("-o", "--output", metavar="FILE", help="write output to FILE")

    ap = _Parser(prog="postlie", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in VERBS:
        sp = sub.add_parser(verb, parents=[common])
        if verb == "catalog":
            sp.add_argument("--row", action="append", default=[], metavar="ID")
            sp.add_argument("--list", action="store_true")
            continue
        sp.add_argument("input", help="JSON input file (or a bundled algebra name for check-algebra)")
        if verb == "complete":
            sp.add_argument("--criterion", choices=tuple(CRITERIA), default="right-shifted")
        if verb == "charpoly":
            sp.add_argument("--map", choices=("left", "right", "shifted", "ad"), default="left")
    return ap


def _emit(text: str, path: str | None, stdout) -> None:
    if path:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")
    else:
        stdout.write(text if text.endswith("\n") else text + "\n")


INPUT_ERRORS = (UsageError, io.InputError, PolyError, DimensionError, UnsupportedInputError,
                RequiresInstantiationError, MatrixError, OSError)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    report = Report(args.verb, getattr(args, "input", None))
    extra_output = None
    try:
        extra_output = HANDLERS[args.verb](args, report)
    except _MathFailure:
        pass
    except JacobiError as exc:
        report.check("Jacobi identity of the inputs", False)
        report.details["error"] = str(exc)
    except StructureError as exc:
        report.check("structure", False)
        report.details["error"] = str(exc)
    except INPUT_ERRORS as exc:
        stderr.write(f"input error: {exc}\n")
        return 2

    out_path = args.output
    if args.verb == "induce" and extra_output is not None and out_path:
        io.write_json(extra_output, out_path)
        out_path = None
    if args.format == "json":
        text = json.dumps(report.as_dict(), indent=2, ensure_ascii=False)
    elif args.verb == "induce" and extra_output is not None and args.output is None:
        text = io.write_json(extra_output)
    else:
        text = report.as_text()
    _emit(text, out_path, stdout)
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Bundled catalog of algebras and embeddings, and the batch verifier."""

from __future__ import annotations

import copy
import json
import operator
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

from . import io
from .affine import Embedding, check_morphism, t_bijective
from .lie import LieAlgebra, nilpotency_class
from .matrix import PolyMatrix, char_poly, is_nilpotent
from .structures import (PlasStructure, completeness_report, complete_2step, induce_plas, left_mult,
                         right_mult, shifted_right, verify_plas)


class CatalogError(Exception):
    pass


_OPS = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge,
        "!=": operator.ne, "==": operator.eq}


@dataclass
class CatalogRow:
    id: str
    g_name: str
    h_name: str
    embedding: Embedding
    expected_L: PolyMatrix
    expected_R: PolyMatrix
    L_symbol: str
    R_symbol: str
    expected_R_nilpotent: bool
    expected_complete: bool
    parameter_domain: str
    constraints: list
    defaults: dict
    provenance: str
    errata: list = field(default_factory=list)
    notes: str = ""

    @property
    def dim(self) -> int:
        return self.embedding.dim

    @property
    def params(self) -> tuple[str, ...]:
        return self.embedding.source.params

    @property
    def table(self) -> str:
        return self.id.split(".", 1)[0]

    def domain_violations(self, values: Mapping[str, Fraction]) -> list[str]:
        out = []
        for name, op, bound in self.constraints:
            if name in values and not _OPS[op](Fraction(values[name]), Fraction(bound)):
                out.append(f"{name} = {values[name]} violates {name} {op} {bound}")
        return out


def _load_raw(path: str | Path | None = None) -> dict:
    if path is None:
        return io.bundled_data()
    return json.loads(Path(path).read_text())


def _check_algebras(data: dict) -> None:
    for name, spec in data["algebras"].items():
        io.validate(spec, io.ALGEBRA_SCHEMA, f"algebra {name}")


def build_row(raw: Mapping, algebras: Mapping[str, dict]) -> CatalogRow:
    emb_doc = dict(raw["embedding"])
    for key in ("g", "h"):
        ref = emb_doc[key]
        if isinstance(ref, str):
            if ref.partition("@")[0] not in algebras:
                raise CatalogError(f"row {raw['id']}: unknown algebra {ref!r}")
            spec = dict(algebras[ref.partition("@")[0]], name=ref)
            if ref.endswith("@printed"):
                spec["brackets"] = spec["printed_brackets"]
            for extra in ("printed_brackets", "erratum", "provenance"):
                spec.pop(extra, None)
            emb_doc[key] = spec
    e = io.embedding_from_dict(emb_doc)
    ctx, n = e.ctx, e.dim
    L = io._matrix(ctx, raw["expected_L"], n, f"{raw['id']}/expected_L")
    R = io._matrix(ctx, raw["expected_R"], n, f"{raw['id']}/expected_R")
    if not raw.get("provenance"):
        raise CatalogError(f"row {raw['id']} has no provenance")
    return CatalogRow(
        id=raw["id"], g_name=raw["embedding"]["g"], h_name=raw["embedding"]["h"], embedding=e,
        expected_L=L, expected_R=R, L_symbol=raw["L_symbol"], R_symbol=raw["R_symbol"],
        expected_R_nilpotent=raw["expected_R_nilpotent"], expected_complete=raw["expected_complete"],
        parameter_domain=raw.get("parameter_domain", ""), constraints=[tuple(c) for c in raw["constraints"]],
        defaults={k: Fraction(v) for k, v in raw["defaults"].items()}, provenance=raw["provenance"],
        errata=list(raw.get("errata", ())), notes=raw.get("notes", ""))


def load_catalog(path: str | Path | None = None) -> list[CatalogRow]:
    data = _load_raw(path)
    _check_algebras(data)
    rows = [build_row(r, data["algebras"]) for r in data["rows"]]
    ids = [r.id for r in rows]
    if len(set(ids)) != len(ids):
        raise CatalogError("duplicate row ids")
    return rows


def raw_rows(path: str | Path | None = None) -> list[dict]:
    return copy.deepcopy(_load_raw(path)["rows"])


def catalog_algebras(path: str | Path | None = None, printed: bool = False) -> dict[str, LieAlgebra]:
    """Every bundled algebra in its own standard context (Jacobi checked on load).

    With ``printed`` the printed variants are returned instead, unchecked."""
    out = {}
    for name, spec in _load_raw(path)["algebras"].items():
        if printed:
            if "printed_brackets" in spec:
                out[name] = io.algebra_from_dict(io.bundled_algebra(f"{name}@printed") if path is None
                                                 else dict(spec, brackets=spec["printed_brackets"]),
                                                 name=name, check=False)
            continue
        clean = {k: v for k, v in spec.items() if k not in ("printed_brackets", "erratum")}
        out[name] = io.algebra_from_dict(clean, name=name)
    return out


def get_row(rows: Iterable[CatalogRow], rid: str) -> CatalogRow:
    for r in rows:
        if r.id == rid:
            return r
    raise KeyError(rid)


def printed_variant(raw: Mapping, algebras: Mapping[str, dict] | None = None) -> CatalogRow:
    """The row as printed: errata undone, algebras replaced by their printed
    brackets.  Raises on input that does not even parse (e.g. empty cells)."""
    algebras = algebras if algebras is not None else io.bundled_data()["algebras"]
    raw = copy.deepcopy(dict(raw))
    for er in raw["errata"]:
        target = raw["embedding"]["D_of_x"] if er["field"] == "D_of_x" else raw[er["field"]]
        target[er["row"] - 1][er["col"] - 1] = er["printed"]
    for key in ("g", "h"):
        name = raw["embedding"][key]
        if "printed_brackets" in algebras.get(name, {}):
            raw["embedding"][key] = f"{name}@printed"
    return build_row(raw, algebras)


def has_printed_deviation(raw: Mapping, algebras: Mapping[str, dict] | None = None) -> bool:
    algebras = algebras if algebras is not None else io.bundled_data()["algebras"]
    return bool(raw["errata"]) or any(
        "printed_brackets" in algebras.get(raw["embedding"][k], {}) for k in ("g", "h"))


# -- verification ------------------------------------------------------------------

@dataclass
class RowReport:
    id: str
    morphism_ok: bool = False
    t_bijective_ok: bool = False
    plas_axioms_ok: tuple = (False, False, False)
    L_matches: bool = False
    R_matches: bool = False
    R_nilpotent_actual: bool | None = None
    complete_actual: bool | None = None
    mismatches: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    errata: list = field(default_factory=list)
    caveat: str | None = None
    shifted_charpoly: str = ""
    expected_R_nilpotent: bool | None = None
    expected_complete: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        d = asdict(self)
        d["plas_axioms_ok"] = list(self.plas_axioms_ok)
        d["ok"] = self.ok
        return d

    def describe(self) -> str:
        ax = "".join("+" if a else "-" for a in self.plas_axioms_ok)
        head = (f"{self.id:22s} morphism={_yn(self.morphism_ok)} t-bij={_yn(self.t_bijective_ok)} "
                f"axioms={ax} L={_yn(self.L_matches)} R={_yn(self.R_matches)} "
                f"R-nil={_yn(self.R_nilpotent_actual)}/{_yn(self.expected_R_nilpotent)} "
                f"complete={_yn(self.complete_actual)}/{_yn(self.expected_complete)} "
                f"{'OK' if self.ok else 'MISMATCH'}")
        lines = [head, "    (R-nil and complete shown as computed/expected)"] if not self.ok else [head]
        lines += [f"    mismatch: {m}" for m in self.mismatches]
        lines += [f"    warning: {w}" for w in self.warnings]
        if self.caveat:
            lines.append(f"    caveat: {self.caveat}")
        if self.errata:
            lines.append(f"    errata: {len(self.errata)} printed entr{'y' if len(self.errata) == 1 else 'ies'} corrected")
        return "\n".join(lines)


def _yn(v) -> str:
    return "?" if v is None else ("yes" if v else "no")


def row_params(row: CatalogRow, overrides: Mapping[str, Fraction] | None = None) -> dict:
    vals = dict(row.defaults)
    for k, v in (overrides or {}).items():
        if k in row.params:
            vals[k] = Fraction(v)
    return vals


def verify_row(row: CatalogRow, params: Mapping[str, Fraction] | None = None) -> RowReport:
    vals = row_params(row, params)
    rep = RowReport(row.id, params={k: str(v) for k, v in sorted(vals.items())},
                    errata=[f"{e['field']}({e['row']},{e['col']}): printed {e['printed']!r}, "
                            f"used {e['corrected']!r}" for e in row.errata],
                    expected_R_nilpotent=row.expected_R_nilpotent,
                    expected_complete=row.expected_complete)
    rep.warnings = row.domain_violations(vals)
    missing = [p for p in row.params if p not in vals]
    if missing:
        rep.warnings.append(f"no value for parameters {missing}; instantiated checks skipped")
    e = row.embedding

    mr = check_morphism(e)
    rep.morphism_ok = mr.ok
    if not mr.ok:
        rep.mismatches.append(mr.describe())
    tb = t_bijective(e, vals)
    rep.t_bijective_ok = bool(tb.bijective)
    if not rep.t_bijective_ok:
        rep.mismatches.append(f"t not bijective: {tb.describe()}")
    if not (rep.morphism_ok and rep.t_bijective_ok):
        return rep
    try:
        p = induce_plas(e)
    except Exception as exc:  # report content, not a crash
        rep.mismatches.append(f"cannot induce PLAS: {exc}")
        return rep

    ax = verify_plas(p)
    rep.plas_axioms_ok = tuple(ax.axioms)
    if not ax.ok:
        rep.mismatches.append(ax.describe())
    L = left_mult(p, p.h.generic(row.L_symbol))
    R = right_mult(p, p.h.generic(row.R_symbol))
    rep.L_matches = L == row.expected_L
    rep.R_matches = R == row.expected_R
    if not rep.L_matches:
        rep.mismatches.append(f"L differs: computed {L.to_strings()}, expected {row.expected_L.to_strings()}")
    if not rep.R_matches:
        rep.mismatches.append(f"R differs: computed {R.to_strings()}, expected {row.expected_R.to_strings()}")

    rep.R_nilpotent_actual = is_nilpotent(R)
    if rep.R_nilpotent_actual != row.expected_R_nilpotent:
        rep.mismatches.append(f"R nilpotent: computed {rep.R_nilpotent_actual}, "
                              f"expected {row.expected_R_nilpotent}")
    rep.complete_actual, rep.caveat = _completeness(p, vals)
    if rep.complete_actual != row.expected_complete:
        rep.mismatches.append(f"complete: computed {rep.complete_actual}, expected {row.expected_complete}")
    rep.shifted_charpoly = char_poly(shifted_right(p)).format()
    return rep


def _completeness(p: PlasStructure, vals) -> tuple[bool, str | None]:
    h = p.h.instantiate(vals)
    cls = nilpotency_class(h) if h.is_constant() else None
    if cls is not None and cls <= 2:
        return complete_2step(p, vals), None
    cr = completeness_report(p, vals)
    return cr.shifted_nilpotent, cr.caveat


@dataclass
class CatalogSummary:
    reports: list[RowReport]

    @property
    def mismatched(self) -> list[str]:
        return [r.id for r in self.reports if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatched

    def counts(self) -> dict:
        return {"rows": len(self.reports), "ok": len(self.reports) - len(self.mismatched),
                "mismatched": len(self.mismatched),
                "with_errata": sum(1 for r in self.reports if r.errata),
                "with_warnings": sum(1 for r in self.reports if r.warnings)}


def verify_all(overrides: Mapping[str, Fraction] | None = None, rows: Iterable[CatalogRow] | None = None
               ) -> CatalogSummary:
    rows = load_catalog() if rows is None else rows
    return CatalogSummary([verify_row(r, overrides) for r in rows])

"""JSON file formats: algebras, embeddings, PLAS products and matrices.

Every reader validates against a JSON schema first and raises
:class:`InputError` (with a location) on anything malformed.  Polynomial
strings use the grammar of :mod:`postlie.poly`.
"""

from __future__ import annotations

import functools
import json
import re
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Sequence

import jsonschema

from .lie import LieAlgebra
from .matrix import PolyMatrix
from .poly import Context, MultiPoly, ParseError, PolyError, standard_context


class InputError(Exception):
    """Malformed or inconsistent input; ``location`` points into the document."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


# -- schemas -------------------------------------------------------------------

_POLY = {"type": "string", "minLength": 1}
_INDEX = {"type": "integer", "minimum": 1}
_SPARSE = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["i", "j", "value"],
        "properties": {
            "i": _INDEX, "j": _INDEX,
            "value": {"type": "array", "items": {
                "type": "object", "required": ["k", "coeff"],
                "properties": {"k": _INDEX, "coeff": _POLY}, "additionalProperties": False}},
        },
        "additionalProperties": False,
    },
}
_MATRIX = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": _POLY}}
_NAME = {"type": "string", "pattern": r"^[a-zA-Z][a-zA-Z0-9_]*$"}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["dim", "brackets"],
    "properties": {
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "params": {"type": "array", "items": _NAME},
        "brackets": _SPARSE,
        "provenance": {"type": "string"},
        "printed_brackets": _SPARSE,
        "erratum": {"type": "string"},
    },
    "additionalProperties": False,
}
_REF = {"oneOf": [{"type": "string"}, ALGEBRA_SCHEMA]}

EMBEDDING_SCHEMA = {
    "type": "object",
    "required": ["g", "h"],
    "properties": {
        "g": _REF, "h": _REF,
        "t": _MATRIX,
        "D": {"type": "array", "items": _MATRIX},
        "t_of_x": {"type": "array", "items": _POLY},
        "D_of_x": _MATRIX,
    },
    "oneOf": [{"required": ["t", "D"]}, {"required": ["t_of_x", "D_of_x"]}],
    "additionalProperties": False,
}

PLAS_SCHEMA = {
    "type": "object",
    "required": ["h", "g", "product"],
    "properties": {
        "h": _REF,
        "g": {"anyOf": [{"const": "induced"}, {"type": "string"}, ALGEBRA_SCHEMA]},
        "product": _SPARSE,
    },
    "additionalProperties": False,
}

MATRIX_SCHEMA = {
    "oneOf": [
        _MATRIX,
        {"type": "object", "required": ["matrix"],
         "properties": {"matrix": _MATRIX, "params": {"type": "array", "items": _NAME}},
         "additionalProperties": False},
    ]
}


def validate(doc: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        loc = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{what} does not match the schema: {exc.message}", loc) from None


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from None


def write_json(doc: Any, path: str | Path | None = None) -> str:
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _parse(ctx: Context, text: str, loc: str) -> MultiPoly:
    try:
        return ctx.parse(text)
    except ParseError as exc:
        raise InputError(f"{exc}", loc) from None
    except PolyError as exc:
        raise InputError(str(exc), loc) from None


# -- bundled algebras ------------------------------------------------------------

@functools.lru_cache(maxsize=1)
def bundled_data() -> dict:
    text = resources.files("postlie").joinpath("data/catalog.json").read_text()
    return json.loads(text)


def bundled_algebra(name: str) -> dict:
    """Raw spec of a bundled algebra; ``name@printed`` selects the printed variant."""
    base, _, variant = name.partition("@")
    specs = bundled_data()["algebras"]
    if base not in specs:
        raise InputError(f"unknown algebra {base!r}; bundled: {', '.join(sorted(specs))}")
    spec = dict(specs[base], name=name)
    if variant:
        if variant != "printed" or "printed_brackets" not in spec:
            raise InputError(f"algebra {base!r} has no variant {variant!r}")
        spec["brackets"] = spec["printed_brackets"]
    spec.pop("printed_brackets", None)
    spec.pop("erratum", None)
    spec.pop("provenance", None)
    return spec


def _resolve(ref, loc: str) -> dict:
    if isinstance(ref, str):
        return bundled_algebra(ref)
    validate(ref, ALGEBRA_SCHEMA, loc)
    return ref


# -- algebras --------------------------------------------------------------------

def _sparse_to_dict(ctx: Context, dim: int, entries, loc: str, antisymmetric: bool) -> dict:
    out: dict = {}
    for n, ent in enumerate(entries):
        i, j = ent["i"] - 1, ent["j"] - 1
        where = f"{loc}/{n}"
        if not (i < dim and j < dim):
            raise InputError(f"index out of range for dimension {dim}", where)
        if antisymmetric and not i < j:
            raise InputError("bracket entries need i < j", where)
        if (i, j) in out:
            raise InputError(f"duplicate entry ({i + 1}, {j + 1})", where)
        vec = [ctx.zero()] * dim
        for m, term in enumerate(ent["value"]):
            k = term["k"] - 1
            if k >= dim:
                raise InputError(f"k = {k + 1} out of range", f"{where}/value/{m}")
            vec[k] = vec[k] + _parse(ctx, term["coeff"], f"{where}/value/{m}/coeff")
        out[(i, j)] = vec
    return out


def algebra_from_dict(doc: Mapping, ctx: Context | None = None, name: str | None = None,
                      check: bool = True) -> LieAlgebra:
    validate(doc, ALGEBRA_SCHEMA, "algebra")
    dim = doc["dim"]
    params = tuple(doc.get("params", ()))
    ctx = ctx or standard_context(dim, params)
    consts = _sparse_to_dict(ctx, dim, doc["brackets"], "brackets", antisymmetric=True)
    return LieAlgebra(name or doc.get("name", "g"), dim, consts, params, ctx, check=check)


def algebra_to_dict(alg: LieAlgebra) -> dict:
    return {"name": alg.name, "dim": alg.dim, "params": list(alg.params),
            "brackets": _vectors_to_sparse(alg.constants)}


def _vectors_to_sparse(table: Mapping[tuple[int, int], Sequence[MultiPoly]]) -> list[dict]:
    out = []
    for (i, j) in sorted(table):
        vec = table[(i, j)]
        value = [{"k": k + 1, "coeff": c.format()} for k, c in enumerate(vec) if c]
        if value:
            out.append({"i": i + 1, "j": j + 1, "value": value})
    return out


def _pair_context(g_spec: dict, h_spec: dict, loc: str) -> tuple[Context, tuple[str, ...]]:
    if g_spec["dim"] != h_spec["dim"]:
        raise InputError(f"dim g = {g_spec['dim']} but dim h = {h_spec['dim']}", loc)
    params = tuple(dict.fromkeys(list(g_spec.get("params", ())) + list(h_spec.get("params", ()))))
    return standard_context(g_spec["dim"], params), params


def load_algebra(path_or_doc, check: bool = True) -> LieAlgebra:
    doc = read_json(path_or_doc) if isinstance(path_or_doc, (str, Path)) else path_or_doc
    if isinstance(doc, str):
        doc = bundled_algebra(doc)
    return algebra_from_dict(doc, check=check)


# -- embeddings ------------------------------------------------------------------

def _matrix(ctx: Context, rows, dim: int, loc: str) -> PolyMatrix:
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise InputError(f"expected a {dim} x {dim} matrix", loc)
    return PolyMatrix(ctx, [[_parse(ctx, c, f"{loc}/{i}/{j}") for j, c in enumerate(r)]
                            for i, r in enumerate(rows)])


def embedding_from_dict(doc: Mapping, check_algebras: bool = True):
    from .affine import AffineError, Embedding

    validate(doc, EMBEDDING_SCHEMA, "embedding")
    g_spec, h_spec = _resolve(doc["g"], "g"), _resolve(doc["h"], "h")
    ctx, _ = _pair_context(g_spec, h_spec, "h")
    g = algebra_from_dict(g_spec, ctx, check=check_algebras)
    h = algebra_from_dict(h_spec, ctx, check=check_algebras)
    n = g.dim
    if "t" in doc:
        t = _matrix(ctx, doc["t"], n, "t")
        if len(doc["D"]) != n:
            raise InputError(f"D must hold {n} matrices", "D")
        D = [_matrix(ctx, m, n, f"D/{i}") for i, m in enumerate(doc["D"])]
        return Embedding(g, h, t, D)
    if len(doc["t_of_x"]) != n:
        raise InputError(f"t_of_x must have {n} entries", "t_of_x")
    t_of_x = [_parse(ctx, c, f"t_of_x/{i}") for i, c in enumerate(doc["t_of_x"])]
    D_of_x = _matrix(ctx, doc["D_of_x"], n, "D_of_x")
    try:
        return Embedding.from_generic(g, h, t_of_x, D_of_x)
    except AffineError as exc:
        raise InputError(str(exc), "t_of_x") from None


def embedding_to_dict(e) -> dict:
    return {
        "g": algebra_to_dict(e.source),
        "h": algebra_to_dict(e.target),
        "t": e.t.to_strings(),
        "D": [d.to_strings() for d in e.D],
    }


def load_embedding(path_or_doc):
    doc = read_json(path_or_doc) if isinstance(path_or_doc, (str, Path)) else path_or_doc
    return embedding_from_dict(doc)


# -- PLAS ------------------------------------------------------------------------

def plas_from_dict(doc: Mapping):
    """Returns a PlasStructure; ``"g": "induced"`` rebuilds g from axiom (1)."""
    from .structures import PlasStructure, bracket_from_product

    validate(doc, PLAS_SCHEMA, "PLAS")
    h_spec = _resolve(doc["h"], "h")
    induced = doc["g"] == "induced"
    g_spec = h_spec if induced else _resolve(doc["g"], "g")
    ctx, _ = _pair_context(g_spec, h_spec, "g")
    h = algebra_from_dict(h_spec, ctx)
    n = h.dim
    table = _sparse_to_dict(ctx, n, doc["product"], "product", antisymmetric=False)
    product = [[table.get((i, j), [ctx.zero()] * n) for j in range(n)] for i in range(n)]
    left = [PolyMatrix.from_columns(ctx, product[i]) for i in range(n)]
    if induced:
        g = bracket_from_product(h, left, name="g")
    else:
        g = algebra_from_dict(g_spec, ctx)
    return PlasStructure(g, h, product)


def plas_to_dict(p, g_inline: bool = True) -> dict:
    table = {}
    for i in range(p.dim):
        for j in range(p.dim):
            table[(i, j)] = p.product[i][j]
    return {
        "h": algebra_to_dict(p.h),
        "g": algebra_to_dict(p.g) if g_inline else "induced",
        "product": _vectors_to_sparse(table),
    }


def load_plas(path_or_doc):
    doc = read_json(path_or_doc) if isinstance(path_or_doc, (str, Path)) else path_or_doc
    return plas_from_dict(doc)


# -- bare matrices ---------------------------------------------------------------

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_STD = re.compile(r"([xyz])(\d+)\Z")


def _symbol_order(name: str):
    m = _STD.match(name)
    return (0, m.group(1), int(m.group(2))) if m else (1, name, 0)


def matrix_from_json(doc) -> PolyMatrix:
    """Matrix file: a row-major array of polynomial strings (optionally wrapped
    as ``{"matrix": ..., "params": [...]}``).  Symbols are collected from the
    entries."""
    validate(doc, MATRIX_SCHEMA, "matrix")
    rows = doc["matrix"] if isinstance(doc, dict) else doc
    if any(len(r) != len(rows[0]) for r in rows):
        raise InputError("ragged rows", "matrix")
    names = {s for r in rows for c in r for s in _IDENT.findall(c)}
    if isinstance(doc, dict):
        names |= set(doc.get("params", ()))
    ctx = Context(sorted(names, key=_symbol_order))
    return PolyMatrix(ctx, [[_parse(ctx, c, f"{i}/{j}") for j, c in enumerate(r)] for i, r in enumerate(rows)])


def matrix_to_json(m: PolyMatrix) -> list[list[str]]:
    return m.to_strings()


def load_matrix(path_or_doc) -> PolyMatrix:
    doc = read_json(path_or_doc) if isinstance(path_or_doc, (str, Path)) else path_or_doc
    return matrix_from_json(doc)


def sniff(doc: Any) -> str:
    """Guess the kind of a parsed document: algebra, embedding, plas or matrix."""
    if isinstance(doc, list):
        return "matrix"
    if isinstance(doc, dict):
        if "matrix" in doc:
            return "matrix"
        if "product" in doc:
            return "plas"
        if "t" in doc or "t_of_x" in doc:
            return "embedding"
        if "brackets" in doc:
            return "algebra"
    raise InputError("cannot tell what kind of document this is")

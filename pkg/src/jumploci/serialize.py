"""JSON codecs.  Every number crosses the interface as an exact string."""

from __future__ import annotations

import ast
import dataclasses
import json
import re
from fractions import Fraction
from typing import Any, Sequence

import jsonschema

from .artin import Graph, LabeledGraph
from .charvar import Character
from .cupdata import CupData
from .errors import InputError
from .exact import Matrix, MultiPoly
from .exact.scalar import QuadNumber, as_scalar, format_scalar, parse_scalar, sqrt
from .subspaces import Subspace, SubspaceArrangement
from .words import Presentation

__all__ = [
    "SCHEMAS",
    "validate",
    "to_jsonable",
    "dumps",
    "scalar_from_json",
    "cup_to_json",
    "cup_from_json",
    "presentation_to_json",
    "presentation_from_json",
    "character_from_json",
    "subspace_to_json",
    "subspace_from_json",
    "arrangement_to_json",
    "arrangement_from_json",
    "graph_to_json",
    "graph_from_json",
    "parse_polynomial",
    "variable_names",
]

_scalar = {"anyOf": [{"type": "string", "minLength": 1}, {"type": "integer"}]}
_vector = {"type": "array", "items": _scalar}
_count = {"type": "integer", "minimum": 0}

SCHEMAS: dict[str, dict] = {
    "presentation": {
        "type": "object",
        "required": ["generators", "relators"],
        "properties": {
            "generators": {"type": "array", "items": {"type": "string", "minLength": 1}},
            "relators": {"type": "array", "items": {"type": "string"}},
        },
    },
    "cup": {
        "type": "object",
        "required": ["n", "m", "mu"],
        "properties": {
            "n": _count,
            "m": _count,
            "mu": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [_count, _count, _vector],
                    "minItems": 3,
                    "maxItems": 3,
                },
            },
        },
    },
    "character": {"type": "object", "required": ["t"], "properties": {"t": _vector}},
    "subspace": {
        "type": "object",
        "properties": {
            "n": _count,
            "basis": {"type": "array", "items": _vector},
            "equations": {"type": "array", "items": _vector},
        },
        "anyOf": [{"required": ["basis"]}, {"required": ["equations"]}],
    },
    "arrangement": {
        "type": "object",
        "required": ["n", "subspaces"],
        "properties": {
            "n": _count,
            "subspaces": {"type": "array", "items": {"type": "array", "items": _vector}},
        },
    },
    "graph": {
        "type": "object",
        "required": ["vertices", "edges"],
        "properties": {
            "vertices": {"type": "array", "items": {"type": "string", "minLength": 1}},
            "edges": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
            },
            "labels": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 2}},
        },
    },
    "polynomials": {
        "type": "object",
        "required": ["polynomials"],
        "properties": {
            "n": _count,
            "variables": {"type": "array", "items": {"type": "string"}},
            "polynomials": {"type": "array", "items": {"type": "string"}},
        },
    },
}


def validate(doc: Any, kind: str, where: str = "") -> None:
    """Validate against a schema; errors name the offending JSON path."""
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as err:
        path = "/".join(str(p) for p in err.absolute_path)
        loc = f"{where}/{path}" if where and path else (where or path or "<root>")
        raise InputError(f"invalid {kind} document at {loc}: {err.message}") from None


def scalar_from_json(x) -> Any:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"numbers must be exact strings or integers, got {x!r}")
    try:
        return as_scalar(x)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise InputError(f"bad scalar {x!r}: {err}") from None


def _vec(xs) -> list:
    return [scalar_from_json(x) for x in xs]


def to_jsonable(obj: Any) -> Any:
    """Recursively convert package values into plain JSON data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (Fraction, QuadNumber)):
        return format_scalar(obj)
    if isinstance(obj, MultiPoly):
        return obj.format(variable_names("t", obj.nvars))
    if isinstance(obj, Subspace):
        return subspace_to_json(obj)
    if isinstance(obj, SubspaceArrangement):
        return arrangement_to_json(obj)
    if isinstance(obj, CupData):
        return cup_to_json(obj)
    if isinstance(obj, Presentation):
        return presentation_to_json(obj)
    if isinstance(obj, Graph):
        return graph_to_json(obj)
    if isinstance(obj, LabeledGraph):
        return graph_to_json(obj.graph, obj.labels)
    if isinstance(obj, Character):
        return {"t": [format_scalar(v) for v in obj.t]}
    if isinstance(obj, Matrix):
        return [to_jsonable(list(r)) for r in obj.rows]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def variable_names(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


# documents


def cup_to_json(c: CupData) -> dict:
    return {
        "n": c.n,
        "m": c.m,
        "mu": [[i, j, [format_scalar(x) for x in v]] for i, j, v in c.mu],
    }


def cup_from_json(doc: dict) -> CupData:
    validate(doc, "cup")
    return CupData(doc["n"], doc["m"], tuple((i, j, tuple(_vec(v))) for i, j, v in doc["mu"]))


def presentation_to_json(p: Presentation) -> dict:
    return {"generators": list(p.generators), "relators": p.relator_strings()}


def presentation_from_json(doc: dict) -> Presentation:
    validate(doc, "presentation")
    return Presentation.from_strings(doc["generators"], doc["relators"])


def character_from_json(doc: dict) -> Character:
    validate(doc, "character")
    return Character(_vec(doc["t"]))


def subspace_to_json(s: Subspace) -> dict:
    return {"n": s.n, "basis": [[format_scalar(x) for x in v] for v in s.basis]}


def subspace_from_json(doc: dict, n: int | None = None) -> Subspace:
    validate(doc, "subspace")
    n = doc.get("n", n)
    if n is None:
        raise InputError("subspace needs an ambient dimension 'n'")
    if "basis" in doc:
        return Subspace(n, [_vec(v) for v in doc["basis"]])
    return Subspace.from_equations(n, [_vec(v) for v in doc["equations"]])


def arrangement_to_json(a: SubspaceArrangement) -> dict:
    return {"n": a.n, "subspaces": [[[format_scalar(x) for x in v] for v in s.basis] for s in a]}


def arrangement_from_json(doc: dict) -> SubspaceArrangement:
    validate(doc, "arrangement")
    return SubspaceArrangement(doc["n"], [Subspace(doc["n"], [_vec(v) for v in s]) for s in doc["subspaces"]])


def graph_to_json(g: Graph, labels: dict | None = None) -> dict:
    out = {"vertices": list(g.vertices), "edges": [list(e) for e in g.edge_names()]}
    if labels:
        out["labels"] = {f"{g.vertices[i]},{g.vertices[j]}": lab for (i, j), lab in labels.items()}
    return out


def graph_from_json(doc: dict) -> LabeledGraph:
    validate(doc, "graph")
    g = Graph(doc["vertices"], doc["edges"])
    labels = {}
    for key, lab in doc.get("labels", {}).items():
        parts = key.split(",")
        if len(parts) != 2 or any(p.strip() not in g._index for p in parts):
            raise InputError(f"label key {key!r} must be 'a,b' for vertices a, b")
        labels[(g.index(parts[0].strip()), g.index(parts[1].strip()))] = lab
    return LabeledGraph(g, labels)


# polynomial strings

_RADICAL = re.compile(r"√\(?\s*(-?\d+)\s*\)?")


def parse_polynomial(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse ``"(t1-1)*(t2-1)"``, ``"x1^2 - 2*x2^2"``, ``"(1+2√2)*t1^-1"``.

    Only ``+ - * /`` (division by constants), ``^`` or ``**`` with integer
    exponents, integer literals, ``√d`` / ``sqrt(d)`` and the given variable
    names are accepted.
    """
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    src = text.replace("−", "-").replace("^", "**")
    src = re.sub(r"(\d|\))\s*√", r"\1*√", src)
    src = _RADICAL.sub(r"sqrt(\1)", src)
    src = re.sub(r"(sqrt\(-?\d+\))\s*(?=[A-Za-z_(])", r"\1*", src)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as err:
        raise InputError(f"malformed polynomial {text!r}: {err.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return MultiPoly.constant(n, node.value)
        if isinstance(node, ast.Name):
            if node.id not in index:
                raise InputError(f"unknown variable {node.id!r} in {text!r}")
            return MultiPoly.var(n, index[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt":
            if len(node.args) != 1:
                raise InputError("sqrt takes one integer argument")
            arg = node.args[0]
            neg = isinstance(arg, ast.UnaryOp) and isinstance(arg.op, ast.USub)
            inner = arg.operand if neg else arg
            if not (isinstance(inner, ast.Constant) and isinstance(inner.value, int)):
                raise InputError("sqrt takes one integer argument")
            try:
                return MultiPoly.constant(n, sqrt(-inner.value if neg else inner.value))
            except ValueError as err:
                raise InputError(str(err)) from None
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if not b.is_constant() or b.is_zero():
                    raise InputError(f"only division by nonzero constants is allowed in {text!r}")
                return a.scale(1 / b.coefficient((0,) * n))
            if isinstance(node.op, ast.Pow):
                if not b.is_constant():
                    raise InputError("exponents must be integers")
                e = b.coefficient((0,) * n)
                if not isinstance(e, Fraction) or e.denominator != 1:
                    raise InputError("exponents must be integers")
                try:
                    return a ** int(e)
                except ValueError as err:
                    raise InputError(str(err)) from None
        raise InputError(f"unsupported syntax in polynomial {text!r}")

    try:
        return ev(tree)
    except ValueError as err:
        if isinstance(err, InputError):
            raise
        raise InputError(f"bad polynomial {text!r}: {err}") from None


def parse_scalar_text(text: str):
    try:
        return parse_scalar(text)
    except ValueError as err:
        raise InputError(str(err)) from None

"""JSON documents accepted and produced by the command line.

Frieze descriptor::

    {"ring": "int" | "laurent", "vars": n, "quiddity": [...], "depth": d}

Cluster problem::

    {"B": [[...]], "tubes": [{"mouth": [[...], ...], "delta": [...]}], "max_depth": d}

Integers may be given as JSON numbers or decimal strings and are always
written back as decimal strings.  Laurent polynomials use
``{"vars": n, "terms": [{"e": [...], "c": "..."}]}`` or the text syntax.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .arith import ZZ, LaurentPolynomial, LaurentRing, MalformedInputError


def load_document(source: str):
    """Read JSON from a file path, or parse it inline when it starts with ``{``."""
    if source.lstrip().startswith("{"):
        text, origin = source, "inline JSON"
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise MalformedInputError(f"cannot read {source}: {exc.strerror}") from None
        origin = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(
            f"{origin}: {exc.msg} at line {exc.lineno}, column {exc.colno}"
        ) from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def parse_int(v, where):
    if isinstance(v, bool):
        raise MalformedInputError("expected an integer", where)
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip())
        except ValueError:
            pass
    raise MalformedInputError(f"expected an integer, got {v!r}", where)


def parse_poly(v, nvars, where):
    if isinstance(v, dict):
        try:
            p = LaurentPolynomial.from_json(v)
        except MalformedInputError as exc:
            raise MalformedInputError(f"{where}: {exc}") from None
        if p.nvars != nvars:
            raise MalformedInputError(f"polynomial has {p.nvars} variables, expected {nvars}", where)
        return p
    if isinstance(v, int) and not isinstance(v, bool):
        return LaurentPolynomial.constant(nvars, v)
    if isinstance(v, str):
        try:
            return LaurentPolynomial.parse(v, nvars)
        except MalformedInputError as exc:
            raise MalformedInputError(f"{where}: {exc}") from None
    raise MalformedInputError(f"expected a polynomial, got {v!r}", where)


def encode(value):
    if isinstance(value, LaurentPolynomial):
        return value.to_json()
    if isinstance(value, int):
        return str(value)
    return str(value)


def _need(obj, key, where):
    if not isinstance(obj, dict):
        raise MalformedInputError("expected a JSON object", where or "document")
    if key not in obj:
        raise MalformedInputError(f"missing key {key!r}", where or "document")
    return obj[key]


@dataclass
class FriezeDescriptor:
    ring: object
    quiddity: list
    depth: int | None = None


def parse_frieze_descriptor(obj) -> FriezeDescriptor:
    kind = _need(obj, "ring", "")
    q = _need(obj, "quiddity", "")
    if not isinstance(q, list) or not q:
        raise MalformedInputError("quiddity must be a nonempty list", "quiddity")
    if kind == "int":
        ring = ZZ
        quiddity = [parse_int(v, f"quiddity[{k}]") for k, v in enumerate(q)]
    elif kind == "laurent":
        n = parse_int(_need(obj, "vars", ""), "vars")
        if n < 0:
            raise MalformedInputError("vars must be nonnegative", "vars")
        ring = LaurentRing(n)
        quiddity = [parse_poly(v, n, f"quiddity[{k}]") for k, v in enumerate(q)]
    else:
        raise MalformedInputError(f"unknown ring {kind!r}", "ring")
    depth = obj.get("depth")
    if depth is not None:
        depth = parse_int(depth, "depth")
        if depth < 1:
            raise MalformedInputError("depth must be positive", "depth")
    return FriezeDescriptor(ring, quiddity, depth)


@dataclass
class TubeInput:
    mouth: list
    delta: tuple
    variables: list | None = None


@dataclass
class ClusterProblem:
    B: list
    tubes: list = field(default_factory=list)
    targets: list = field(default_factory=list)
    max_depth: int | None = None


def _int_vector(v, n, where):
    if not isinstance(v, list) or (n is not None and len(v) != n):
        size = f" of length {n}" if n is not None else ""
        raise MalformedInputError(f"expected an integer list{size}", where)
    return tuple(parse_int(x, f"{where}[{k}]") for k, x in enumerate(v))


def parse_cluster_problem(obj) -> ClusterProblem:
    rows = _need(obj, "B", "")
    if not isinstance(rows, list) or not rows:
        raise MalformedInputError("B must be a nonempty list of rows", "B")
    n = len(rows)
    B = [list(_int_vector(r, n, f"B[{i}]")) for i, r in enumerate(rows)]
    tubes = []
    for t, tube in enumerate(obj.get("tubes", [])):
        where = f"tubes[{t}]"
        mouth_raw = _need(tube, "mouth", where)
        if not isinstance(mouth_raw, list) or not mouth_raw:
            raise MalformedInputError("mouth must be a nonempty list", f"{where}.mouth")
        mouth = [_int_vector(b, n, f"{where}.mouth[{k}]") for k, b in enumerate(mouth_raw)]
        delta = _int_vector(_need(tube, "delta", where), n, f"{where}.delta")
        variables = None
        if "variables" in tube:
            vs = tube["variables"]
            if not isinstance(vs, list) or len(vs) != len(mouth):
                raise MalformedInputError("variables must match the mouth", f"{where}.variables")
            variables = [parse_poly(v, n, f"{where}.variables[{k}]") for k, v in enumerate(vs)]
        tubes.append(TubeInput(mouth, delta, variables))
    targets = [_int_vector(v, n, f"targets[{k}]") for k, v in enumerate(obj.get("targets", []))]
    max_depth = obj.get("max_depth")
    if max_depth is not None:
        max_depth = parse_int(max_depth, "max_depth")
        if max_depth < 0:
            raise MalformedInputError("max_depth must be nonnegative", "max_depth")
    return ClusterProblem(B, tubes, targets, max_depth)

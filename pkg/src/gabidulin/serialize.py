"""JSON file formats.

Field:     {"q": 2, "m": 3, "modulus": [1, 1, 0, 1]}     (digits low to high)
Element:   [v1, ..., vm]                                 (digits low to high)
Code:      {"field": {...}, "n": 3, "k": 2, "g": [[...], ...]}
Word:      {"elements": [[...], ...]}
Result:    {"distance": 1, "messages": [{"coeffs": [...], "codeword": [...]}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

import jsonschema

from .code import GabidulinCode
from .field import FieldCtx, FieldElement
from .linpoly import LinPoly

_DIGITS = {"type": "array", "items": {"type": "integer", "minimum": 0}}

FIELD_SCHEMA = {
    "type": "object",
    "required": ["q", "m", "modulus"],
    "properties": {
        "q": {"type": "integer", "minimum": 2},
        "m": {"type": "integer", "minimum": 1},
        "modulus": _DIGITS,
    },
}

CODE_SCHEMA = {
    "type": "object",
    "required": ["field", "n", "k", "g"],
    "properties": {
        "field": FIELD_SCHEMA,
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "g": {"type": "array", "items": _DIGITS},
    },
}

WORD_SCHEMA = {
    "type": "object",
    "required": ["elements"],
    "properties": {"elements": {"type": "array", "items": _DIGITS}},
}

RESULT_SCHEMA = {
    "type": "object",
    "required": ["distance", "messages"],
    "properties": {
        "distance": {"type": "integer", "minimum": 0},
        "messages": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeffs", "codeword"],
                "properties": {
                    "coeffs": {"type": "array", "items": _DIGITS},
                    "codeword": {"type": "array", "items": _DIGITS},
                },
            },
        },
        "histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
}


def field_to_dict(ctx: FieldCtx) -> dict:
    return {"q": ctx.q, "m": ctx.m, "modulus": list(ctx.modulus)}


def field_from_dict(d: dict, backend: str | None = None) -> FieldCtx:
    jsonschema.validate(d, FIELD_SCHEMA)
    return FieldCtx(d["q"], d["m"], d["modulus"], backend=backend)


def vector_to_list(v: Sequence[FieldElement]) -> list[list[int]]:
    return [x.digits for x in v]


def vector_from_list(ctx: FieldCtx, items: Sequence[Sequence[int]]) -> list[FieldElement]:
    return [ctx.vec_to_elem(list(x)) for x in items]


def code_to_dict(code: GabidulinCode) -> dict:
    return {"field": field_to_dict(code.ctx), "n": code.n, "k": code.k, "g": vector_to_list(code.g)}


def code_from_dict(d: dict, backend: str | None = None) -> GabidulinCode:
    jsonschema.validate(d, CODE_SCHEMA)
    ctx = field_from_dict(d["field"], backend)
    return GabidulinCode(ctx, d["n"], d["k"], tuple(vector_from_list(ctx, d["g"])))


def word_to_dict(v: Sequence[FieldElement]) -> dict:
    return {"elements": vector_to_list(v)}


def word_from_dict(ctx: FieldCtx, d: dict) -> list[FieldElement]:
    jsonschema.validate(d, WORD_SCHEMA)
    return vector_from_list(ctx, d["elements"])


def message_to_list(code: GabidulinCode, f: LinPoly) -> list[list[int]]:
    return [f[i].digits for i in range(code.k)]


def result_to_dict(code: GabidulinCode, result, histogram: bool = False) -> dict:
    """Serialize a decoder or oracle result; both expose distance and entries."""
    out: dict[str, Any] = {
        "distance": result.distance,
        "messages": [
            {"coeffs": message_to_list(code, e.message), "codeword": vector_to_list(e.codeword)}
            for e in sorted(result.entries, key=lambda e: code.message_key(e.message))
        ],
    }
    if histogram:
        out["histogram"] = {str(k): v for k, v in sorted(result.histogram.items())}
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def read_json(path: str | Path) -> Any:
    return json.loads(Path(path).read_text())


def write_json(obj: dict, path: str | Path | None):
    text = dumps(obj)
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)

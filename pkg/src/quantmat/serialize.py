"""JSON element documents.

::

    {"kind": "pbw" | "torus", "m": M, "n": N,
     "terms": [{"exp": [...], "coef": [[k, "p/r"], ...]}, ...]}

Terms are sorted lexicographically by ``exp`` and coefficient entries by
the power of q, so serializing is deterministic.
"""

from __future__ import annotations

import json
from typing import Union

from .pbw import MatElement, Shape
from .scalars import QLaurent, format_rational, parse_rational
from .torus import TorusElement

Element = Union[MatElement, TorusElement]


class DocumentError(ValueError):
    pass


def laurent_to_json(c: QLaurent) -> list:
    return [[k, format_rational(v)] for k, v in c.items()]


def laurent_from_json(data) -> QLaurent:
    if not isinstance(data, list):
        raise DocumentError("coefficient must be a list of [power, rational] pairs")
    terms: dict = {}
    for pair in data:
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)
                and isinstance(pair[1], str)):
            raise DocumentError(f"bad coefficient entry {pair!r}")
        k, text = pair
        if k in terms:
            raise DocumentError(f"repeated power q^{k}")
        try:
            terms[k] = parse_rational(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad rational {text!r}") from exc
    return QLaurent(terms)


def to_document(x: Element) -> dict:
    kind = "pbw" if isinstance(x, MatElement) else "torus"
    return {
        "kind": kind,
        "m": x.shape.m,
        "n": x.shape.n,
        "terms": [{"exp": list(mono), "coef": laurent_to_json(c)} for mono, c in x.items()],
    }


def from_document(doc: dict) -> Element:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("pbw", "torus"):
        raise DocumentError(f"unknown kind {kind!r}")
    try:
        shape = Shape(int(doc["m"]), int(doc["n"]))
        raw = doc["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed document: {exc}") from exc
    terms: dict = {}
    for t in raw:
        exp = t.get("exp") if isinstance(t, dict) else None
        if not isinstance(exp, list) or len(exp) != shape.size or not all(isinstance(e, int) for e in exp):
            raise DocumentError(f"bad exponent vector {exp!r} for shape {shape}")
        if kind == "pbw" and min(exp) < 0:
            raise DocumentError("pbw exponents must be natural numbers")
        key = tuple(exp)
        if key in terms:
            raise DocumentError(f"repeated monomial {exp}")
        terms[key] = laurent_from_json(t.get("coef"))
    cls = MatElement if kind == "pbw" else TorusElement
    return cls(shape, terms)


def dumps(x: Element, **kw) -> str:
    return json.dumps(to_document(x), **kw)


def loads(text: str) -> Element:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_document(doc)

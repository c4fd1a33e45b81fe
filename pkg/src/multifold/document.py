"""Lossless JSON serialization of fold scripts.

Rationals are serialized as ``"p/q"`` strings (plain ``"p"`` when the
denominator is one), never as floats, so a document round-trips to an
identical script.  The document also carries the computed parameter bound,
sheet extents, and step count as convenience metadata.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, cauchy_root_bound, poly_parse, poly_to_text
from .compiler import ALL_KINDS, FoldScript, FoldStep
from .errors import PolyParseError
from .simulator import Extents, paper_extents

DOCUMENT_VERSION = 1

# Parameter fields holding rational values, per step kind.
_RATIONAL_PARAMS = {"unit", "coefficient", "offset"}
_INTEGER_PARAMS = {"index"}


def rational_to_str(value: Fraction) -> str:
    v = Fraction(value)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def rational_from_str(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad rational literal {text!r}: {exc}", 0) from exc


@dataclass(frozen=True)
class FoldScriptDocument:
    version: int
    polynomial: str
    steps: tuple[dict, ...]
    extents: dict
    metadata: dict

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(
            {
                "version": self.version,
                "polynomial": self.polynomial,
                "steps": list(self.steps),
                "extents": self.extents,
                "metadata": self.metadata,
            },
            indent=indent,
        )

    def to_script(self) -> FoldScript:
        source = poly_parse(self.polynomial)
        steps = []
        for raw in self.steps:
            kind = raw["kind"]
            if kind not in ALL_KINDS:
                raise PolyParseError(f"unknown step kind {kind!r}", 0)
            params = {}
            for key, value in raw.get("params", {}).items():
                if key in _RATIONAL_PARAMS:
                    params[key] = rational_from_str(value)
                elif key in _INTEGER_PARAMS:
                    params[key] = int(value)
                else:
                    params[key] = value
            steps.append(FoldStep(kind=kind, params=params))
        return FoldScript(source=source, steps=tuple(steps))


def document_from_script(script: FoldScript, extents: Extents | None = None) -> FoldScriptDocument:
    bound = cauchy_root_bound(script.source)
    ext = extents or paper_extents(script, bound)
    steps = []
    for step in script.steps:
        params = {}
        for key, value in step.params.items():
            if key in _RATIONAL_PARAMS:
                params[key] = rational_to_str(value)
            else:
                params[key] = value
        steps.append({"kind": step.kind, "params": params})
    return FoldScriptDocument(
        version=DOCUMENT_VERSION,
        polynomial=poly_to_text(script.source),
        steps=tuple(steps),
        extents={
            "width": rational_to_str(ext.width),
            "height": rational_to_str(ext.height),
        },
        metadata={
            "bound": rational_to_str(bound),
            "step_count": len(script.steps),
        },
    )


def serialize_script(script: FoldScript) -> str:
    return document_from_script(script).to_json()


def parse_document(text: str) -> FoldScriptDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolyParseError(f"invalid fold-script JSON: {exc.msg}", exc.pos) from exc
    try:
        return FoldScriptDocument(
            version=int(raw["version"]),
            polynomial=raw["polynomial"],
            steps=tuple(raw["steps"]),
            extents=dict(raw.get("extents", {})),
            metadata=dict(raw.get("metadata", {})),
        )
    except (KeyError, TypeError) as exc:
        raise PolyParseError(f"fold-script document missing field: {exc}", 0) from exc


def parse_script(text: str) -> FoldScript:
    return parse_document(text).to_script()

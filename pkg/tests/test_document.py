import json
import random

import pytest

from multifold import PolyParseError, compile, parse_script, poly_parse, serialize_script
from multifold.document import (
    document_from_script,
    parse_document,
    rational_from_str,
    rational_to_str,
)
from fractions import Fraction

from helpers import random_poly


def test_round_trip_simple_script():
    script = compile(poly_parse("x^2 - 2"))
    assert parse_script(serialize_script(script)) == script


def test_round_trip_randomized():
    rng = random.Random(41)
    for _ in range(30):
        script = compile(random_poly(rng, max_degree=8))
        assert parse_script(serialize_script(script)) == script


def test_document_metadata():
    doc = document_from_script(compile(poly_parse("x^2 - 2")))
    assert doc.version == 1
    assert doc.polynomial == "x^2 - 2"
    assert doc.metadata["step_count"] == 8
    assert doc.metadata["bound"] == "3"
    assert set(doc.extents) == {"width", "height"}


def test_rationals_serialize_as_strings_never_floats():
    script = compile(poly_parse("x^2 - 1/3"))
    raw = json.loads(serialize_script(script))
    seed = next(s for s in raw["steps"] if s["kind"] == "seed-pair")
    assert seed["params"]["coefficient"] == "1"
    iteration0 = next(
        s for s in raw["steps"] if s["kind"] == "iteration-step" and s["params"]["index"] == 0
    )
    assert iteration0["params"]["coefficient"] == "-1/3"
    text = serialize_script(script)
    assert ".333" not in text


def test_rational_string_helpers():
    assert rational_to_str(Fraction(3)) == "3"
    assert rational_to_str(Fraction(-1, 2)) == "-1/2"
    assert rational_from_str("-1/2") == Fraction(-1, 2)
    with pytest.raises(PolyParseError):
        rational_from_str("1/0")


def test_parse_document_rejects_bad_json():
    with pytest.raises(PolyParseError):
        parse_document("{not json")


def test_parse_document_rejects_missing_fields():
    with pytest.raises(PolyParseError):
        parse_document(json.dumps({"version": 1}))


def test_parse_document_rejects_unknown_step_kind():
    script = compile(poly_parse("x - 1"))
    raw = json.loads(serialize_script(script))
    raw["steps"][0]["kind"] = "mystery-fold"
    with pytest.raises(PolyParseError):
        parse_document(json.dumps(raw)).to_script()

import json
from fractions import Fraction

import pytest

from orbcoh import catalog
from orbcoh.cyclo import get_field
from orbcoh.errors import ParseError
from orbcoh.serialize import (
    cyc_to_json,
    detect_kind,
    format_rational,
    load_json,
    parse_cyc_entry,
    parse_group_doc,
    parse_rational,
    parse_torus_doc,
)


def test_parse_rational():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 4 / 6 ") == Fraction(2, 3)
    assert parse_rational(5) == Fraction(5)


@pytest.mark.parametrize("bad", ["1//2", "", "a", "1.5", "1/", "/2", "1/0", None, 2.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_rational_round_trip():
    for value in (Fraction(0), Fraction(-3, 7), Fraction(22), Fraction(1, 2)):
        assert parse_rational(format_rational(value)) == value


def test_cyc_entry_round_trip():
    field = get_field(12)
    value = field.element(["1/2", "-2", "0", "7/3"])
    assert parse_cyc_entry(cyc_to_json(value), field, "x") == value


def test_cyc_entry_shorthand_and_errors():
    field = get_field(3)
    assert parse_cyc_entry("5/2", field, "x") == field.from_rational(Fraction(5, 2))
    with pytest.raises(ParseError):
        parse_cyc_entry(["1"], field, "x")  # wrong coordinate count
    with pytest.raises(ParseError):
        parse_cyc_entry({"a": 1}, field, "x")


def test_parse_group_doc_q8():
    g = parse_group_doc(load_json(catalog.path("q8")))
    assert g.order == 8 and g.field.conductor == 4


def test_parse_group_doc_errors():
    with pytest.raises(ParseError):
        parse_group_doc({"dimension": 2, "generators": []})
    with pytest.raises(ParseError):
        parse_group_doc({"conductor": 0, "dimension": 2, "generators": []})
    with pytest.raises(ParseError):
        parse_group_doc({"conductor": 1, "dimension": 2, "generators": [[["1", "0"]]]})
    with pytest.raises(ParseError):
        parse_group_doc(
            {"conductor": 1, "dimension": 1, "generators": [[["1//2"]]]}
        )


def test_parse_torus_doc_errors():
    with pytest.raises(ParseError):
        parse_torus_doc({"dimension": 4})
    with pytest.raises(ParseError):
        parse_torus_doc({"dimension": 2, "generators": [[[1, 0], [0, 1.5]]]})
    with pytest.raises(ParseError):
        parse_torus_doc({"dimension": 2, "generators": [[[1, 0]]]})


def test_detect_kind():
    assert detect_kind(load_json(catalog.path("kummer"))) == "torus"
    assert detect_kind(load_json(catalog.path("s3"))) == "group"


def test_load_json_errors(tmp_path):
    with pytest.raises(ParseError):
        load_json(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_json(str(bad))
    arr = tmp_path / "arr.json"
    arr.write_text("[1, 2]")
    with pytest.raises(ParseError):
        load_json(str(arr))

"""Input file parsing and JSON shaping.

Rationals travel as exact strings "p/q" (denominator 1 may shorten to "p");
cyclotomic numbers as arrays of rational strings in the power basis, with a
bare rational string accepted as shorthand for a rational entry.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cyclo import CycField, CycMatrix, CycNum, get_field
from .errors import ParseError
from .group import FiniteMatrixGroup, generate
from .models import TorusModel

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_rational(text, where: str = "value") -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"{where}: malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_cyc_entry(entry, field: CycField, where: str) -> CycNum:
    if isinstance(entry, (str, int)):
        return field.from_rational(parse_rational(entry, where))
    if isinstance(entry, list):
        if len(entry) != field.degree:
            raise ParseError(
                f"{where}: cyclotomic entry needs {field.degree} coordinates "
                f"for conductor {field.conductor}, got {len(entry)}"
            )
        return field.element([parse_rational(c, f"{where}[{i}]") for i, c in enumerate(entry)])
    raise ParseError(f"{where}: expected a rational string or coordinate array")


def cyc_to_json(value: CycNum) -> list[str]:
    return [format_rational(c) for c in value.coeffs]


def parse_matrix(rows, field: CycField, n: int, where: str) -> CycMatrix:
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{where}: expected {n} rows")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{where}[{i}]: expected {n} entries")
        parsed.append(
            [parse_cyc_entry(e, field, f"{where}[{i}][{j}]") for j, e in enumerate(row)]
        )
    return CycMatrix.from_rows(field, parsed)


def matrix_to_json(m: CycMatrix) -> list:
    return [[cyc_to_json(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}")
    return value


def parse_group_doc(doc: dict, cap: int | None = None, where: str = "group") -> FiniteMatrixGroup:
    conductor = _require(doc, "conductor", int, where)
    if conductor < 1:
        raise ParseError(f"{where}.conductor: must be >= 1")
    n = _require(doc, "dimension", int, where)
    if n < 1:
        raise ParseError(f"{where}.dimension: must be >= 1")
    gens_doc = _require(doc, "generators", list, where)
    field = get_field(conductor)
    gens = [
        parse_matrix(g, field, n, f"{where}.generators[{i}]") for i, g in enumerate(gens_doc)
    ]
    kwargs = {} if cap is None else {"cap": cap}
    return generate(field, n, gens, **kwargs)


def parse_torus_doc(doc: dict, where: str = "torus") -> TorusModel:
    dim = _require(doc, "dimension", int, where)
    gens_doc = _require(doc, "generators", list, where)
    gens = []
    for i, g in enumerate(gens_doc):
        if not isinstance(g, list) or len(g) != dim:
            raise ParseError(f"{where}.generators[{i}]: expected {dim} rows")
        rows = []
        for j, row in enumerate(g):
            if not isinstance(row, list) or len(row) != dim:
                raise ParseError(f"{where}.generators[{i}][{j}]: expected {dim} integers")
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ParseError(f"{where}.generators[{i}][{j}]: entries must be integers")
            rows.append(list(row))
        gens.append(rows)
    return TorusModel(dim, gens)


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return doc


def detect_kind(doc: dict) -> str:
    """torus files carry no conductor; group files always do."""
    return "group" if "conductor" in doc else "torus"

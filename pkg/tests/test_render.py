import json
import re
from fractions import Fraction as F

import jsonschema
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from powersums.exact_poly import Polynomial
from powersums.powersum import faulhaber, power_sum_recurrence
from powersums.render import (
    RECORD_SCHEMA,
    OutputRecord,
    common_denominator,
    parse_record,
    render_latex,
    render_plain,
    render_record,
)

TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
m = sympy.Symbol("m")

rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 15))
polys = st.lists(rationals, max_size=8).map(Polynomial)


def sympy_of(p: Polynomial):
    return sum((sympy.Rational(c.numerator, c.denominator) * m**k for k, c in enumerate(p.coeffs)), sympy.Integer(0))


def parse_plain(text: str):
    return parse_expr(text, local_dict={"m": m}, transformations=TRANSFORMS)


def parse_latex(text: str):
    text = re.sub(r"\\frac\{(-?\d+)\}\{(\d+)\}", r"(\1/\2)", text)
    text = re.sub(r"\^\{(\d+)\}", r"^\1", text)
    return parse_expr(text, local_dict={"m": m}, transformations=TRANSFORMS)


def test_plain_examples():
    assert render_plain(power_sum_recurrence(2).poly) == "(2*m^3 + 3*m^2 + m)/6"
    assert render_plain(power_sum_recurrence(0).poly) == "m"
    assert render_plain(Polynomial()) == "0"
    assert render_plain(Polynomial([F(1, 6), -1, 1]), "x") == "(6*x^2 - 6*x + 1)/6"


def test_latex_examples():
    assert render_latex(power_sum_recurrence(6).poly) == r"\frac{1}{42}(6m^{7} + 21m^{6} + 21m^{5} - 7m^{3} + m)"
    assert render_latex(power_sum_recurrence(0).poly) == "m"
    assert render_latex(Polynomial([0, F(-1, 30), 0, F(1, 3)]), common=False) == r"\frac{1}{3}m^{3} - \frac{1}{30}m"


def test_common_denominator():
    assert common_denominator(power_sum_recurrence(4).poly) == (30, [0, -1, 0, 10, 15, 6])


@given(polys)
def test_plain_and_latex_reparse_to_same_polynomial(p):
    want = sympy_of(p)
    assert sympy.expand(parse_plain(render_plain(p)) - want) == 0
    assert sympy.expand(parse_latex(render_latex(p)) - want) == 0
    assert sympy.expand(parse_latex(render_latex(p, common=False)) - want) == 0


@pytest.mark.parametrize("n", range(0, 12))
def test_power_sum_renderings_reparse(n):
    p = power_sum_recurrence(n).poly
    assert sympy.expand(parse_plain(render_plain(p)) - sympy_of(p)) == 0
    assert sympy.expand(parse_latex(render_latex(p)) - sympy_of(p)) == 0


def test_record_schema_and_round_trip():
    rec = OutputRecord.from_power_sum(faulhaber(4))
    text = render_record(rec)
    jsonschema.validate(json.loads(text), RECORD_SCHEMA)
    back = parse_record(text)
    assert back == rec
    assert render_record(back) == text
    assert [c for c in rec.coefficients] == [0, F(-1, 30), 0, F(1, 3), F(1, 2), F(1, 5)]


@given(polys, st.integers(0, 100))
def test_record_round_trip_property(p, n):
    rec = OutputRecord(n, "recurrence", "x", p.coeffs)
    text = render_record(rec)
    jsonschema.validate(json.loads(text), RECORD_SCHEMA)
    assert parse_record(text) == rec
    assert render_record(parse_record(text)) == text


def test_parse_rejects_unreduced():
    bad = json.dumps({"n": 1, "method": "recurrence", "variable": "m", "coefficients": [{"num": "2", "den": "4"}]})
    with pytest.raises(ValueError):
        parse_record(bad)


def test_schema_rejects_native_numbers():
    doc = {"n": 1, "method": "recurrence", "variable": "m", "coefficients": [{"num": 1, "den": "2"}]}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, RECORD_SCHEMA)

"""Plain-text, LaTeX and JSON renderings of power-sum polynomials."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exact_poly import Polynomial
from .powersum import BERNOULLI, RECURRENCE, PowerSumPoly

__all__ = [
    "OutputRecord",
    "RECORD_SCHEMA",
    "GEN_BOTH_SCHEMA",
    "common_denominator",
    "render_plain",
    "render_latex",
    "render_record",
    "parse_record",
]


def common_denominator(p: Polynomial) -> tuple[int, list[int]]:
    """Return (L, ints) with p = (sum ints[k] x^k) / L and L the lcm of denominators."""
    L = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    return L, [int(c * L) for c in p.coeffs]


def _terms(coeffs, var: str, mul: str, power) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        body = "" if k == 0 else var if k == 1 else power(var, k)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{mul}{body}"
        parts.append((c < 0, text))
    if not parts:
        return "0"
    neg, text = parts[0]
    out = "-" + text if neg else text
    for neg, text in parts[1:]:
        out += (" - " if neg else " + ") + text
    return out


def render_plain(p: Polynomial, var: str = "m") -> str:
    """E.g. ``(2*m^3 + 3*m^2 + m)/6``; descending powers, one shared denominator."""
    L, ints = common_denominator(p)
    body = _terms(ints, var, "*", lambda v, k: f"{v}^{k}")
    return body if L == 1 else f"({body})/{L}"


def _latex_power(v: str, k: int) -> str:
    return f"{v}^{{{k}}}"


def render_latex(p: Polynomial, var: str = "m", common: bool = True) -> str:
    r"""E.g. ``\frac{1}{6}(2m^{3} + 3m^{2} + m)``.

    With ``common=False`` every coefficient is written as its own fraction.
    """
    if common:
        L, ints = common_denominator(p)
        body = _terms(ints, var, "", _latex_power)
        return body if L == 1 else f"\\frac{{1}}{{{L}}}({body})"

    def coeff_text(c: Fraction) -> str:
        return str(c) if c.denominator == 1 else f"\\frac{{{c.numerator}}}{{{c.denominator}}}"

    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        body = "" if k == 0 else var if k == 1 else _latex_power(var, k)
        text = coeff_text(mag) if (not body or mag != 1) else ""
        parts.append((c < 0, text + body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, text in parts[1:]:
        out += (" - " if neg else " + ") + text
    return out


_COEFF_SCHEMA = {
    "type": "object",
    "properties": {
        "num": {"type": "string", "pattern": "^-?(0|[1-9][0-9]*)$"},
        "den": {"type": "string", "pattern": "^[1-9][0-9]*$"},
    },
    "required": ["num", "den"],
    "additionalProperties": False,
}

RECORD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "method": {"enum": [RECURRENCE, BERNOULLI]},
        "variable": {"enum": ["m", "x"]},
        "coefficients": {"type": "array", "items": _COEFF_SCHEMA},
    },
    "required": ["n", "method", "variable", "coefficients"],
    "additionalProperties": False,
}

GEN_BOTH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "equal": {"type": "boolean"},
        "records": {"type": "array", "items": RECORD_SCHEMA, "minItems": 2, "maxItems": 2},
    },
    "required": ["equal", "records"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class OutputRecord:
    n: int
    method: str
    variable: str
    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_power_sum(cls, s: PowerSumPoly, variable: str = "m") -> OutputRecord:
        return cls(s.n, s.method, variable, s.poly.coeffs)

    @property
    def poly(self) -> Polynomial:
        return Polynomial(self.coefficients)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "variable": self.variable,
            "coefficients": [
                {"num": str(c.numerator), "den": str(c.denominator)}
                for c in self.coefficients
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        coeffs = []
        for item in d["coefficients"]:
            num, den = int(item["num"]), int(item["den"])
            c = Fraction(num, den)
            if den <= 0 or c.numerator != num or c.denominator != den:
                raise ValueError(f"coefficient {num}/{den} is not in lowest terms")
            coeffs.append(c)
        return cls(int(d["n"]), d["method"], d["variable"], tuple(coeffs))


def render_record(record: OutputRecord) -> str:
    return json.dumps(record.to_dict(), indent=2)


def parse_record(text: str) -> OutputRecord:
    return OutputRecord.from_dict(json.loads(text))

"""Numeric backends.

Every operation in this package is generic over two interchangeable scalar
backends:

* ``rational`` -- :class:`fractions.Fraction` (arbitrary-precision, exact;
  equality is decidable).  Mandatory for all law-adjudication checks,
  because coefficients such as 1/2 and 1/12 are not exact in binary
  floating point.
* ``float`` -- IEEE double.  Used only for simulation and reporting.

Plain ints count as exact scalars; mixing a Fraction constant into float
arithmetic degrades to float, which is exactly the genericity we rely on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int, float]

RATIONAL = "rational"
FLOAT = "float"
BACKENDS = (RATIONAL, FLOAT)

#: Relative tolerance used for zero tests in orbit classification on the
#: float backend (overridable via the CLI ``--tol`` flag).
EPS_CLASS = 1e-12


class InputFormatError(ValueError):
    """A scalar or point failed to parse; carries position diagnostics."""


def parse_scalar(text: "str | int | float", backend: str = RATIONAL) -> Scalar:
    """Parse one scalar in the requested backend.

    Accepts ints, floats, plain integer strings, ``"n/d"`` fractions and
    decimal strings.  On the rational backend decimal text is read exactly
    (``"0.1"`` becomes 1/10).
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    try:
        if backend == FLOAT:
            return float(Fraction(text) if isinstance(text, str) and "/" in text else text)
        if isinstance(text, float):
            # exact decimal meaning, not the binary expansion
            return Fraction(repr(text))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"cannot parse scalar {text!r}: {exc}") from exc


def format_scalar(value: Scalar) -> str:
    """Canonical text form: ``"3/2"``, ``"-2"``, or the float repr."""
    if isinstance(value, float):
        return repr(value)
    return str(Fraction(value))


def json_scalar(value: Scalar) -> "str | float":
    """JSON form: rationals as strings (exact), floats as numbers."""
    if isinstance(value, float):
        return value
    return str(Fraction(value))


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """a/b; stays rational unless either operand is a float."""
    if isinstance(a, float) or isinstance(b, float):
        return a / b
    return Fraction(a) / Fraction(b)


def is_zero(value: Scalar, tol: float = 0.0, scale: Scalar = 1) -> bool:
    """Zero test; exact unless ``value`` is a float, then relative to ``scale``."""
    if isinstance(value, float):
        return abs(value) <= tol * max(1.0, abs(scale))
    return value == 0


def rel_err(a: Scalar, b: Scalar) -> float:
    """|a - b| / max(1, |a|, |b|)."""
    return abs(float(a) - float(b)) / max(1.0, abs(float(a)), abs(float(b)))

"""Unit-bearing quantities for farm data files.

Every numeric value read from a farm or factor file carries a unit, and all
engine arithmetic happens on :class:`Quantity` objects so that a dose in
``Mg/ha`` can never be added to a diesel volume in ``L/ha`` by accident.

The unit system is deliberately small. Seven physical dimensions cover the
whole domain (mass, volume, area, length, time, energy, currency) and each
dimension has one canonical unit used for storage and formatting:

=========  ==============  ==================
dimension  canonical unit  accepted aliases
=========  ==============  ==================
mass       Mg              kg, g
volume     L               m3
area       ha
length     m               km
time       y
energy     MJ              GJ
currency   EUR
=========  ==============  ==================

``percent`` is accepted as a pseudo-unit: ``27 percent`` parses to the
dimensionless fraction 0.27. Compound units are written with ``/`` and
``·`` (``*`` is accepted as an ASCII alternative for ``·``); every token after
the first ``/`` belongs to the denominator, so ``Mg/ha·y`` means Mg per
hectare and year.

Parsing rescales the value to canonical units immediately ("2 kg/ha" becomes
0.002 Mg/ha), which makes two quantities equal exactly when they describe the
same amount. ``format_quantity(parse_quantity(s))`` always reparses to an
equal quantity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "UnitError",
    "Unit",
    "Quantity",
    "parse_quantity",
    "parse_unit",
    "format_quantity",
    "DIMENSIONLESS",
]


class UnitError(ValueError):
    """Malformed unit/quantity text or an operation mixing dimensions."""


# Dimension order is fixed; it defines the canonical formatting order too.
_DIMS = ("mass", "volume", "area", "length", "time", "energy", "currency")

_CANONICAL = {
    "mass": "Mg",
    "volume": "L",
    "area": "ha",
    "length": "m",
    "time": "y",
    "energy": "MJ",
    "currency": "EUR",
}

# token -> (dimension, scale to the canonical unit); None = dimensionless
_TOKENS = {
    "Mg": ("mass", 1.0),
    "kg": ("mass", 1e-3),
    "g": ("mass", 1e-6),
    "L": ("volume", 1.0),
    "m3": ("volume", 1000.0),
    "ha": ("area", 1.0),
    "m": ("length", 1.0),
    "km": ("length", 1000.0),
    "y": ("time", 1.0),
    "MJ": ("energy", 1.0),
    "GJ": ("energy", 1000.0),
    "EUR": ("currency", 1.0),
    "percent": (None, 0.01),
    "%": (None, 0.01),
    "1": (None, 1.0),
}


@dataclass(frozen=True)
class Unit:
    """Canonical unit: a tuple of integer exponents over the fixed dimensions."""

    exponents: tuple[int, ...]

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Unit") -> "Unit":
        return Unit(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    @property
    def dimensionless(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __str__(self) -> str:
        num = [
            _CANONICAL[d] for d, e in zip(_DIMS, self.exponents) if e > 0 for _ in range(e)
        ]
        den = [
            _CANONICAL[d] for d, e in zip(_DIMS, self.exponents) if e < 0 for _ in range(-e)
        ]
        if not num and not den:
            return ""
        head = "·".join(num) if num else "1"
        if den:
            return head + "/" + "·".join(den)
        return head


DIMENSIONLESS = Unit((0,) * len(_DIMS))


def _base_unit(dim: str) -> Unit:
    return Unit(tuple(1 if d == dim else 0 for d in _DIMS))


_UNIT_TOKEN_RE = re.compile(r"[A-Za-z%][A-Za-z0-9]*|1")
_NUMBER_RE = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")


def parse_unit(text: str) -> tuple[Unit, float]:
    """Parse a unit expression, returning (canonical unit, scale factor).

    The scale factor converts a value expressed in the written unit into the
    canonical one, e.g. ``parse_unit("kg/ha")`` gives scale 0.001.
    """
    unit = DIMENSIONLESS
    scale = 1.0
    sign = 1  # +1 numerator, -1 denominator
    pos = 0
    expect_token = True
    text = text.strip()
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "/":
            if expect_token:
                raise UnitError(f"misplaced '/' in unit {text!r}")
            sign = -1  # everything after the first '/' divides
            expect_token = True
            pos += 1
            continue
        if ch in ("·", "*"):
            if expect_token:
                raise UnitError(f"misplaced separator in unit {text!r}")
            expect_token = True
            pos += 1
            continue
        m = _UNIT_TOKEN_RE.match(text, pos)
        if not m or not expect_token:
            raise UnitError(f"cannot parse unit {text!r} at position {pos}")
        token = m.group(0)
        if token not in _TOKENS:
            raise UnitError(f"unknown unit {token!r} in {text!r}")
        dim, factor = _TOKENS[token]
        if dim is not None:
            base = _base_unit(dim)
            unit = unit * base if sign > 0 else unit / base
        scale *= factor if sign > 0 else 1.0 / factor
        expect_token = False
        pos = m.end()
    if expect_token and text:
        raise UnitError(f"unit expression {text!r} ends with a separator")
    return unit, scale


@dataclass(frozen=True)
class Quantity:
    """A float value bound to a canonical :class:`Unit`.

    Quantities compare equal when both value and unit match after
    normalization, so "2 kg" == "0.002 Mg".
    """

    value: float
    unit: Unit = DIMENSIONLESS

    # ---- arithmetic ---------------------------------------------------- #

    def _require_same(self, other: "Quantity", op: str) -> None:
        if self.unit != other.unit:
            raise UnitError(f"cannot {op} {self.unit or '1'} and {other.unit or '1'}")

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same(other, "add")
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same(other, "subtract")
        return Quantity(self.value - other.value, self.unit)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value * other.value, self.unit * other.unit)
        return Quantity(self.value * other, self.unit)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value / other.value, self.unit / other.unit)
        return Quantity(self.value / other, self.unit)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.unit)

    def __lt__(self, other: "Quantity") -> bool:
        self._require_same(other, "compare")
        return self.value < other.value

    def __le__(self, other: "Quantity") -> bool:
        self._require_same(other, "compare")
        return self.value <= other.value

    # ---- conversion ---------------------------------------------------- #

    def to(self, unit_text: str) -> float:
        """Value expressed in ``unit_text`` (must have the same dimension)."""
        unit, scale = parse_unit(unit_text)
        if unit != self.unit:
            raise UnitError(f"cannot express {self.unit or '1'} in {unit_text!r}")
        return self.value / scale

    def __str__(self) -> str:
        return format_quantity(self)


def parse_quantity(text: str) -> Quantity:
    """Parse a quantity literal: a number followed by an optional unit.

    Raises:
        UnitError: malformed number, unknown unit token, or trailing junk.
    """
    stripped = text.strip()
    m = _NUMBER_RE.match(stripped)
    if not m:
        raise UnitError(f"quantity {text!r} does not start with a number")
    value = float(m.group(0))
    rest = stripped[m.end():].strip()
    if not rest:
        return Quantity(value, DIMENSIONLESS)
    unit, scale = parse_unit(rest)
    return Quantity(value * scale, unit)


def format_quantity(q: Quantity) -> str:
    """Shortest round-trip text for a quantity, in canonical units."""
    if q.unit.dimensionless:
        return repr(q.value)
    return f"{q.value!r} {q.unit}"

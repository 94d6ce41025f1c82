"""Quantity parsing, conversion, arithmetic, and formatting."""

import pytest
from hypothesis import given

from conftest import quantities
from cropgate.units import (DIMENSIONLESS, Quantity, UnitError,
                            format_quantity, parse_quantity, parse_unit)


class TestParseUnit:
    def test_canonical_tokens_have_scale_one(self):
        for token in ("Mg", "L", "ha", "m", "y", "MJ", "EUR"):
            unit, scale = parse_unit(token)
            assert scale == 1.0
            assert str(unit) == token

    @pytest.mark.parametrize("text,scale", [
        ("kg", 1e-3), ("g", 1e-6), ("m3", 1000.0), ("km", 1000.0),
        ("GJ", 1000.0), ("percent", 0.01), ("%", 0.01), ("1", 1.0),
    ])
    def test_alias_scales(self, text, scale):
        assert parse_unit(text)[1] == scale

    def test_slash_puts_rest_into_denominator(self):
        # Mg/ha·y divides by both ha and y
        unit, _ = parse_unit("Mg/ha·y")
        assert str(unit) == "Mg/ha·y"
        per_hay = parse_unit("Mg")[0] / (parse_unit("ha")[0] * parse_unit("y")[0])
        assert unit == per_hay

    def test_star_is_an_ascii_dot(self):
        assert parse_unit("Mg/ha*y") == parse_unit("Mg/ha·y")

    def test_denominator_scale_inverts(self):
        _, scale = parse_unit("EUR/kg")
        assert scale == pytest.approx(1000.0)

    def test_pure_denominator(self):
        unit, _ = parse_unit("1/ha")
        assert str(unit) == "1/ha"

    @pytest.mark.parametrize("bad", ["/ha", "Mg/", "Mg//ha", "Mg ha", "furlong"])
    def test_malformed_units_raise(self, bad):
        with pytest.raises(UnitError):
            parse_unit(bad)


class TestParseQuantity:
    def test_plain_number_is_dimensionless(self):
        q = parse_quantity("42")
        assert q.value == 42.0
        assert q.unit == DIMENSIONLESS

    def test_value_is_rescaled_to_canonical(self):
        assert parse_quantity("2 kg/ha") == parse_quantity("0.002 Mg/ha")

    def test_percent_becomes_fraction(self):
        q = parse_quantity("29.58 percent")
        assert q.unit == DIMENSIONLESS
        assert q.value == pytest.approx(0.2958)

    def test_exponent_notation(self):
        assert parse_quantity("1.5e3 kg").value == pytest.approx(1.5)

    @pytest.mark.parametrize("bad", ["", "Mg", "1..5", "3 parsec"])
    def test_malformed_quantities_raise(self, bad):
        with pytest.raises(UnitError):
            parse_quantity(bad)


class TestConversion:
    def test_to_alias(self):
        assert parse_quantity("1 Mg").to("kg") == pytest.approx(1000.0)
        assert parse_quantity("1 m3").to("L") == pytest.approx(1000.0)
        assert parse_quantity("6000 MJ").to("GJ") == pytest.approx(6.0)

    def test_to_same_dimension_only(self):
        with pytest.raises(UnitError):
            parse_quantity("1 Mg").to("L")

    def test_compound_conversion(self):
        assert parse_quantity("55.39 L/ha").to("L/ha") == pytest.approx(55.39)


class TestArithmetic:
    def test_add_same_unit(self):
        total = parse_quantity("1 Mg") + parse_quantity("500 kg")
        assert total.to("Mg") == pytest.approx(1.5)

    def test_add_mixed_dimensions_raises(self):
        with pytest.raises(UnitError):
            parse_quantity("1 Mg") + parse_quantity("1 L")

    def test_scalar_multiplication(self):
        q = 3 * parse_quantity("2 Mg/ha")
        assert q.to("Mg/ha") == pytest.approx(6.0)

    def test_quantity_division_combines_units(self):
        rate = parse_quantity("10 Mg") / parse_quantity("4 ha")
        assert rate.to("Mg/ha") == pytest.approx(2.5)

    def test_comparison_needs_same_dimension(self):
        assert parse_quantity("2 kg") < parse_quantity("1 Mg")
        with pytest.raises(UnitError):
            _ = parse_quantity("1 Mg") < parse_quantity("1 MJ")

    def test_negation(self):
        assert (-parse_quantity("2 Mg")).value == -2.0


class TestFormatting:
    @pytest.mark.parametrize("text", [
        "0.15 Mg/ha", "165.0 EUR/ha", "29.58 percent", "42", "-8.81 EUR/ha",
        "1.37 Mg/m3", "15000.0 MJ/Mg",
    ])
    def test_examples_reparse_equal(self, text):
        q = parse_quantity(text)
        assert parse_quantity(format_quantity(q)) == q

    @given(quantities())
    def test_round_trip_property(self, q: Quantity):
        # repr round-trips floats exactly, so equality is exact here
        assert parse_quantity(format_quantity(q)) == q

    def test_canonical_text(self):
        assert format_quantity(parse_quantity("2 kg/ha")) == "0.002 Mg/ha"

"""Farm file parsing, model assembly, and validation diagnostics."""

import pytest

from cropgate.farmspec import (Composition, FarmValidationError, LandClass,
                               SeedSource, Timing, build_farm_model,
                               parse_farm_document, parse_product_label)
from cropgate.sections import parse_document


VALID = """
[farm]
name = "test holding"
total_area = 110 ha
cap_aid = 100 EUR/ha
marginal_area = 10 ha
marginal_pair = grass, cereal

[prices]
straw = 40 EUR/Mg
wheat_grain = 170 EUR/Mg
cereal_grain = 150 EUR/Mg

[product.npk]
kind = fertilizer
label = "8-24-8"

[product.weedkiller]
kind = herbicide
active_fraction = 50 percent

[soil.marginal.2013]
depth = 0.30 m
bulk_density = 1.37 Mg/m3
coarse_fraction = 29.58 percent
organic_matter = 0.540 percent
organic_carbon = 0.313 percent

[soil.marginal.2016]
depth = 0.30 m
bulk_density = 1.37 Mg/m3
coarse_fraction = 29.58 percent
organic_matter = 0.677 percent
organic_carbon = 0.393 percent

[crop.wheat]
land_class = non_marginal
area = 100 ha
sowing_dose = 0.2 Mg/ha
seed_source = own
seed_yield = 3.0 Mg/ha
grain_yield = 3.0 Mg/ha
straw_yield = 2.0 Mg/ha
soc_equilibrium = true

[crop.wheat.costs]
seed = 40 EUR/ha
machinery_labor = 150 EUR/ha

[crop.grass]
land_class = marginal
perennial = true
life_span = 4 y
sowing_dose = 0.02 Mg/ha
sowing_timing = establishment
seed_source = external
seed_flow = seed_grass
base_product = npk
base_dose = 0.3 Mg/ha
base_timing = establishment
straw_yield = 5.0 Mg/ha
soc_fixation = 0.7 Mg/ha

[crop.grass.herbicide.weedkiller]
dose = 1 L/ha
timing = establishment

[crop.grass.op.works]
diesel = 30 L/ha
tractor = 0.001 Mg/ha

[crop.grass.costs]
seed = 30 EUR/ha

[crop.cereal]
land_class = marginal
sowing_dose = 0.15 Mg/ha
seed_source = own
seed_yield = 1.5 Mg/ha
grain_yield = 1.5 Mg/ha
straw_yield = 1.0 Mg/ha
soc_equilibrium = true

[crop.cereal.costs]
seed = 30 EUR/ha
"""


class TestProductLabels:
    def test_npk_triplet(self):
        assert parse_product_label("8-24-8") == Composition(0.08, 0.24, 0.08)

    def test_nitrogen_grade(self):
        assert parse_product_label("CAN 27%") == Composition(n=0.27)

    @pytest.mark.parametrize("bad", ["60-60-60", "pure nitrogen", "110%"])
    def test_bad_labels(self, bad):
        with pytest.raises(Exception):
            parse_product_label(bad)


class TestModelAssembly:
    def test_valid_model_builds(self):
        model = parse_farm_document(VALID)
        assert set(model.crops) == {"wheat", "grass", "cereal"}
        assert model.marginal_pair == ("grass", "cereal")
        assert model.total_area_ha == 110.0
        assert model.amortization_horizon_years == 4  # default

    def test_marginal_crops_share_the_marginal_area(self):
        model = parse_farm_document(VALID)
        assert model.crop("grass").area_ha == 10.0
        assert model.crop("cereal").area_ha == 10.0

    def test_prices_resolve_per_crop(self):
        model = parse_farm_document(VALID)
        assert model.crop("wheat").grain_price == 170.0
        assert model.crop("wheat").straw_price == 40.0
        assert model.crop("grass").straw_price == 40.0

    def test_timings_and_sources(self):
        model = parse_farm_document(VALID)
        grass = model.crop("grass")
        assert grass.sowing_timing is Timing.ESTABLISHMENT
        assert grass.seed_source is SeedSource.EXTERNAL
        assert grass.fertilizations[0].timing is Timing.ESTABLISHMENT
        assert grass.herbicides[0].timing is Timing.ESTABLISHMENT
        cereal = model.crop("cereal")
        assert cereal.sowing_timing is Timing.RECURRENT
        assert cereal.land_class is LandClass.MARGINAL

    def test_soil_series_sorted_by_year(self):
        model = parse_farm_document(VALID)
        series = model.soil_series(LandClass.MARGINAL)
        assert [s.year for s in series] == [2013, 2016]


def _errors_of(text: str) -> list[str]:
    with pytest.raises(FarmValidationError) as err:
        parse_farm_document(text)
    return [d.message for d in err.value.report.errors]


class TestValidation:
    def test_unknown_section(self):
        messages = _errors_of(VALID + "\n[weather]\nrain = 1\n")
        assert any("unknown section" in m for m in messages)

    def test_stray_subsection_of_prices(self):
        messages = _errors_of(VALID + "\n[prices.extra]\nx = 1 EUR/Mg\n")
        assert any("unknown section" in m for m in messages)

    def test_area_bookkeeping(self):
        messages = _errors_of(VALID.replace("total_area = 110 ha",
                                            "total_area = 100 ha"))
        assert any("sum to" in m for m in messages)

    def test_marginal_crop_with_own_area(self):
        messages = _errors_of(VALID.replace(
            "[crop.cereal]\nland_class = marginal",
            "[crop.cereal]\nland_class = marginal\narea = 10 ha"))
        assert any("shared marginal_area" in m for m in messages)

    def test_pair_must_be_marginal(self):
        messages = _errors_of(VALID.replace(
            "marginal_pair = grass, cereal", "marginal_pair = grass, wheat"))
        assert any("not a marginal-class crop" in m for m in messages)

    def test_pair_must_be_distinct(self):
        messages = _errors_of(VALID.replace(
            "marginal_pair = grass, cereal", "marginal_pair = grass, grass"))
        assert any("two distinct crops" in m for m in messages)
        assert any("outside the comparison pair" in m for m in messages)

    def test_establishment_on_annual_crop(self):
        messages = _errors_of(VALID.replace(
            "[crop.cereal]\nland_class = marginal\nsowing_dose = 0.15 Mg/ha",
            "[crop.cereal]\nland_class = marginal\n"
            "sowing_dose = 0.15 Mg/ha\nsowing_timing = establishment"))
        assert any("non-perennial" in m for m in messages)

    def test_own_seed_needs_yield(self):
        messages = _errors_of(VALID.replace("seed_yield = 1.5 Mg/ha\n", ""))
        assert any("seed_yield" in m for m in messages)

    def test_external_seed_needs_flow(self):
        messages = _errors_of(VALID.replace("seed_flow = seed_grass\n", ""))
        assert any("seed_flow" in m for m in messages)

    def test_undefined_product(self):
        messages = _errors_of(VALID.replace("base_product = npk",
                                            "base_product = ghost"))
        assert any("undefined product" in m for m in messages)

    def test_product_kind_checked(self):
        messages = _errors_of(VALID.replace("base_product = npk",
                                            "base_product = weedkiller"))
        assert any("not a fertilizer" in m for m in messages)

    def test_missing_price(self):
        messages = _errors_of(VALID.replace("wheat_grain = 170 EUR/Mg\n", ""))
        assert any("no price" in m for m in messages)

    def test_organic_carbon_capped_by_matter(self):
        messages = _errors_of(VALID.replace("organic_carbon = 0.313 percent",
                                            "organic_carbon = 0.9 percent"))
        assert any("organic carbon above" in m for m in messages)

    def test_unknown_key_reported(self):
        messages = _errors_of(VALID.replace("soc_equilibrium = true",
                                            "soc_equilibrium = true\nwings = 2"))
        assert any("unknown key" in m for m in messages)

    def test_all_problems_collected_in_one_pass(self):
        broken = VALID.replace("total_area = 110 ha", "total_area = 99 ha") \
                      .replace("base_product = npk", "base_product = ghost")
        messages = _errors_of(broken)
        assert len(messages) >= 2

    def test_warning_does_not_fail_parse(self):
        # equilibrium plus a fixation figure is contradictory but tolerable
        text = VALID.replace("soc_fixation = 0.7 Mg/ha",
                             "soc_fixation = 0.7 Mg/ha\nsoc_equilibrium = true")
        model = parse_farm_document(text)
        doc = parse_document(text)
        _, report = build_farm_model(doc)
        assert model.crop("grass").soc_equilibrium
        assert any("ignored" in d.message for d in report.warnings)


class TestShippedFarm:
    def test_loads_clean(self, farm_model):
        assert len(farm_model.crops) == 7
        assert farm_model.total_area_ha == 302.0
        assert farm_model.marginal_pair == ("tall_wheatgrass", "rye")
        assert farm_model.cap_aid_eur_ha == 165.0
        assert farm_model.amortization_horizon_years == 4
        assert farm_model.marginal_area_ha == 40.0

    def test_no_warnings_either(self, farm_path):
        with open(farm_path, encoding="utf-8") as handle:
            doc = parse_document(handle.read())
        model, report = build_farm_model(doc)
        assert model is not None
        assert report.ok
        assert report.warnings == []

    def test_compositions(self, farm_model):
        assert farm_model.products["npk_8_24_8"].composition \
            == Composition(0.08, 0.24, 0.08)
        assert farm_model.products["can_27"].composition == Composition(n=0.27)
        assert farm_model.products["d24_acid"].active_fraction == 0.60

    def test_perennial_schedule(self, farm_model):
        twg = farm_model.crop("tall_wheatgrass")
        assert twg.perennial
        assert twg.life_span_years == 4
        assert twg.sowing_timing is Timing.ESTABLISHMENT
        assert twg.seed_source is SeedSource.EXTERNAL
        assert twg.seed_flow == "seed_tall_wheatgrass"
        assert twg.soc_fixation_mg_c_ha == 0.765

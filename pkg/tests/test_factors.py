"""Factor database loading, defaults, and strict vs cut-off lookups."""

import pytest

from cropgate.factors import (DEFAULT_EXHAUST, DEFAULT_GAS_GWP, FactorDB,
                              FactorFileError, MissingFlowError,
                              load_factor_db)


SAMPLE = """
[flow.diesel]
unit = L
gwp100 = 0.6
pe_renewable = 0.75
pe_nonrenewable = 49.3
note = "supply chain only"

[flow.npk]
unit = Mg
gwp100 = 4600
pe_nonrenewable = 36000

[gas.n2o]
gwp100 = 298

[emissions.exhaust]
co2 = 2.64 kg/L

[emissions.grass]
override = 0.0008 Mg/ha

[emissions.cereal]
ef_direct = 0.0125
residue_n = 12 kg/ha
nh3_loss_fraction = 0.1
ef_indirect_nh3 = 0.01
"""


class TestLoading:
    def test_records(self):
        db = load_factor_db(SAMPLE)
        diesel = db.lookup("diesel")
        assert diesel.unit == "L"
        assert diesel.gwp100 == 0.6
        assert diesel.pe_renewable == 0.75
        assert diesel.note == "supply chain only"
        assert db.lookup("npk").pe_renewable == 0.0  # defaults to zero

    def test_gas_defaults_and_overrides(self):
        db = load_factor_db(SAMPLE)
        assert db.gas_gwp("co2") == 1.0
        assert db.gas_gwp("ch4") == 30.5
        assert db.gas_gwp("n2o") == 298.0  # file overrides the default

    def test_fresh_db_has_all_default_gases(self):
        db = FactorDB()
        for gas, gwp in DEFAULT_GAS_GWP.items():
            assert db.gas_gwp(gas) == gwp

    def test_exhaust_factors(self):
        db = load_factor_db(SAMPLE)
        assert db.exhaust.co2_kg_l == 2.64
        assert db.exhaust.ch4_kg_l == 0.0
        assert load_factor_db("[gas.co2]\ngwp100 = 1\n").exhaust \
            == DEFAULT_EXHAUST

    def test_emission_params(self):
        db = load_factor_db(SAMPLE)
        grass = db.n2o_params("grass")
        assert grass.override_mg_ha == 0.0008
        cereal = db.n2o_params("cereal")
        assert cereal.override_mg_ha is None
        assert cereal.ef_direct == 0.0125
        assert cereal.residue_n_kg_ha == 12.0
        unknown = db.n2o_params("nothing")
        assert unknown.ef_direct == 0.01  # tier-1 style default


class TestLookups:
    def test_strict_lookup_raises(self):
        db = load_factor_db(SAMPLE)
        with pytest.raises(MissingFlowError) as err:
            db.lookup("unobtainium")
        assert "unobtainium" in str(err.value)

    def test_cutoff_lookup_returns_zero_record(self):
        db = load_factor_db(SAMPLE)
        record, missing = db.lookup_or_zero("unobtainium")
        assert missing
        assert record.gwp100 == 0.0
        assert record.pe_renewable == 0.0
        record, missing = db.lookup_or_zero("diesel")
        assert not missing


class TestProblems:
    @pytest.mark.parametrize("text,fragment", [
        ("[flow.x]\ngwp100 = 1", "unit basis"),
        ("[flow.x]\nunit = wombat\ngwp100 = 1", "unknown unit basis"),
        ("[flow.x]\nunit = Mg\npe_renewable = -1", "cannot be negative"),
        ("[flow.x]\nunit = Mg\nwings = 2", "unknown key"),
        ("[gas.xe]\nnote = 1", "finite gwp100"),
        ("[party]\nballoons = 9", "unknown section"),
        ("[emissions.exhaust]\nco2 = 2.64 Mg/ha", "must be in kg/L"),
    ])
    def test_malformed_files(self, text, fragment):
        with pytest.raises(FactorFileError) as err:
            load_factor_db(text)
        assert fragment in str(err.value)

    def test_all_problems_listed_together(self):
        with pytest.raises(FactorFileError) as err:
            load_factor_db("[flow.a]\ngwp100 = 1\n[party]\nx = 1\n")
        message = str(err.value)
        assert "flow.a" in message and "party" in message


class TestShippedFactors:
    def test_calibrated_records_present(self, factor_db):
        for flow_id in ("npk_8_24_8", "can_27", "diesel", "machinery_tractor",
                        "machinery_harvester", "machinery_tillage",
                        "machinery_implement", "d24_acid", "seed_processing",
                        "seed_transport", "seed_biomass_energy",
                        "seed_tall_wheatgrass"):
            record = factor_db.lookup(flow_id)
            assert "calibrated" in record.note

    def test_gwp100_gas_set(self, factor_db):
        assert factor_db.gas_gwp("co2") == 1.0
        assert factor_db.gas_gwp("ch4") == 30.5
        assert factor_db.gas_gwp("n2o") == 265.0

    def test_measured_field_overrides(self, factor_db):
        assert factor_db.n2o_params("tall_wheatgrass").override_mg_ha \
            == 0.000817
        assert factor_db.n2o_params("rye").override_mg_ha == 0.001757

    def test_exhaust(self, factor_db):
        assert factor_db.exhaust.co2_kg_l == 2.64

"""Cradle-to-farm-gate assessment of crop alternatives.

The package answers three questions about a crop grown on one hectare for
one year: what gross margin it leaves, what greenhouse-gas balance it
causes (GWP100, soil carbon included), and how much primary energy its
inputs embody, split renewable against non-renewable. Farm data and
characterization factors come from two plain-text files; results come back
as plain objects or deterministic CSV/JSON reports.

Typical use::

    from cropgate import assess, bundled_data_path

    model = assess.load_farm(bundled_data_path("farm_soria.cg"))
    db = assess.load_factors(bundled_data_path("factors_calibrated.cg"))
    result = assess.assess_crop(model, db, "tall_wheatgrass")
    print(result.gwp.net_total)
"""

from . import assess
from .assess import (CropAssessment, PairComparison, assess_crop,
                     bundled_data_path, compare_pair, load_factors,
                     load_farm, resolve_factors_path, sweep_shares)
from .economics import (EconomicBalance, FarmIncome, SweepPoint, crop_balance,
                        farm_income, marginal_share_sweep)
from .factors import (FactorDB, FactorFileError, FactorRecord,
                      MissingFlowError, load_factor_db)
from .farmspec import (CropPlan, FarmModel, FarmFileError,
                       FarmValidationError, LandClass, SeedSource, Timing,
                       ValidationReport, parse_farm_document, validate_model)
from .impact import (EnergyBreakdown, GwpBreakdown, characterize_energy,
                     characterize_gwp, phase_shares)
from .inventory import (Flow, Inventory, InventoryError, Phase,
                        SeedRecursionError, annualize_schedule, build_lci,
                        seed_inventory)
from .sections import SectionSyntaxError, parse_document, serialize_document
from .soc import soc_annual_change, soc_co2_credit, soc_stock
from .units import Quantity, Unit, UnitError, parse_quantity, parse_unit

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "assess",
    # assessments
    "CropAssessment", "PairComparison", "assess_crop", "compare_pair",
    "sweep_shares", "load_farm", "load_factors", "resolve_factors_path",
    "bundled_data_path",
    # economics
    "EconomicBalance", "FarmIncome", "SweepPoint", "crop_balance",
    "farm_income", "marginal_share_sweep",
    # factors
    "FactorDB", "FactorFileError", "FactorRecord", "MissingFlowError",
    "load_factor_db",
    # farm files
    "CropPlan", "FarmModel", "FarmFileError", "FarmValidationError",
    "LandClass", "SeedSource", "Timing", "ValidationReport",
    "parse_farm_document", "validate_model",
    # impacts
    "EnergyBreakdown", "GwpBreakdown", "characterize_energy",
    "characterize_gwp", "phase_shares",
    # inventory
    "Flow", "Inventory", "InventoryError", "Phase", "SeedRecursionError",
    "annualize_schedule", "build_lci", "seed_inventory",
    # file grammar and units
    "SectionSyntaxError", "parse_document", "serialize_document",
    "Quantity", "Unit", "UnitError", "parse_quantity", "parse_unit",
    # soil carbon
    "soc_annual_change", "soc_co2_credit", "soc_stock",
]

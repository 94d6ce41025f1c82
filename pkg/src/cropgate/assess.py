"""One-call crop assessments: economics, inventory, and both impact views.

This is the layer the command line, the demo scripts, and most tests talk
to. It loads the two input files, wires the farm model to the factor
database, and bundles everything a report needs into plain result objects.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .economics import (EconomicBalance, FarmIncome, SweepPoint, crop_balance,
                        farm_income, marginal_share_sweep)
from .factors import FactorDB, load_factor_db
from .farmspec import FarmModel, parse_farm_document
from .impact import (EnergyBreakdown, GwpBreakdown, characterize_energy,
                     characterize_gwp, phase_shares)
from .inventory import Inventory, Phase, build_lci

__all__ = [
    "CropAssessment", "PairComparison", "assess_crop", "compare_pair",
    "sweep_shares", "load_farm", "load_factors", "resolve_factors_path",
    "bundled_data_path",
]

FUNCTIONAL_UNIT = "1 ha cultivated for 1 year"


@dataclass(frozen=True)
class CropAssessment:
    crop_name: str
    economics: EconomicBalance
    inventory: Inventory
    gwp: GwpBreakdown
    energy: EnergyBreakdown
    gwp_shares: dict[Phase, float]     # % of the positive total
    energy_shares: dict[Phase, float]  # % of total primary energy
    notes: tuple[str, ...]


@dataclass(frozen=True)
class PairComparison:
    """Side-by-side view of the two marginal-land alternatives."""
    first: CropAssessment
    second: CropAssessment
    income_first: FarmIncome
    income_second: FarmIncome
    margin_difference_eur_ha: float  # with-aid balances, first minus second
    verdicts: dict[str, str]  # metric -> winning crop name (or "tie")


def assess_crop(model: FarmModel, db: FactorDB, crop_name: str, *,
                cutoff_missing: bool = False,
                horizon_years: float | None = None,
                seed_one_level: bool = False) -> CropAssessment:
    """Everything about one crop, per hectare and year."""
    crop = model.crop(crop_name)
    horizon = (model.amortization_horizon_years
               if horizon_years is None else horizon_years)
    economics = crop_balance(crop, model.cap_aid_eur_ha, horizon)
    inventory = build_lci(crop, model, db, horizon_years=horizon_years,
                          seed_one_level=seed_one_level)
    gwp = characterize_gwp(inventory, db, cutoff_missing=cutoff_missing)
    energy = characterize_energy(inventory, db, cutoff_missing=cutoff_missing)
    notes = list(inventory.notes)
    for flow_id in sorted(set(gwp.missing) | set(energy.missing)):
        notes.append(f"flow {flow_id!r} has no factor record; "
                     "cut off at zero burden")
    return CropAssessment(
        crop_name=crop_name, economics=economics, inventory=inventory,
        gwp=gwp, energy=energy,
        gwp_shares=phase_shares(gwp) if gwp.positive_total else {},
        energy_shares=phase_shares(energy) if energy.total else {},
        notes=tuple(notes))


def _verdicts(first: CropAssessment, second: CropAssessment) -> dict[str, str]:
    def best(metric: str, value_first: float, value_second: float,
             lower_wins: bool) -> tuple[str, str]:
        if value_first == value_second:
            return metric, "tie"
        better_first = (value_first < value_second) == lower_wins
        return metric, first.crop_name if better_first else second.crop_name

    return dict([
        best("profit_margin", first.economics.balance_with_cap,
             second.economics.balance_with_cap, lower_wins=False),
        best("net_gwp", first.gwp.net_total, second.gwp.net_total,
             lower_wins=True),
        best("primary_energy", first.energy.total, second.energy.total,
             lower_wins=True),
    ])


def compare_pair(model: FarmModel, db: FactorDB,
                 first_name: str | None = None,
                 second_name: str | None = None, *,
                 cutoff_missing: bool = False,
                 horizon_years: float | None = None) -> PairComparison:
    """Compare two marginal-land alternatives; defaults to the farm's pair."""
    if first_name is None and second_name is None:
        first_name, second_name = model.marginal_pair
    if first_name is None or second_name is None:
        raise ValueError("compare needs either no crop names or both")
    first = assess_crop(model, db, first_name, cutoff_missing=cutoff_missing,
                        horizon_years=horizon_years)
    second = assess_crop(model, db, second_name, cutoff_missing=cutoff_missing,
                         horizon_years=horizon_years)
    return PairComparison(
        first=first, second=second,
        income_first=farm_income(model, first_name),
        income_second=farm_income(model, second_name),
        margin_difference_eur_ha=(first.economics.balance_with_cap
                                  - second.economics.balance_with_cap),
        verdicts=_verdicts(first, second))


def sweep_shares(model: FarmModel, shares: list[float]) -> list[SweepPoint]:
    if not shares:
        raise ValueError("sweep needs at least one marginal share")
    return marginal_share_sweep(model, shares)


# ---------------------------------------------------------------------- #
#  input loading
# ---------------------------------------------------------------------- #

def load_farm(path: str | os.PathLike) -> FarmModel:
    with open(path, encoding="utf-8") as handle:
        return parse_farm_document(handle.read())


def load_factors(path: str | os.PathLike) -> FactorDB:
    with open(path, encoding="utf-8") as handle:
        return load_factor_db(handle.read())


def resolve_factors_path(farm_path: str | os.PathLike, model: FarmModel,
                         explicit: str | None = None) -> str:
    """Factor file to use: an explicit path wins, then the farm's own
    ``factors`` reference resolved next to the farm file."""
    if explicit:
        return explicit
    if model.factors_ref:
        return os.path.join(os.path.dirname(os.fspath(farm_path)),
                            model.factors_ref)
    raise FileNotFoundError(
        "no factor file: pass one explicitly or set farm.factors")


def bundled_data_path(name: str) -> str:
    """Filesystem path of a data file shipped with the package."""
    path = resources.files("cropgate").joinpath("data", name)
    return os.fspath(path)

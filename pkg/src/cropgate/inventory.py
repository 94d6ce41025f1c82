"""Life-cycle inventory assembly for one crop on one hectare and year.

The functional unit is 1 ha cultivated for 1 year. Establishment-only
inputs of perennial crops are spread over the amortization horizon first,
then every input becomes a flow tagged with the life-cycle phase it belongs
to. Flow amounts are quantities in the basis unit of their factor record
(Mg, L, kg ...), understood per hectare and year.

Seed is special. Farm-multiplied seed ("own") is produced with the same
cultivation inputs as the crop itself plus processing and transport, which
makes the seed demand self-referential: growing seed consumes seed. The
vector of flows behind 1 Mg of seed is the fixed point of

    x = (c + dose * x) / seed_yield + p

where c are the per-hectare cultivation flows (production-side flows and
field works; field emissions and soil carbon stay attributed to the parcel
that farms, not to the seed supply chain) and p the per-Mg processing,
transport, and intrinsic calorific content flows. The iteration converges
exactly when dose < seed_yield.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .factors import DEFAULT_EXHAUST, ExhaustFactors, FactorDB
from .farmspec import (CropPlan, FarmModel, LandClass, MachineClass,
                       SeedSource, Timing)
from .fieldemit import exhaust_emissions, n2o_field_emissions
from .soc import soc_annual_change, soc_co2_credit, soc_stock
from .units import Quantity, UnitError, parse_unit

__all__ = [
    "Phase", "Flow", "Inventory", "AnnualizedPlan", "InventoryError",
    "SeedRecursionError", "annualize_schedule", "seed_inventory", "build_lci",
    "GAS_FLOWS", "MACHINERY_FLOWS", "SEED_CHAIN_FLOWS",
]


class InventoryError(ValueError):
    pass


class SeedRecursionError(InventoryError):
    pass


class Phase(enum.Enum):
    SEED = "seed_pt"
    FERTILIZER = "fertilizer_pt"
    PESTICIDE = "pesticide_pt"
    FIELD_WORKS = "field_works"
    FIELD_EMISSIONS = "field_emissions"
    SOC = "soc_change"


# flows characterized through gas GWPs rather than factor records
GAS_FLOWS = ("co2", "ch4", "n2o")

MACHINERY_FLOWS = {
    MachineClass.TRACTOR: "machinery_tractor",
    MachineClass.HARVESTER: "machinery_harvester",
    MachineClass.TILLAGE: "machinery_tillage",
    MachineClass.IMPLEMENT: "machinery_implement",
}

# reserved flow ids added per Mg of farm-multiplied seed (see docs/formats.md)
SEED_CHAIN_FLOWS = ("seed_processing", "seed_transport", "seed_biomass_energy")

_MG = parse_unit("Mg")[0]
_KG_VALUE = 0.001  # one kg in canonical mass units
_L = parse_unit("L")[0]


@dataclass(frozen=True)
class Flow:
    flow_id: str
    amount: Quantity  # per ha and year; negative only in the SOC phase
    phase: Phase


@dataclass(frozen=True)
class Inventory:
    crop_name: str
    flows: tuple[Flow, ...]
    notes: tuple[str, ...] = ()

    def by_phase(self, phase: Phase) -> list[Flow]:
        return [f for f in self.flows if f.phase is phase]

    def amount(self, flow_id: str, phase: Phase | None = None) -> Quantity | None:
        total = None
        for flow in self.flows:
            if flow.flow_id != flow_id:
                continue
            if phase is not None and flow.phase is not phase:
                continue
            total = flow.amount if total is None else total + flow.amount
        return total


@dataclass(frozen=True)
class AnnualizedPlan:
    """Per-year input rates after spreading establishment-only entries."""
    sowing_dose_mg_ha: float
    fertilizations: tuple  # (product_id, dose_mg_ha) pairs
    herbicides: tuple      # (product_id, per-ha dose Quantity) pairs
    diesel_l_ha: float
    machinery_mg_ha: dict[MachineClass, float] = field(default_factory=dict)


def _spread(value, timing: Timing, horizon: float):
    return value / horizon if timing is Timing.ESTABLISHMENT else value


def annualize_schedule(crop: CropPlan, horizon_years: float) -> AnnualizedPlan:
    """Representative annual input rates for one crop.

    Establishment-only entries are divided by the amortization horizon;
    recurrent entries pass through unchanged. Nothing is lost: annualized
    establishment rates times the horizon give back the one-off totals.
    """
    if horizon_years < 1:
        raise InventoryError("amortization horizon must be at least 1 year")
    machinery: dict[MachineClass, float] = {}
    diesel = 0.0
    for op in crop.operations:
        diesel += _spread(op.diesel_l_ha, op.timing, horizon_years)
        for cls, mass in op.machinery_mg_ha.items():
            machinery[cls] = machinery.get(cls, 0.0) + _spread(
                mass, op.timing, horizon_years)
    return AnnualizedPlan(
        sowing_dose_mg_ha=_spread(crop.sowing_dose_mg_ha, crop.sowing_timing,
                                  horizon_years),
        fertilizations=tuple(
            (f.product_id, _spread(f.dose_mg_ha, f.timing, horizon_years))
            for f in crop.fertilizations),
        herbicides=tuple(
            (h.product_id, _spread(h.dose, h.timing, horizon_years))
            for h in crop.herbicides),
        diesel_l_ha=diesel,
        machinery_mg_ha=machinery)


def _active_ingredient_kg(dose: Quantity, active_fraction: float) -> float:
    """kg of active ingredient in a per-ha dose.

    Liquid formulations state the fraction as kg a.i. per litre of product,
    solid ones as a mass fraction.
    """
    if dose.unit == _L / parse_unit("ha")[0]:
        return dose.to("L/ha") * active_fraction
    if dose.unit == _MG / parse_unit("ha")[0]:
        return dose.to("kg/ha") * active_fraction
    raise UnitError(f"herbicide dose must be volume or mass per ha, got "
                    f"{dose.unit or '1'}")


def _cultivation_flows(crop: CropPlan, model: FarmModel, ann: AnnualizedPlan,
                       exhaust: ExhaustFactors) -> dict[str, Quantity]:
    """Production-side and field-work flows per ha*y, keyed by flow id.

    Used both for the crop itself and as the cultivation part of its own
    seed production. Field emissions and soil carbon are excluded here.
    """
    flows: dict[str, Quantity] = {}

    def add(flow_id: str, amount: Quantity) -> None:
        if flow_id in flows:
            flows[flow_id] = flows[flow_id] + amount
        else:
            flows[flow_id] = amount

    for product_id, dose in ann.fertilizations:
        add(product_id, Quantity(dose, _MG))
    for product_id, dose in ann.herbicides:
        product = model.products[product_id]
        ai_kg = _active_ingredient_kg(dose, product.active_fraction)
        add(product_id, Quantity(ai_kg * _KG_VALUE, _MG))
    if ann.diesel_l_ha:
        add("diesel", Quantity(ann.diesel_l_ha, _L))
        gases = exhaust_emissions(ann.diesel_l_ha, exhaust)
        for gas, kg in (("co2", gases.co2_kg), ("ch4", gases.ch4_kg),
                        ("n2o", gases.n2o_kg)):
            if kg:
                add(gas, Quantity(kg * _KG_VALUE, _MG))
    for cls, mass in ann.machinery_mg_ha.items():
        if mass:
            add(MACHINERY_FLOWS[cls], Quantity(mass, _MG))
    return flows


def seed_inventory(crop: CropPlan, model: FarmModel,
                   exhaust: ExhaustFactors = DEFAULT_EXHAUST,
                   tolerance: float = 1e-12, max_iterations: int = 10_000,
                   one_level: bool = False) -> dict[str, Quantity]:
    """Flow vector behind 1 Mg of farm-multiplied seed.

    Solves the self-referential seed demand by fixed-point iteration. With
    ratio r = sowing dose / seed yield the solution equals the geometric
    series sum (c/Y + p) / (1 - r); the iteration stops when the largest
    relative change drops below ``tolerance``.

    Args:
        one_level: truncate after the first level instead (the seed used to
            grow seed is left out), for sensitivity runs.

    Raises:
        SeedRecursionError: dose >= yield (the series diverges), or the
            iteration cap is hit.
    """
    if crop.seed_yield_mg_ha is None or crop.seed_yield_mg_ha <= 0:
        raise SeedRecursionError(f"crop {crop.name!r} has no seed yield")
    ann = annualize_schedule(crop, model.amortization_horizon_years)
    dose = ann.sowing_dose_mg_ha
    yield_mg = crop.seed_yield_mg_ha
    if dose >= yield_mg:
        raise SeedRecursionError(
            f"seed dose {dose!r} Mg/ha meets or exceeds seed yield "
            f"{yield_mg!r} Mg/ha; the seed chain diverges")

    cultivation = _cultivation_flows(crop, model, ann, exhaust)
    extras = {flow_id: Quantity(1.0, _MG) for flow_id in SEED_CHAIN_FLOWS}

    def step(x: dict[str, Quantity]) -> dict[str, Quantity]:
        out: dict[str, Quantity] = {}
        for flow_id, amount in cultivation.items():
            recursive = x.get(flow_id)
            total = amount if recursive is None else amount + recursive * dose
            out[flow_id] = total / yield_mg
        for flow_id, amount in x.items():
            if flow_id not in cultivation:
                out[flow_id] = amount * (dose / yield_mg)
        for flow_id, amount in extras.items():
            out[flow_id] = out[flow_id] + amount if flow_id in out else amount
        return out

    vector = step({})
    if one_level:
        return vector
    for _ in range(max_iterations):
        updated = step(vector)
        worst = 0.0
        for flow_id, amount in updated.items():
            previous = vector.get(flow_id)
            if previous is None:
                worst = float("inf")
                break
            scale = max(abs(amount.value), abs(previous.value), 1e-300)
            worst = max(worst, abs(amount.value - previous.value) / scale)
        vector = updated
        if worst < tolerance:
            return vector
    raise SeedRecursionError(
        f"seed chain for {crop.name!r} did not converge within "
        f"{max_iterations} iterations")


def _soc_flow(crop: CropPlan, model: FarmModel) -> tuple[Flow | None, str | None]:
    if crop.soc_equilibrium:
        return None, None
    if crop.soc_fixation_mg_c_ha is not None:
        credit = soc_co2_credit(crop.soc_fixation_mg_c_ha)
        return Flow("co2", Quantity(-credit, _MG), Phase.SOC), None
    series = model.soil_series(crop.land_class)
    if len(series) < 2:
        return None, (f"no soil analysis pair for {crop.land_class.value} "
                      "land; soil carbon change taken as zero")
    first, last = series[0], series[-1]
    years = last.year - first.year
    change = soc_annual_change(soc_stock(first), soc_stock(last), years)
    return Flow("co2", Quantity(-soc_co2_credit(change), _MG), Phase.SOC), None


def build_lci(crop: CropPlan, model: FarmModel, db: FactorDB,
              horizon_years: float | None = None,
              seed_one_level: bool = False) -> Inventory:
    """Full per-ha*y inventory of one crop, all flows tagged by phase."""
    horizon = (model.amortization_horizon_years
               if horizon_years is None else horizon_years)
    if horizon != model.amortization_horizon_years:
        model = replace(model, amortization_horizon_years=int(horizon))
        crop = model.crops[crop.name]
    ann = annualize_schedule(crop, horizon)
    flows: list[Flow] = []
    notes: list[str] = []

    if ann.sowing_dose_mg_ha and crop.seed_source is SeedSource.OWN:
        vector = seed_inventory(crop, model, db.exhaust,
                                one_level=seed_one_level)
        for flow_id in sorted(vector):
            flows.append(Flow(flow_id, vector[flow_id] * ann.sowing_dose_mg_ha,
                              Phase.SEED))
    elif ann.sowing_dose_mg_ha and crop.seed_source is SeedSource.EXTERNAL:
        flows.append(Flow(crop.seed_flow, Quantity(ann.sowing_dose_mg_ha, _MG),
                          Phase.SEED))

    for product_id, dose in ann.fertilizations:
        flows.append(Flow(product_id, Quantity(dose, _MG), Phase.FERTILIZER))

    for product_id, dose in ann.herbicides:
        product = model.products[product_id]
        ai_kg = _active_ingredient_kg(dose, product.active_fraction)
        flows.append(Flow(product_id, Quantity(ai_kg * _KG_VALUE, _MG),
                          Phase.PESTICIDE))

    if ann.diesel_l_ha:
        flows.append(Flow("diesel", Quantity(ann.diesel_l_ha, _L),
                          Phase.FIELD_WORKS))
        gases = exhaust_emissions(ann.diesel_l_ha, db.exhaust)
        for gas, kg in (("co2", gases.co2_kg), ("ch4", gases.ch4_kg),
                        ("n2o", gases.n2o_kg)):
            if kg:
                flows.append(Flow(gas, Quantity(kg * _KG_VALUE, _MG),
                                  Phase.FIELD_WORKS))
    for cls in MachineClass:
        mass = ann.machinery_mg_ha.get(cls)
        if mass:
            flows.append(Flow(MACHINERY_FLOWS[cls], Quantity(mass, _MG),
                              Phase.FIELD_WORKS))

    n_applied_kg = sum(
        dose * model.products[product_id].composition.n * 1000.0
        for product_id, dose in ann.fertilizations
        if product_id in model.products)
    n2o_mg = n2o_field_emissions(n_applied_kg, db.n2o_params(crop.name))
    if n2o_mg:
        flows.append(Flow("n2o", Quantity(n2o_mg, _MG), Phase.FIELD_EMISSIONS))

    soc_flow, note = _soc_flow(crop, model)
    if soc_flow is not None:
        flows.append(soc_flow)
    if note:
        notes.append(note)

    for flow in flows:
        if flow.amount.value < 0 and flow.phase is not Phase.SOC:
            raise InventoryError(
                f"negative amount for flow {flow.flow_id!r} in phase "
                f"{flow.phase.value}")
    return Inventory(crop_name=crop.name, flows=tuple(flows),
                     notes=tuple(notes))

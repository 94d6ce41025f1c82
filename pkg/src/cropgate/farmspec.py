"""Farm description files: model types, parsing, and validation.

A farm file describes one holding: the land split, the crops with their
input schedules and costs, product compositions, selling prices, and soil
analyses. The reserved keys for every section kind are documented in
docs/formats.md; this module enforces them.

Validation never stops at the first problem. Structural checks run while the
model is assembled and semantic invariants run afterwards; everything ends up
in one :class:`ValidationReport` so a file with five mistakes produces five
diagnostics in a single pass.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .sections import Document, Section, SectionSyntaxError, parse_document
from .units import DIMENSIONLESS, Quantity, UnitError, parse_unit

__all__ = [
    "LandClass", "Timing", "SeedSource", "MachineClass",
    "Composition", "ProductSpec", "FertilizerApplication",
    "HerbicideApplication", "FieldOperation", "CostBlock", "CropPlan",
    "SoilSample", "FarmModel", "Diagnostic", "ValidationReport",
    "FarmFileError", "FarmValidationError",
    "parse_product_label", "parse_farm_document", "build_farm_model",
    "validate_model",
]

DEFAULT_AMORTIZATION_YEARS = 4


class FarmFileError(ValueError):
    """Base class for farm file problems (syntax errors reuse sections')."""


class FarmValidationError(FarmFileError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("invalid farm description:\n" + report.render())
        self.report = report


class LandClass(enum.Enum):
    MARGINAL = "marginal"
    NON_MARGINAL = "non_marginal"
    FALLOW = "fallow"


class Timing(enum.Enum):
    ESTABLISHMENT = "establishment"
    RECURRENT = "recurrent"


class SeedSource(enum.Enum):
    OWN = "own"          # multiplied on the farm, modeled recursively
    EXTERNAL = "external"  # bought in, resolved through a factor-file flow
    NONE = "none"


class MachineClass(enum.Enum):
    TRACTOR = "tractor"
    HARVESTER = "harvester"
    TILLAGE = "tillage"
    IMPLEMENT = "implements"


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    where: str
    message: str

    def render(self) -> str:
        return f"{self.severity}: [{self.where}] {self.message}"


@dataclass
class ValidationReport:
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def error(self, where: str, message: str) -> None:
        self.diagnostics.append(Diagnostic("error", where, message))

    def warning(self, where: str, message: str) -> None:
        self.diagnostics.append(Diagnostic("warning", where, message))

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    @property
    def warnings(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def extend(self, other: "ValidationReport") -> None:
        self.diagnostics.extend(other.diagnostics)

    def render(self) -> str:
        return "\n".join(d.render() for d in self.diagnostics)


# ---------------------------------------------------------------------- #
#  model types
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class Composition:
    """N-P-K mass fractions of a fertilizer product."""
    n: float = 0.0
    p: float = 0.0
    k: float = 0.0


@dataclass(frozen=True)
class ProductSpec:
    product_id: str
    kind: str  # "fertilizer" | "herbicide" | "seed"
    label: str = ""
    composition: Composition = Composition()
    active_fraction: float = 0.0  # herbicides: kg a.i. per L (liquid) or per kg


@dataclass(frozen=True)
class FertilizerApplication:
    product_id: str
    dose_mg_ha: float
    timing: Timing
    role: str  # "base" | "top"


@dataclass(frozen=True)
class HerbicideApplication:
    product_id: str
    dose: Quantity  # per-ha dose, volume or mass basis
    timing: Timing


@dataclass(frozen=True)
class FieldOperation:
    name: str
    timing: Timing
    diesel_l_ha: float = 0.0
    machinery_mg_ha: dict[MachineClass, float] = field(default_factory=dict)


@dataclass(frozen=True)
class CostBlock:
    """Annual cost components in EUR/ha plus one-off establishment parts."""
    seed: float = 0.0
    herbicide: float = 0.0
    fertilizer: float = 0.0
    machinery_labor: float = 0.0
    seed_establishment: float = 0.0
    herbicide_establishment: float = 0.0
    fertilizer_establishment: float = 0.0
    machinery_labor_establishment: float = 0.0


@dataclass(frozen=True)
class CropPlan:
    name: str
    land_class: LandClass
    perennial: bool
    life_span_years: int
    area_ha: float
    sowing_dose_mg_ha: float
    sowing_timing: Timing
    seed_source: SeedSource
    seed_flow: str | None
    seed_yield_mg_ha: float | None
    fertilizations: tuple[FertilizerApplication, ...]
    herbicides: tuple[HerbicideApplication, ...]
    operations: tuple[FieldOperation, ...]
    grain_yield_mg_ha: float
    straw_yield_mg_ha: float
    grain_price: float | None  # EUR/Mg, resolved from [prices]
    straw_price: float | None
    sales_override: float | None  # EUR/ha, invoice-averaged totals
    costs: CostBlock
    soc_equilibrium: bool
    soc_fixation_mg_c_ha: float | None  # measured annual organic-carbon gain


@dataclass(frozen=True)
class SoilSample:
    land_class: LandClass
    year: int
    depth_m: float
    bulk_density_mg_m3: float
    coarse_fraction: float   # volumetric, 0..1
    organic_matter: float    # mass fraction of fine earth, 0..1
    organic_carbon: float


@dataclass(frozen=True)
class FarmModel:
    name: str
    total_area_ha: float
    cap_aid_eur_ha: float
    amortization_horizon_years: int
    marginal_area_ha: float
    marginal_pair: tuple[str, str]
    crops: dict[str, CropPlan]
    products: dict[str, ProductSpec]
    soil_samples: tuple[SoilSample, ...]
    factors_ref: str | None = None

    def crop(self, name: str) -> CropPlan:
        try:
            return self.crops[name]
        except KeyError:
            raise KeyError(f"farm has no crop named {name!r}") from None

    def soil_series(self, land_class: LandClass) -> list[SoilSample]:
        return sorted((s for s in self.soil_samples if s.land_class == land_class),
                      key=lambda s: s.year)


# ---------------------------------------------------------------------- #
#  product labels
# ---------------------------------------------------------------------- #

_NPK_RE = re.compile(r"^\s*(\d+(?:\.\d+)?)-(\d+(?:\.\d+)?)-(\d+(?:\.\d+)?)\s*$")
_PCT_RE = re.compile(r"(\d+(?:\.\d+)?)\s*%")


def parse_product_label(label: str) -> Composition:
    """Mineral fertilizer composition from its commercial label.

    Two label shapes are understood: "N-P-K" triplets ("8-24-8" means 8% N,
    24% P2O5, 8% K2O) and "<name> <p>%" nitrogen grades ("CAN 27%" means 27%
    nitrogen). Percentages must be numeric and sum to at most 100.
    """
    m = _NPK_RE.match(label)
    if m:
        n, p, k = (float(g) for g in m.groups())
        if n + p + k > 100.0:
            raise FarmFileError(f"label {label!r}: percentages sum above 100")
        return Composition(n / 100.0, p / 100.0, k / 100.0)
    pcts = _PCT_RE.findall(label)
    if pcts:
        n = float(pcts[0])
        if n > 100.0:
            raise FarmFileError(f"label {label!r}: nitrogen fraction above 100%")
        return Composition(n=n / 100.0)
    raise FarmFileError(f"label {label!r} has no numeric composition")


# ---------------------------------------------------------------------- #
#  section readers
# ---------------------------------------------------------------------- #

class _SectionReader:
    """Typed access to one section, collecting diagnostics instead of raising."""

    def __init__(self, section: Section, report: ValidationReport):
        self.section = section
        self.report = report
        self.where = section.name
        self._consumed: set[str] = set()

    def _take(self, key: str):
        self._consumed.add(key)
        return self.section.get(key)

    def quantity(self, key: str, unit_text: str, default: float | None = None,
                 ) -> float | None:
        value = self._take(key)
        if value is None:
            return default
        if not isinstance(value, Quantity):
            self.report.error(f"{self.where}.{key}", "expected a quantity")
            return default
        expected, scale = parse_unit(unit_text)
        if value.unit == DIMENSIONLESS and not expected.dimensionless:
            # bare numbers are accepted where the unit is unambiguous
            return value.value
        if value.unit != expected:
            self.report.error(f"{self.where}.{key}",
                              f"expected a value in {unit_text}")
            return default
        return value.value / scale

    def fraction(self, key: str, default: float | None = None) -> float | None:
        value = self._take(key)
        if value is None:
            return default
        if not isinstance(value, Quantity) or not value.unit.dimensionless:
            self.report.error(f"{self.where}.{key}", "expected a fraction")
            return default
        if not 0.0 <= value.value <= 1.0:
            self.report.error(f"{self.where}.{key}",
                              f"fraction {value.value!r} outside [0, 1]")
            return default
        return value.value

    def text(self, key: str, default: str | None = None) -> str | None:
        value = self._take(key)
        if value is None:
            return default
        if not isinstance(value, str):
            self.report.error(f"{self.where}.{key}", "expected text")
            return default
        return value

    def boolean(self, key: str, default: bool = False) -> bool:
        value = self._take(key)
        if value is None:
            return default
        if not isinstance(value, bool):
            self.report.error(f"{self.where}.{key}", "expected true or false")
            return default
        return value

    def ident_list(self, key: str) -> list[str]:
        value = self._take(key)
        if value is None:
            return []
        items = value if isinstance(value, list) else [value]
        out = []
        for item in items:
            if isinstance(item, str):
                out.append(item)
            else:
                self.report.error(f"{self.where}.{key}", "expected identifiers")
        return out

    def timing(self, key: str, default: Timing = Timing.RECURRENT) -> Timing:
        value = self._take(key)
        if value is None:
            return default
        try:
            return Timing(value)
        except (ValueError, TypeError):
            self.report.error(f"{self.where}.{key}",
                              "expected 'establishment' or 'recurrent'")
            return default

    def raw_quantity(self, key: str) -> Quantity | None:
        value = self._take(key)
        if value is None:
            return None
        if not isinstance(value, Quantity):
            self.report.error(f"{self.where}.{key}", "expected a quantity")
            return None
        return value

    def finish(self) -> None:
        for key in self.section.entries:
            if key not in self._consumed:
                self.report.error(f"{self.where}.{key}", "unknown key")


def _read_product(section: Section, report: ValidationReport) -> ProductSpec | None:
    reader = _SectionReader(section, report)
    product_id = section.path[1]
    kind = reader.text("kind")
    label = reader.text("label", "")
    if kind not in ("fertilizer", "herbicide", "seed"):
        report.error(section.name, "kind must be fertilizer, herbicide or seed")
        reader.finish()
        return None
    composition = Composition()
    active = 0.0
    if kind == "fertilizer":
        n = reader.fraction("n_fraction")
        p = reader.fraction("p_fraction")
        k = reader.fraction("k_fraction")
        if n is None and p is None and k is None:
            if not label:
                report.error(section.name,
                             "fertilizer needs a label or explicit fractions")
            else:
                try:
                    composition = parse_product_label(label)
                except FarmFileError as exc:
                    report.error(section.name, str(exc))
        else:
            composition = Composition(n or 0.0, p or 0.0, k or 0.0)
    elif kind == "herbicide":
        frac = reader.fraction("active_fraction")
        if frac is None:
            report.error(section.name, "herbicide needs active_fraction")
        else:
            active = frac
    reader.finish()
    return ProductSpec(product_id=product_id, kind=kind, label=label or "",
                       composition=composition, active_fraction=active)


def _read_soil(section: Section, report: ValidationReport) -> SoilSample | None:
    try:
        land_class = LandClass(section.path[1])
    except ValueError:
        report.error(section.name, f"unknown land class {section.path[1]!r}")
        return None
    try:
        year = int(section.path[2])
    except ValueError:
        report.error(section.name, "soil section needs a numeric year segment")
        return None
    reader = _SectionReader(section, report)
    depth = reader.quantity("depth", "m")
    density = reader.quantity("bulk_density", "Mg/m3")
    coarse = reader.fraction("coarse_fraction")
    om = reader.fraction("organic_matter")
    oc = reader.fraction("organic_carbon")
    reader.finish()
    if None in (depth, density, coarse, om, oc):
        report.error(section.name, "soil sample is incomplete")
        return None
    return SoilSample(land_class=land_class, year=year, depth_m=depth,
                      bulk_density_mg_m3=density, coarse_fraction=coarse,
                      organic_matter=om, organic_carbon=oc)


def _read_crop(section: Section, sub: dict[str, list[Section]],
               prices: dict[str, float], report: ValidationReport) -> CropPlan | None:
    name = section.path[1]
    reader = _SectionReader(section, report)
    where = section.name

    land_text = reader.text("land_class")
    try:
        land_class = LandClass(land_text) if land_text else None
    except ValueError:
        land_class = None
    if land_class is None:
        report.error(f"{where}.land_class",
                     "expected marginal, non_marginal or fallow")

    perennial = reader.boolean("perennial", False)
    life_span = reader.quantity("life_span", "y", 1.0)
    area = reader.quantity("area", "ha")

    sowing_dose = reader.quantity("sowing_dose", "Mg/ha", 0.0)
    sowing_timing = reader.timing("sowing_timing")
    seed_source_text = reader.text(
        "seed_source", "own" if sowing_dose else "none")
    try:
        seed_source = SeedSource(seed_source_text)
    except ValueError:
        report.error(f"{where}.seed_source", "expected own, external or none")
        seed_source = SeedSource.NONE
    seed_flow = reader.text("seed_flow")
    seed_yield = reader.quantity("seed_yield", "Mg/ha")

    fertilizations = []
    for role in ("base", "top"):
        product = reader.text(f"{role}_product")
        dose = reader.quantity(f"{role}_dose", "Mg/ha")
        timing = reader.timing(f"{role}_timing")
        if product is None and dose is None:
            continue
        if product is None or dose is None:
            report.error(where, f"{role} fertilization needs both product and dose")
            continue
        fertilizations.append(FertilizerApplication(
            product_id=product, dose_mg_ha=dose, timing=timing, role=role))

    grain_yield = reader.quantity("grain_yield", "Mg/ha", 0.0)
    straw_yield = reader.quantity("straw_yield", "Mg/ha")
    if straw_yield is None:
        straw_yield = reader.quantity("biomass_yield", "Mg/ha", 0.0)
    sales_override = reader.quantity("sales", "EUR/ha")
    soc_equilibrium = reader.boolean("soc_equilibrium", False)
    soc_fixation = reader.quantity("soc_fixation", "Mg/ha")
    reader.finish()

    herbicides = []
    for hsec in sub.get("herbicide", []):
        hreader = _SectionReader(hsec, report)
        dose = hreader.raw_quantity("dose")
        timing = hreader.timing("timing")
        hreader.finish()
        if dose is None:
            report.error(hsec.name, "herbicide application needs a dose")
            continue
        herbicides.append(HerbicideApplication(
            product_id=hsec.path[3], dose=dose, timing=timing))

    operations = []
    for osec in sub.get("op", []):
        oreader = _SectionReader(osec, report)
        timing = oreader.timing("timing")
        diesel = oreader.quantity("diesel", "L/ha", 0.0)
        machinery = {}
        for cls in MachineClass:
            mass = oreader.quantity(cls.value, "Mg/ha")
            if mass is not None:
                machinery[cls] = mass
        oreader.finish()
        operations.append(FieldOperation(name=osec.path[3], timing=timing,
                                         diesel_l_ha=diesel,
                                         machinery_mg_ha=machinery))

    costs = CostBlock()
    cost_secs = sub.get("costs", [])
    if cost_secs:
        creader = _SectionReader(cost_secs[0], report)
        kwargs = {}
        for part in ("seed", "herbicide", "fertilizer", "machinery_labor"):
            kwargs[part] = creader.quantity(part, "EUR/ha", 0.0)
            kwargs[f"{part}_establishment"] = creader.quantity(
                f"{part}_establishment", "EUR/ha", 0.0)
        creader.finish()
        costs = CostBlock(**kwargs)

    if land_class is None:
        return None
    return CropPlan(
        name=name, land_class=land_class, perennial=perennial,
        life_span_years=int(life_span), area_ha=area if area is not None else 0.0,
        sowing_dose_mg_ha=sowing_dose, sowing_timing=sowing_timing,
        seed_source=seed_source, seed_flow=seed_flow, seed_yield_mg_ha=seed_yield,
        fertilizations=tuple(fertilizations), herbicides=tuple(herbicides),
        operations=tuple(operations), grain_yield_mg_ha=grain_yield,
        straw_yield_mg_ha=straw_yield,
        grain_price=prices.get(f"{name}_grain"),
        straw_price=prices.get(f"{name}_straw", prices.get("straw")),
        sales_override=sales_override, costs=costs,
        soc_equilibrium=soc_equilibrium, soc_fixation_mg_c_ha=soc_fixation)


# ---------------------------------------------------------------------- #
#  document -> model
# ---------------------------------------------------------------------- #

def build_farm_model(doc: Document) -> tuple[FarmModel | None, ValidationReport]:
    """Assemble a FarmModel from a parsed document, collecting diagnostics."""
    report = ValidationReport()

    farm_sec = doc.section("farm")
    if farm_sec is None:
        report.error("farm", "document has no [farm] section")
        return None, report
    freader = _SectionReader(farm_sec, report)
    name = freader.text("name", "")
    total_area = freader.quantity("total_area", "ha")
    cap_aid = freader.quantity("cap_aid", "EUR/ha", 0.0)
    horizon = freader.quantity("amortization_horizon", "y",
                               float(DEFAULT_AMORTIZATION_YEARS))
    marginal_area = freader.quantity("marginal_area", "ha", 0.0)
    pair = freader.ident_list("marginal_pair")
    factors_ref = freader.text("factors")
    freader.finish()
    if total_area is None:
        report.error("farm.total_area", "total_area is required")
        total_area = 0.0
    if len(pair) != 2:
        report.error("farm.marginal_pair",
                     "exactly one comparison pair of two crops is required")
        pair = (pair + ["", ""])[:2]

    prices: dict[str, float] = {}
    price_sec = doc.section("prices")
    if price_sec is not None:
        preader = _SectionReader(price_sec, report)
        for key in list(price_sec.entries):
            value = preader.quantity(key, "EUR/Mg")
            if value is not None:
                prices[key] = value
        preader.finish()

    products: dict[str, ProductSpec] = {}
    for psec in doc.find("product"):
        if len(psec.path) != 2:
            report.error(psec.name, "product sections are [product.<id>]")
            continue
        spec = _read_product(psec, report)
        if spec is not None:
            products[spec.product_id] = spec

    samples: list[SoilSample] = []
    for ssec in doc.find("soil"):
        if len(ssec.path) != 3:
            report.error(ssec.name, "soil sections are [soil.<class>.<year>]")
            continue
        sample = _read_soil(ssec, report)
        if sample is not None:
            samples.append(sample)

    crops: dict[str, CropPlan] = {}
    crop_subsections: dict[str, dict[str, list[Section]]] = {}
    for csec in doc.find("crop"):
        if len(csec.path) == 2:
            crop_subsections.setdefault(csec.path[1], {})
        elif len(csec.path) in (3, 4):
            kind = csec.path[2]
            if kind not in ("herbicide", "op", "costs"):
                report.error(csec.name, f"unknown crop subsection {kind!r}")
                continue
            if (kind in ("herbicide", "op")) != (len(csec.path) == 4):
                report.error(csec.name, "malformed crop subsection path")
                continue
            crop_subsections.setdefault(csec.path[1], {}).setdefault(
                kind, []).append(csec)
        else:
            report.error(csec.name, "malformed crop section path")
    for csec in doc.find("crop"):
        if len(csec.path) != 2:
            continue
        plan = _read_crop(csec, crop_subsections.get(csec.path[1], {}),
                          prices, report)
        if plan is not None:
            crops[plan.name] = plan
    for crop_name, subs in crop_subsections.items():
        if crop_name not in crops and subs:
            report.error(f"crop.{crop_name}",
                         "subsections without a [crop.{}] section".format(crop_name))

    for top in doc.sections:
        if top.path[0] not in ("farm", "prices", "product", "soil", "crop"):
            report.error(top.name, "unknown section")
        elif top.path[0] in ("farm", "prices") and len(top.path) != 1:
            report.error(top.name, "unknown section")

    # marginal crops share the marginal land; fill their area from the farm
    resolved: dict[str, CropPlan] = {}
    for crop_name, plan in crops.items():
        if plan.land_class is LandClass.MARGINAL:
            if plan.area_ha:
                report.error(f"crop.{crop_name}.area",
                             "marginal alternatives take the shared marginal_area")
            plan = _replace_area(plan, marginal_area)
        resolved[crop_name] = plan

    model = FarmModel(
        name=name or "", total_area_ha=total_area, cap_aid_eur_ha=cap_aid,
        amortization_horizon_years=int(horizon), marginal_area_ha=marginal_area,
        marginal_pair=(pair[0], pair[1]), crops=resolved, products=products,
        soil_samples=tuple(samples), factors_ref=factors_ref)
    report.extend(validate_model(model))
    return model, report


def _replace_area(plan: CropPlan, area: float) -> CropPlan:
    from dataclasses import replace
    return replace(plan, area_ha=area)


def validate_model(model: FarmModel) -> ValidationReport:
    """Semantic invariants of a built model; empty report means valid."""
    report = ValidationReport()

    # land bookkeeping: every hectare accounted for exactly once
    fixed = sum(p.area_ha for p in model.crops.values()
                if p.land_class is not LandClass.MARGINAL)
    declared = fixed + model.marginal_area_ha
    if abs(declared - model.total_area_ha) > 1e-6:
        report.error("farm.total_area",
                     f"crop areas sum to {declared!r} ha, "
                     f"declared total is {model.total_area_ha!r} ha")

    marginal = [p.name for p in model.crops.values()
                if p.land_class is LandClass.MARGINAL]
    for crop_name in model.marginal_pair:
        if crop_name not in model.crops:
            report.error("farm.marginal_pair", f"unknown crop {crop_name!r}")
        elif crop_name not in marginal:
            report.error("farm.marginal_pair",
                         f"{crop_name!r} is not a marginal-class crop")
    for crop_name in marginal:
        if crop_name not in model.marginal_pair:
            report.error(f"crop.{crop_name}",
                         "marginal crop outside the comparison pair")
    if model.marginal_pair[0] == model.marginal_pair[1]:
        report.error("farm.marginal_pair", "pair must name two distinct crops")

    if model.amortization_horizon_years < 1:
        report.error("farm.amortization_horizon", "horizon must be at least 1 year")
    if model.cap_aid_eur_ha < 0:
        report.error("farm.cap_aid", "aid cannot be negative")

    for plan in model.crops.values():
        where = f"crop.{plan.name}"
        if plan.life_span_years < 1:
            report.error(f"{where}.life_span", "life span must be at least 1 year")
        if plan.perennial and plan.life_span_years == 1:
            report.warning(f"{where}.life_span",
                           "perennial crop with a one-year life span")
        if not plan.perennial and plan.life_span_years > 1:
            report.warning(f"{where}.life_span",
                           "annual crop with multi-year span")
        has_establishment = (
            (plan.sowing_timing is Timing.ESTABLISHMENT and plan.sowing_dose_mg_ha)
            or any(f.timing is Timing.ESTABLISHMENT for f in plan.fertilizations)
            or any(h.timing is Timing.ESTABLISHMENT for h in plan.herbicides)
            or any(o.timing is Timing.ESTABLISHMENT for o in plan.operations))
        if not plan.perennial and has_establishment:
            report.error(where,
                         "establishment-only entries on a non-perennial crop")
        for application in plan.fertilizations:
            if application.product_id not in model.products:
                report.error(where,
                             f"undefined product {application.product_id!r}")
            elif model.products[application.product_id].kind != "fertilizer":
                report.error(where,
                             f"{application.product_id!r} is not a fertilizer")
            if application.dose_mg_ha < 0:
                report.error(where, "negative fertilizer dose")
        for application in plan.herbicides:
            if application.product_id not in model.products:
                report.error(where,
                             f"undefined product {application.product_id!r}")
            elif model.products[application.product_id].kind != "herbicide":
                report.error(where,
                             f"{application.product_id!r} is not a herbicide")
            if application.dose.value < 0:
                report.error(where, "negative herbicide dose")
        if plan.sowing_dose_mg_ha < 0:
            report.error(where, "negative sowing dose")
        if plan.grain_yield_mg_ha < 0 or plan.straw_yield_mg_ha < 0:
            report.error(where, "negative yield")
        if plan.area_ha < 0:
            report.error(where, "negative area")
        if plan.seed_source is SeedSource.OWN:
            if not plan.seed_yield_mg_ha or plan.seed_yield_mg_ha <= 0:
                report.error(where, "own seed production needs seed_yield > 0")
        if plan.seed_source is SeedSource.EXTERNAL and not plan.seed_flow:
            report.error(where, "external seed needs a seed_flow reference")
        if plan.grain_yield_mg_ha > 0 and plan.grain_price is None:
            report.error(where, f"no price for {plan.name!r} grain")
        if plan.straw_yield_mg_ha > 0 and plan.straw_price is None:
            report.error(where, f"no straw price for {plan.name!r}")
        for op in plan.operations:
            if op.diesel_l_ha < 0:
                report.error(where, f"negative diesel in operation {op.name!r}")
            for mass in op.machinery_mg_ha.values():
                if mass < 0:
                    report.error(where, f"negative machinery mass in {op.name!r}")
        if plan.soc_fixation_mg_c_ha is not None and plan.soc_equilibrium:
            report.warning(where,
                           "soc_fixation is ignored for equilibrium crops")

    for sample in model.soil_samples:
        where = f"soil.{sample.land_class.value}.{sample.year}"
        if sample.organic_carbon > sample.organic_matter:
            report.error(where, "organic carbon above organic matter")
        if not 0.5 <= sample.bulk_density_mg_m3 <= 2.5:
            report.error(where,
                         f"bulk density {sample.bulk_density_mg_m3!r} Mg/m3 "
                         "outside the plausible 0.5-2.5 range")
        if sample.depth_m <= 0:
            report.error(where, "non-positive sampling depth")

    return report


def parse_farm_document(text: str) -> FarmModel:
    """Parse and validate a farm file, returning the model.

    Raises:
        SectionSyntaxError: grammar problems, with line and column.
        FarmValidationError: any error-severity diagnostic, all collected.
    """
    doc = parse_document(text)
    model, report = build_farm_model(doc)
    if model is None or not report.ok:
        raise FarmValidationError(report)
    return model

"""Deterministic report files.

Identical inputs and flags produce byte-identical files: numbers go through
fixed-precision formatting (EUR to 2 decimals, Mg CO2e to 3, GJ to 1, shares
to 1 decimal percent), rows keep a fixed order, CSV uses comma, ".", LF and
a header row, JSON mirrors the same values at full precision with sorted
keys. No clock is read; a timestamp appears only when SOURCE_DATE_EPOCH is
set, and it stays outside the hashed manifest region either way.

Every file embeds the run manifest hash: CSVs as a leading ``# run`` comment
line, JSON as a ``manifest`` object.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone

from .assess import FUNCTIONAL_UNIT, CropAssessment, PairComparison
from .economics import SweepPoint
from .inventory import Phase

__all__ = ["RunManifest", "build_manifest", "write_assessment",
           "write_comparison", "write_sweep",
           "fmt_eur", "fmt_mg_co2e", "fmt_gj", "fmt_share"]

_TOOL = "cropgate"
_VERSION = "1.0.0"

# fixed report order for the life-cycle phases
_PHASE_ORDER = (Phase.SEED, Phase.FERTILIZER, Phase.PESTICIDE,
                Phase.FIELD_WORKS, Phase.FIELD_EMISSIONS, Phase.SOC)


def _fixed(value: float, decimals: int) -> str:
    rounded = round(value, decimals)
    if rounded == 0.0:
        rounded = 0.0  # avoid "-0.00"
    return f"{rounded:.{decimals}f}"


def fmt_eur(value: float) -> str:
    return _fixed(value, 2)


def fmt_mg_co2e(value: float) -> str:
    return _fixed(value, 3)


def fmt_gj(value: float) -> str:
    return _fixed(value, 1)


def fmt_share(value: float) -> str:
    return _fixed(value, 1)


@dataclass(frozen=True)
class RunManifest:
    tool: str
    version: str
    farm_path: str
    farm_sha256: str
    factors_path: str | None
    factors_sha256: str | None
    flags: dict[str, str]
    run_hash: str
    timestamp: str | None  # outside the hashed region

    def comment_line(self) -> str:
        return f"# run {self.run_hash}"

    def as_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "farm_path": self.farm_path,
            "farm_sha256": self.farm_sha256,
            "factors_path": self.factors_path,
            "factors_sha256": self.factors_sha256,
            "flags": dict(self.flags),
            "run_hash": self.run_hash,
            "timestamp": self.timestamp,
        }


def _sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_manifest(farm_path: str, factors_path: str | None,
                   flags: dict[str, object]) -> RunManifest:
    """Hash the run inputs. The hash covers content hashes, tool version and
    flags; file names and the optional timestamp stay outside it."""
    farm_hash = _sha256_file(farm_path)
    factors_hash = _sha256_file(factors_path) if factors_path else None
    flag_text = {key: str(value) for key, value in sorted(flags.items())}
    region = "\n".join(
        [f"tool={_TOOL} {_VERSION}", f"farm={farm_hash}",
         f"factors={factors_hash or 'none'}"]
        + [f"flag:{key}={value}" for key, value in flag_text.items()])
    run_hash = hashlib.sha256(region.encode("utf-8")).hexdigest()

    timestamp = None
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch:
        moment = datetime.fromtimestamp(int(epoch), tz=timezone.utc)
        timestamp = moment.strftime("%Y-%m-%dT%H:%M:%SZ")
    return RunManifest(
        tool=_TOOL, version=_VERSION,
        farm_path=os.path.basename(os.fspath(farm_path)),
        farm_sha256=farm_hash,
        factors_path=(os.path.basename(os.fspath(factors_path))
                      if factors_path else None),
        factors_sha256=factors_hash, flags=flag_text, run_hash=run_hash,
        timestamp=timestamp)


def _write(path: str, lines: list[str]) -> None:
    # newline="" so LF survives on every platform
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------- #
#  single-crop assessment
# ---------------------------------------------------------------------- #

def _balance_rows(result: CropAssessment) -> list[tuple[str, float]]:
    eco = result.economics
    return [
        ("seed_cost", eco.seed_cost),
        ("herbicide_cost", eco.herbicide_cost),
        ("fertilizer_cost", eco.fertilizer_cost),
        ("machinery_labor_cost", eco.machinery_labor_cost),
        ("total_cost", eco.total_cost),
        ("grain_sales", eco.grain_sales),
        ("straw_sales", eco.straw_sales),
        ("total_sales", eco.total_sales),
        ("balance_without_cap", eco.balance_without_cap),
        ("balance_with_cap", eco.balance_with_cap),
    ]


def _gwp_json(result: CropAssessment) -> dict:
    return {
        "by_phase_mg_co2e": {phase.value: result.gwp.by_phase[phase]
                             for phase in _PHASE_ORDER},
        "positive_total_mg_co2e": result.gwp.positive_total,
        "net_total_mg_co2e": result.gwp.net_total,
        "shares_pct": {phase.value: share
                       for phase, share in result.gwp_shares.items()},
        "missing_flows": list(result.gwp.missing),
    }


def _energy_json(result: CropAssessment) -> dict:
    energy = result.energy
    return {
        "renewable_by_phase_gj": {phase.value: energy.renewable_by_phase[phase]
                                  for phase in _PHASE_ORDER},
        "nonrenewable_by_phase_gj": {
            phase.value: energy.nonrenewable_by_phase[phase]
            for phase in _PHASE_ORDER},
        "renewable_total_gj": energy.renewable_total,
        "nonrenewable_total_gj": energy.nonrenewable_total,
        "total_gj": energy.total,
        "shares_pct": {phase.value: share
                       for phase, share in result.energy_shares.items()},
        "missing_flows": list(energy.missing),
    }


def _assessment_json(result: CropAssessment, manifest: RunManifest) -> dict:
    return {
        "manifest": manifest.as_dict(),
        "functional_unit": FUNCTIONAL_UNIT,
        "crop": result.crop_name,
        "economics_eur_ha": dict(_balance_rows(result)),
        "gwp": _gwp_json(result),
        "energy": _energy_json(result),
        "notes": list(result.notes),
    }


def write_assessment(result: CropAssessment, manifest: RunManifest,
                     out_dir: str, fmt: str = "csv") -> list[str]:
    """Emit the report files for one crop; returns the paths written.

    ``csv`` writes the three tables plus result.json; ``json`` writes only
    result.json.
    """
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    if fmt == "csv":
        lines = [manifest.comment_line(), "concept,eur_per_ha"]
        for concept, value in _balance_rows(result):
            lines.append(f"{concept},{fmt_eur(value)}")
        path = os.path.join(out_dir, "balance.csv")
        _write(path, lines)
        written.append(path)

        lines = [manifest.comment_line(), "phase,mg_co2e_per_ha_y,share_pct"]
        for phase in _PHASE_ORDER:
            share = result.gwp_shares.get(phase)
            lines.append(",".join([
                phase.value, fmt_mg_co2e(result.gwp.by_phase[phase]),
                fmt_share(share) if share is not None else ""]))
        lines.append(
            f"positive_total,{fmt_mg_co2e(result.gwp.positive_total)},"
            + (fmt_share(100.0) if result.gwp_shares else ""))
        lines.append(f"net_total,{fmt_mg_co2e(result.gwp.net_total)},")
        path = os.path.join(out_dir, "gwp_phases.csv")
        _write(path, lines)
        written.append(path)

        lines = [manifest.comment_line(),
                 "phase,renewable_gj_per_ha_y,nonrenewable_gj_per_ha_y,"
                 "total_gj_per_ha_y,share_pct"]
        energy = result.energy
        for phase in _PHASE_ORDER:
            ren = energy.renewable_by_phase[phase]
            non = energy.nonrenewable_by_phase[phase]
            share = result.energy_shares.get(phase)
            lines.append(",".join([
                phase.value, fmt_gj(ren), fmt_gj(non), fmt_gj(ren + non),
                fmt_share(share) if share is not None else ""]))
        lines.append(",".join([
            "total", fmt_gj(energy.renewable_total),
            fmt_gj(energy.nonrenewable_total), fmt_gj(energy.total),
            fmt_share(100.0) if result.energy_shares else ""]))
        path = os.path.join(out_dir, "energy_phases.csv")
        _write(path, lines)
        written.append(path)

    path = os.path.join(out_dir, "result.json")
    _write_json(path, _assessment_json(result, manifest))
    written.append(path)
    return written


# ---------------------------------------------------------------------- #
#  pair comparison
# ---------------------------------------------------------------------- #

def write_comparison(comparison: PairComparison, manifest: RunManifest,
                     out_dir: str, fmt: str = "csv") -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []
    first, second = comparison.first, comparison.second

    metrics = [
        ("balance_with_cap_eur_ha", fmt_eur,
         first.economics.balance_with_cap, second.economics.balance_with_cap),
        ("balance_without_cap_eur_ha", fmt_eur,
         first.economics.balance_without_cap,
         second.economics.balance_without_cap),
        ("farm_income_eur_y", fmt_eur, comparison.income_first.total_eur,
         comparison.income_second.total_eur),
        ("positive_gwp_mg_co2e", fmt_mg_co2e, first.gwp.positive_total,
         second.gwp.positive_total),
        ("net_gwp_mg_co2e", fmt_mg_co2e, first.gwp.net_total,
         second.gwp.net_total),
        ("primary_energy_gj", fmt_gj, first.energy.total,
         second.energy.total),
        ("renewable_energy_gj", fmt_gj, first.energy.renewable_total,
         second.energy.renewable_total),
        ("nonrenewable_energy_gj", fmt_gj, first.energy.nonrenewable_total,
         second.energy.nonrenewable_total),
    ]

    if fmt == "csv":
        lines = [manifest.comment_line(),
                 f"metric,{first.crop_name},{second.crop_name},difference"]
        for name, fmt_fn, a, b in metrics:
            lines.append(f"{name},{fmt_fn(a)},{fmt_fn(b)},{fmt_fn(a - b)}")
        for metric, winner in sorted(comparison.verdicts.items()):
            lines.append(f"verdict_{metric},{winner},,")
        path = os.path.join(out_dir, "comparison.csv")
        _write(path, lines)
        written.append(path)

    payload = {
        "manifest": manifest.as_dict(),
        "functional_unit": FUNCTIONAL_UNIT,
        "crops": [first.crop_name, second.crop_name],
        "metrics": {name: {first.crop_name: a, second.crop_name: b,
                           "difference": a - b}
                    for name, _, a, b in metrics},
        "margin_difference_eur_ha": comparison.margin_difference_eur_ha,
        "verdicts": dict(comparison.verdicts),
        "notes": sorted(set(first.notes) | set(second.notes)),
    }
    path = os.path.join(out_dir, "comparison.json")
    _write_json(path, payload)
    written.append(path)
    return written


# ---------------------------------------------------------------------- #
#  marginal-share sweep
# ---------------------------------------------------------------------- #

def write_sweep(points: list[SweepPoint], pair: tuple[str, str],
                manifest: RunManifest, out_dir: str,
                fmt: str = "csv") -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []
    first_name, second_name = pair

    if fmt == "csv":
        lines = [manifest.comment_line(),
                 f"share,income_{first_name},income_{second_name},"
                 "relative_difference_pct"]
        for point in points:
            lines.append(",".join([
                f"{point.share:.6f}", fmt_eur(point.income_first),
                fmt_eur(point.income_second),
                fmt_share(point.relative_difference * 100.0)]))
        path = os.path.join(out_dir, "sweep.csv")
        _write(path, lines)
        written.append(path)

    payload = {
        "manifest": manifest.as_dict(),
        "crops": [first_name, second_name],
        "points": [{
            "share": point.share,
            f"income_{first_name}": point.income_first,
            f"income_{second_name}": point.income_second,
            "relative_difference": point.relative_difference,
        } for point in points],
    }
    path = os.path.join(out_dir, "sweep.json")
    _write_json(path, payload)
    written.append(path)
    return written

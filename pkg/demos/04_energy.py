#!/usr/bin/env python3
"""Cumulative primary energy demand of the marginal pair, split by origin."""

from cropgate.assess import assess_crop, bundled_data_path, load_factors, \
    load_farm, resolve_factors_path
from cropgate.impact import ENERGY_PHASES


def main():
    farm_path = bundled_data_path("farm_soria.cg")
    model = load_farm(farm_path)
    db = load_factors(resolve_factors_path(farm_path, model))

    for name in model.marginal_pair:
        result = assess_crop(model, db, name)
        pe = result.energy
        print(f"{name}: {pe.total:.1f} GJ per ha and year")
        print(f"  {'phase':<16}{'renewable':>12}{'non-renew.':>12}"
              f"{'share %':>10}")
        for phase in ENERGY_PHASES:
            print(f"  {phase.value:<16}"
                  f"{pe.renewable_by_phase[phase]:12.2f}"
                  f"{pe.nonrenewable_by_phase[phase]:12.2f}"
                  f"{result.energy_shares[phase]:10.1f}")
        renew_share = pe.renewable_total / pe.total * 100
        print(f"  {'total':<16}{pe.renewable_total:12.2f}"
              f"{pe.nonrenewable_total:12.2f}")
        print(f"  renewable origin: {renew_share:.1f}%")
        print()

    # seed grown on the farm carries the biomass energy of the grain itself,
    # which is why the annual crop draws a much larger renewable share


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Cradle-to-farm-gate carbon footprint of the marginal pair.

Assembles the per-hectare life cycle inventory of each alternative, applies
GWP100 characterization, and prints the phase breakdown. The perennial's
soil organic carbon gain enters as a negative flow, so its net footprint
sits well below the sum of its burdens.
"""

from cropgate.assess import assess_crop, bundled_data_path, load_factors, \
    load_farm, resolve_factors_path
from cropgate.inventory import Phase


def main():
    farm_path = bundled_data_path("farm_soria.cg")
    model = load_farm(farm_path)
    db = load_factors(resolve_factors_path(farm_path, model))

    results = [assess_crop(model, db, name) for name in model.marginal_pair]

    print("GWP100 by phase, Mg CO2e per ha and year")
    names = [r.crop_name for r in results]
    print(f"  {'phase':<18}" + "".join(f"{n:>18}" for n in names))
    for phase in Phase:
        row = "".join(f"{r.gwp.by_phase[phase]:18.3f}" for r in results)
        print(f"  {phase.value:<18}" + row)
    print(f"  {'positive total':<18}"
          + "".join(f"{r.gwp.positive_total:18.3f}" for r in results))
    print(f"  {'net total':<18}"
          + "".join(f"{r.gwp.net_total:18.3f}" for r in results))
    print()

    print("share of the positive total, percent")
    print(f"  {'phase':<22}" + "".join(f"{n:>16}" for n in names))
    for phase, label in [(Phase.FERTILIZER, "fertilizer production"),
                         (Phase.FIELD_EMISSIONS, "field N2O"),
                         (Phase.FIELD_WORKS, "field works"),
                         (Phase.SEED, "seed supply"),
                         (Phase.PESTICIDE, "pesticide production")]:
        row = "".join(f"{r.gwp_shares[phase]:16.1f}" for r in results)
        print(f"  {label:<22}" + row)
    print()

    for r in results:
        credit = r.gwp.by_phase[Phase.SOC]
        if credit < 0:
            print(f"{r.crop_name}: soil carbon stores "
                  f"{-credit:.3f} Mg CO2e/ha each year, turning a "
                  f"{r.gwp.positive_total:.3f} burden into a "
                  f"{r.gwp.net_total:.3f} net footprint")
        else:
            print(f"{r.crop_name}: soil carbon at equilibrium, net equals "
                  f"the {r.gwp.positive_total:.3f} burden")


if __name__ == "__main__":
    main()

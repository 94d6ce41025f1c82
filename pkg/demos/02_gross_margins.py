#!/usr/bin/env python3
"""Crop budgets and whole-farm income.

Builds the annual gross margin of every crop in EUR/ha, with one-off
establishment costs spread over the amortization horizon, then totals the
farm income under each of the two marginal-land choices.
"""

from cropgate.assess import bundled_data_path, load_farm
from cropgate.economics import crop_balance, farm_income


def main():
    model = load_farm(bundled_data_path("farm_soria.cg"))
    horizon = model.amortization_horizon_years

    print("crop budgets, EUR/ha and year")
    cols = ("seed", "herb", "fert", "mach+lab", "cost", "sales",
            "balance", "with aid")
    print(f"  {'crop':<16}" + "".join(f"{c:>10}" for c in cols))
    for name in sorted(model.crops):
        bal = crop_balance(model.crop(name), model.cap_aid_eur_ha, horizon)
        print(f"  {name:<16}"
              f"{bal.seed_cost:10.2f}{bal.herbicide_cost:10.2f}"
              f"{bal.fertilizer_cost:10.2f}{bal.machinery_labor_cost:10.2f}"
              f"{bal.total_cost:10.2f}{bal.total_sales:10.2f}"
              f"{bal.balance_without_cap:10.2f}{bal.balance_with_cap:10.2f}")
    print()

    first, second = model.marginal_pair
    income_first = farm_income(model, first)
    income_second = farm_income(model, second)
    print("whole-farm income by marginal-land choice")
    print(f"  {first:<16} {income_first.total_eur:12.2f} EUR")
    print(f"  {second:<16} {income_second.total_eur:12.2f} EUR")
    gap = income_first.total_eur - income_second.total_eur
    print(f"  difference       {gap:12.2f} EUR "
          f"({gap / income_second.total_eur * 100:+.2f}% of the {second} farm)")
    print()

    # both farm totals share every non-marginal budget; the gap is just the
    # marginal area times the per-hectare balance difference
    area = model.crop(first).area_ha
    bal_first = crop_balance(model.crop(first), model.cap_aid_eur_ha, horizon)
    bal_second = crop_balance(model.crop(second), model.cap_aid_eur_ha,
                              horizon)
    per_ha = bal_first.balance_with_cap - bal_second.balance_with_cap
    print(f"check: {area:.0f} ha x {per_ha:.4f} EUR/ha = "
          f"{area * per_ha:.2f} EUR")


if __name__ == "__main__":
    main()

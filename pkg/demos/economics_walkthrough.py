"""Walk through the mining-ASIC business case: die cost, break-even,
and cluster power.

Run: python3 demos/economics_walkthrough.py
"""

from scryptforge.econ import (
    breakeven_days,
    breakeven_series,
    bruteforce_attack_days,
    cluster_power,
    collision_expectation,
    die_area_mm2,
    die_cost,
    load_econ_preset,
    revenue_per_day,
)


def main():
    preset = load_econ_preset()  # bundled 2014 baseline
    die, scenario = preset["die"], preset["scenario"]

    area = die_area_mm2(die)
    print(f"die: {die.cache_registers} cache registers x "
          f"{die.cache_cell_area_um2} um2 + {die.resolved_logic_area_um2:.0f} um2 "
          f"logic = {area:.5f} mm2")

    cost = die_cost(area, scenario)
    print(f"fabrication: {cost['eur']:.2f} EUR = {cost['usd']:.2f} USD "
          f"at {scenario.eur_usd_rate} USD/EUR")

    revenue = revenue_per_day(scenario)
    days = breakeven_days(cost["usd"], revenue)
    print(f"revenue: {revenue:.2f} USD/day at {scenario.asic_hashrate_mhs} MH/s "
          f"-> break-even in {days:.1f} days")

    # Net position over the first few weeks:
    for day, net in breakeven_series(cost["usd"], revenue, days=90)[::30]:
        print(f"  day {day:3d}: {net:+9.2f} USD")

    # Power to match the ASIC's rate with commodity hardware:
    comparison = cluster_power(preset["target_hashrate_khs"], preset["designs"])
    print(f"\npower to sustain {comparison.target_hashrate_khs / 1000:.0f} MH/s:")
    for entry in comparison.entries:
        print(f"  {entry.name:<11} {entry.units_needed:5d} units x "
              f"{entry.unit_watts:.0f} W = {entry.total_watts:8.0f} W")

    # Side calculations on memory-bound attack cost and hash-collision odds:
    attack = bruteforce_attack_days(75_000, 2, 1000, 60)
    print(f"\ntwo-word dictionary sweep (75k words, 1000 x 60 ns DRAM reads "
          f"per guess): {attack} days")
    print(f"expected 128-bit collisions at 52,500 hashes/year: "
          f"{collision_expectation(52_500, 128):.3e}")


if __name__ == "__main__":
    main()

"""Die-area/cost, revenue, break-even, cluster-power, and background
brute-force/collision arithmetic for the mining-ASIC business case.

Everything here is linear or ratio arithmetic; the big-number paths
(dictionary attacks, collision odds) use exact integer/Fraction math so
nothing silently overflows or underflows.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .perfmodel import bundled_data_path

__all__ = [
    "DieModel",
    "EconScenario",
    "ClusterDesign",
    "ClusterComparison",
    "die_area_mm2",
    "die_cost",
    "revenue_per_day",
    "power_cost_per_day",
    "breakeven_days",
    "breakeven_series",
    "breakeven_series_csv",
    "cluster_power",
    "bruteforce_attack_days",
    "collision_expectation",
    "load_econ_preset",
]

_SECONDS_PER_DAY = 86_400


@dataclass(frozen=True)
class DieModel:
    """Die composition: cache registers plus combinational logic.

    Logic is given either as a direct area or as gate count x average gate
    area, never both.
    """

    cache_registers: int
    cache_cell_area_um2: float
    logic_area_um2: float | None = None
    logic_gate_count: int | None = None
    avg_gate_area_um2: float | None = None
    process_node_nm: int | None = None

    def __post_init__(self):
        direct = self.logic_area_um2 is not None
        counted = self.logic_gate_count is not None or self.avg_gate_area_um2 is not None
        if direct and counted:
            raise ValueError("specify logic_area_um2 or gate-count form, not both")
        if not direct and (self.logic_gate_count is None or self.avg_gate_area_um2 is None):
            raise ValueError("gate-count form needs both logic_gate_count and avg_gate_area_um2")
        if self.cache_registers < 0 or self.cache_cell_area_um2 < 0:
            raise ValueError("cache parameters must be non-negative")

    @property
    def resolved_logic_area_um2(self) -> float:
        if self.logic_area_um2 is not None:
            return self.logic_area_um2
        return self.logic_gate_count * self.avg_gate_area_um2

    @property
    def cache_area_um2(self) -> float:
        return self.cache_registers * self.cache_cell_area_um2


@dataclass(frozen=True)
class EconScenario:
    """Fabrication, market, and power parameters."""

    eur_per_mm2: float
    eur_usd_rate: float
    revenue_usd_per_mhs_day: float
    asic_hashrate_mhs: float
    power_w: float

    def __post_init__(self):
        for name in ("eur_per_mm2", "eur_usd_rate", "revenue_usd_per_mhs_day",
                     "asic_hashrate_mhs", "power_w"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def die_area_mm2(die: DieModel) -> float:
    """Total die area in mm^2: cache registers x cell area plus logic area."""
    return (die.cache_area_um2 + die.resolved_logic_area_um2) / 1e6


def die_cost(area_mm2: float, scenario: EconScenario) -> dict:
    """Fabrication cost of the die in both currencies."""
    if area_mm2 < 0:
        raise ValueError("area must be non-negative")
    eur = area_mm2 * scenario.eur_per_mm2
    return {"eur": eur, "usd": eur * scenario.eur_usd_rate}


def revenue_per_day(scenario: EconScenario) -> float:
    """Gross mining revenue in USD/day, power costs excluded."""
    return scenario.asic_hashrate_mhs * scenario.revenue_usd_per_mhs_day


def power_cost_per_day(power_w: float, usd_per_kwh: float) -> float:
    """Electricity cost in USD/day for a constant draw."""
    if power_w < 0 or usd_per_kwh < 0:
        raise ValueError("power and tariff must be non-negative")
    return power_w / 1000.0 * 24.0 * usd_per_kwh


def breakeven_days(cost_usd: float, revenue_usd_per_day: float) -> float:
    """Days of revenue needed to recover the fabrication cost."""
    if revenue_usd_per_day <= 0:
        raise ValueError("revenue per day must be positive")
    if cost_usd < 0:
        raise ValueError("cost must be non-negative")
    return cost_usd / revenue_usd_per_day


def breakeven_series(cost_usd: float, revenue_usd_per_day: float,
                     days: int | None = None) -> list:
    """Cumulative net position per day: (day, cumulative_net_usd), starting
    at -cost and crossing zero at break-even."""
    if revenue_usd_per_day <= 0:
        raise ValueError("revenue per day must be positive")
    if days is None:
        days = int(breakeven_days(cost_usd, revenue_usd_per_day) * 1.5) + 1
    return [(day, day * revenue_usd_per_day - cost_usd) for day in range(days + 1)]


def breakeven_series_csv(cost_usd: float, revenue_usd_per_day: float,
                         days: int | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["day", "cumulative_net_usd"])
    for day, net in breakeven_series(cost_usd, revenue_usd_per_day, days):
        writer.writerow([day, f"{net:.2f}"])
    return buf.getvalue()


@dataclass(frozen=True)
class ClusterDesign:
    """One mining-hardware unit for aggregate power comparison."""

    name: str
    unit_hashrate_khs: float
    unit_watts: float

    def __post_init__(self):
        if self.unit_hashrate_khs <= 0:
            raise ValueError(f"{self.name}: unit hashrate must be positive")
        if self.unit_watts < 0:
            raise ValueError(f"{self.name}: unit watts must be non-negative")


@dataclass(frozen=True)
class ClusterEntry:
    name: str
    unit_hashrate_khs: float
    unit_watts: float
    units_needed: int
    total_watts: float

    @property
    def watts_per_mhs(self) -> float:
        return self.total_watts / (self.units_needed * self.unit_hashrate_khs / 1000.0)


@dataclass(frozen=True)
class ClusterComparison:
    target_hashrate_khs: float
    entries: list

    def to_dict(self) -> dict:
        return {
            "target_hashrate_khs": self.target_hashrate_khs,
            "designs": [
                {
                    "name": e.name,
                    "unit_hashrate_khs": e.unit_hashrate_khs,
                    "unit_watts": e.unit_watts,
                    "units_needed": e.units_needed,
                    "total_watts": e.total_watts,
                    "watts_per_mhs": e.watts_per_mhs,
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def cluster_power(target_hashrate_khs: float, designs: list) -> ClusterComparison:
    """Units and total watts for each design to reach the target rate.

    units_needed is the minimal unit count whose aggregate rate covers the
    target (exact ceiling via Fraction, no float drift).
    """
    if target_hashrate_khs <= 0:
        raise ValueError("target hashrate must be positive")
    entries = []
    for d in designs:
        ratio = Fraction(str(target_hashrate_khs)) / Fraction(str(d.unit_hashrate_khs))
        units = int(ratio) if ratio.denominator == 1 else int(ratio) + 1
        entries.append(ClusterEntry(
            name=d.name,
            unit_hashrate_khs=d.unit_hashrate_khs,
            unit_watts=d.unit_watts,
            units_needed=units,
            total_watts=units * d.unit_watts,
        ))
    return ClusterComparison(target_hashrate_khs=target_hashrate_khs, entries=entries)


def bruteforce_attack_days(dict_words: int, combo_length: int,
                           accesses_per_password: int, access_ns: int) -> float:
    """Days of pure memory-access time to sweep every word combination.

    dict_words^combo_length passwords, each costing accesses x latency.
    Exact integer/Fraction arithmetic; the word count alone can exceed
    2^53 so float intermediate products are not safe.
    """
    if dict_words < 1 or combo_length < 1 or accesses_per_password < 1:
        raise ValueError("dictionary size, combo length, and access count must be >= 1")
    if access_ns < 0:
        raise ValueError("access latency must be non-negative")
    total_ns = dict_words**combo_length * accesses_per_password * access_ns
    return float(Fraction(total_ns, 10**9 * _SECONDS_PER_DAY))


def collision_expectation(events_per_year: int, hash_bits: int) -> float:
    """Expected hash collisions per year: events / 2^hash_bits."""
    if events_per_year < 0:
        raise ValueError("events_per_year must be non-negative")
    if not 0 < hash_bits <= 512:
        raise ValueError("hash_bits must be in 1..512")
    return float(Fraction(events_per_year, 2**hash_bits))


def load_econ_preset(path=None) -> dict:
    """Load an economics preset JSON (the bundled 2014 baseline by default).

    Returns {"die": DieModel, "scenario": EconScenario, "designs": [...],
    "target_hashrate_khs": float}.
    """
    if path is None:
        path = bundled_data_path("paper-2014.json")
    with open(path) as fh:
        raw = json.load(fh)
    die_raw = raw["die"]
    scenario_raw = raw["scenario"]
    die = DieModel(
        cache_registers=die_raw["cache_registers"],
        cache_cell_area_um2=die_raw["cache_cell_area_um2"],
        logic_area_um2=die_raw.get("logic_area_um2"),
        logic_gate_count=die_raw.get("logic_gate_count"),
        avg_gate_area_um2=die_raw.get("avg_gate_area_um2"),
        process_node_nm=die_raw.get("process_node_nm"),
    )
    scenario = EconScenario(
        eur_per_mm2=scenario_raw["eur_per_mm2"],
        eur_usd_rate=scenario_raw["eur_usd_rate"],
        revenue_usd_per_mhs_day=scenario_raw["revenue_usd_per_mhs_day"],
        asic_hashrate_mhs=scenario_raw["asic_hashrate_mhs"],
        power_w=scenario_raw["power_w"],
    )
    designs = [
        ClusterDesign(
            name=d["name"],
            unit_hashrate_khs=d["unit_hashrate_khs"],
            unit_watts=d["unit_watts"],
        )
        for d in raw.get("cluster_designs", [])
    ]
    return {
        "die": die,
        "scenario": scenario,
        "designs": designs,
        "target_hashrate_khs": raw.get("target_hashrate_khs"),
    }

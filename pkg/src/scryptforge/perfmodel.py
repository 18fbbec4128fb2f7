"""Analytical ASIC cycle/throughput model and memory-technology comparison.

Cycle arithmetic is exact integer math: one ingest cycle per salsa call,
two half-blocks of four parallel quarter-round sections per double-round,
four double-rounds, one write-back cycle. With the defaults that is 34
cycles per salsa call and 139,264 per hash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

__all__ = [
    "AsicCycleModel",
    "MemoryTech",
    "MemoryRanking",
    "CacheSpec",
    "NotQuantifiableError",
    "salsa_cycles",
    "hash_cycles",
    "theoretical_hashrate",
    "max_clock_ghz",
    "rank_memory_techs",
    "load_memory_catalog",
    "load_cacti_summary",
    "bundled_data_path",
]


class NotQuantifiableError(ValueError):
    """Raised when a memory technology has no numeric latency to rank by."""


def bundled_data_path(name: str) -> Path:
    return Path(resources.files("scryptforge").joinpath("data", name))


@dataclass(frozen=True)
class AsicCycleModel:
    """Parameters of the cycle-count model for one scrypt core."""

    cycles_ingest_per_salsa: int = 1
    parallel_sections_per_half: int = 4
    halves_per_round_pair: int = 2
    round_pairs: int = 4
    cycles_writeback: int = 1
    salsa_calls_per_hash: int = 4096
    clock_period_ns: float = 1.0
    memory_stall_cycles_per_hash: int = 0  # beyond the 1-cycle ingest; default none

    def __post_init__(self):
        for name in ("cycles_ingest_per_salsa", "parallel_sections_per_half",
                     "halves_per_round_pair", "round_pairs", "cycles_writeback",
                     "salsa_calls_per_hash"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.clock_period_ns <= 0:
            raise ValueError("clock_period_ns must be positive")
        if self.memory_stall_cycles_per_hash < 0:
            raise ValueError("memory_stall_cycles_per_hash must be non-negative")


def salsa_cycles(model: AsicCycleModel) -> int:
    """Cycles per salsa call: ingest + halves x sections x round-pairs + write-back."""
    return (model.cycles_ingest_per_salsa
            + model.halves_per_round_pair
            * model.parallel_sections_per_half
            * model.round_pairs
            + model.cycles_writeback)


def hash_cycles(model: AsicCycleModel) -> int:
    """Cycles per scrypt hash: salsa cycles times calls per hash, plus any
    configured memory-stall allowance."""
    return (salsa_cycles(model) * model.salsa_calls_per_hash
            + model.memory_stall_cycles_per_hash)


def theoretical_hashrate(model: AsicCycleModel) -> int:
    """Hash throughput in whole H/s at the model's clock period."""
    return int(10**9 // (hash_cycles(model) * model.clock_period_ns))


@dataclass(frozen=True)
class MemoryTech:
    """One memory technology's latency/area/volatility record."""

    name: str
    read_ns: float | None = None
    write_ns: float | None = None
    volatile: bool | None = None
    notes: str = ""
    cell_area_um2_per_bit: float | None = None
    latency_range_ns: tuple | None = None

    def __post_init__(self):
        for attr in ("read_ns", "write_ns"):
            value = getattr(self, attr)
            if value is not None and value <= 0:
                raise ValueError(f"{self.name}: {attr} must be positive")

    @property
    def quantifiable(self) -> bool:
        return self.read_ns is not None or self.write_ns is not None

    @property
    def effective_latency_ns(self) -> float:
        """Ranking latency: the worse of read/write when both are known."""
        if not self.quantifiable:
            raise NotQuantifiableError(
                f"{self.name} has no numeric read or write latency")
        candidates = [v for v in (self.read_ns, self.write_ns) if v is not None]
        return max(candidates)


def max_clock_ghz(tech: MemoryTech) -> float:
    """Maximum clock supportable by the technology's read latency (GHz)."""
    if tech.read_ns is None:
        raise NotQuantifiableError(f"{tech.name} has no numeric read latency")
    return 1.0 / tech.read_ns


@dataclass(frozen=True)
class MemoryRanking:
    """Memory technologies sorted by effective latency; technologies with no
    numbers are listed separately with their notes."""

    ranked: list
    unranked: list

    def to_dict(self) -> dict:
        return {
            "ranked": [
                {
                    "name": t.name,
                    "effective_latency_ns": t.effective_latency_ns,
                    "read_ns": t.read_ns,
                    "write_ns": t.write_ns,
                    "volatile": t.volatile,
                    "notes": t.notes,
                }
                for t in self.ranked
            ],
            "unranked": [
                {"name": t.name, "volatile": t.volatile, "notes": t.notes}
                for t in self.unranked
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"{'rank':<5}{'technology':<12}{'latency (ns)':>14}  notes"]
        for i, t in enumerate(self.ranked, 1):
            lines.append(f"{i:<5}{t.name:<12}{t.effective_latency_ns:>14.3f}  {t.notes}")
        for t in self.unranked:
            lines.append(f"{'-':<5}{t.name:<12}{'n/a':>14}  {t.notes}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["name,effective_latency_ns"]
        for t in self.ranked:
            lines.append(f"{t.name},{t.effective_latency_ns}")
        return "\n".join(lines) + "\n"


def rank_memory_techs(catalog: list) -> MemoryRanking:
    """Rank quantifiable technologies by effective latency, ascending; ties
    break alphabetically by name."""
    if not catalog:
        raise ValueError("catalog must not be empty")
    quant = [t for t in catalog if t.quantifiable]
    rest = [t for t in catalog if not t.quantifiable]
    quant.sort(key=lambda t: (t.effective_latency_ns, t.name))
    return MemoryRanking(ranked=quant, unranked=rest)


def load_memory_catalog(path=None, pcram_latency_ns: float | None = None) -> list:
    """Load a memory-technology catalog from JSON (bundled by default).

    Entries carrying only a latency range get their evaluation point from
    pcram_latency_ns, defaulting to the range midpoint.
    """
    if path is None:
        path = bundled_data_path("memory_catalog.json")
    with open(path) as fh:
        raw = json.load(fh)
    techs = []
    for entry in raw:
        rng = entry.get("latency_range_ns")
        read_ns = entry.get("read_ns")
        write_ns = entry.get("write_ns")
        if rng is not None and read_ns is None and write_ns is None:
            point = pcram_latency_ns if pcram_latency_ns is not None \
                else (rng[0] + rng[1]) / 2
            read_ns = write_ns = point
        techs.append(MemoryTech(
            name=entry["name"],
            read_ns=read_ns,
            write_ns=write_ns,
            volatile=entry.get("volatile"),
            notes=entry.get("notes", ""),
            cell_area_um2_per_bit=entry.get("cell_area_um2_per_bit"),
            latency_range_ns=tuple(rng) if rng else None,
        ))
    return techs


@dataclass(frozen=True)
class CacheSpec:
    """Summary record of the 128 KB SRAM cache characterization."""

    access_time_ns: float
    cycle_time_ns: float
    dynamic_read_energy_nj: float
    leakage_mw: float
    data_area_mm2: float
    bank_size_bytes: int
    associativity: int
    block_size_bytes: int

    def __post_init__(self):
        for name in ("access_time_ns", "cycle_time_ns", "dynamic_read_energy_nj",
                     "leakage_mw", "data_area_mm2", "bank_size_bytes",
                     "associativity", "block_size_bytes"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def to_dict(self) -> dict:
        return {
            "access_time_ns": self.access_time_ns,
            "cycle_time_ns": self.cycle_time_ns,
            "dynamic_read_energy_nj": self.dynamic_read_energy_nj,
            "leakage_mw": self.leakage_mw,
            "data_area_mm2": self.data_area_mm2,
            "bank_size_bytes": self.bank_size_bytes,
            "associativity": self.associativity,
            "block_size_bytes": self.block_size_bytes,
        }


_CACHE_SPEC_KEYS = ("access_time_ns", "cycle_time_ns", "dynamic_read_energy_nj",
                    "leakage_mw", "data_area_mm2", "bank_size_bytes",
                    "associativity", "block_size_bytes")


def load_cacti_summary(path=None) -> CacheSpec:
    """Load the Cacti cache summary JSON (bundled 128 KB SRAM by default)."""
    if path is None:
        path = bundled_data_path("cacti_128kb_sram.json")
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"cacti summary {path}: invalid JSON: {exc}") from exc
    for key in _CACHE_SPEC_KEYS:
        if key not in raw:
            raise ValueError(f"cacti summary {path}: missing key '{key}'")
    return CacheSpec(**{key: raw[key] for key in _CACHE_SPEC_KEYS})

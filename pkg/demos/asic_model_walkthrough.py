"""Walk through the ASIC cycle model and the scratchpad memory comparison.

Run: python3 demos/asic_model_walkthrough.py
"""

from scryptforge.instrumentation import count_mem_ops, profile_phases
from scryptforge.perfmodel import (
    AsicCycleModel,
    hash_cycles,
    load_cacti_summary,
    load_memory_catalog,
    max_clock_ghz,
    rank_memory_techs,
    salsa_cycles,
    theoretical_hashrate,
)


def main():
    # The per-hash workload is fixed by the algorithm, not the hardware:
    counts = count_mem_ops(1)
    print(f"per hash: {counts.salsa_calls} salsa calls, "
          f"{counts.salsa_reads} word reads, {counts.salsa_writes} word writes, "
          f"{counts.scratchpad_bytes_written // 1024} KB scratchpad")

    # A pipelined core does one salsa call in 34 cycles: ingest the block,
    # 4 double-rounds of 2 half-blocks x 4 parallel quarter-round sections,
    # write back.
    model = AsicCycleModel()
    print(f"\ncycle model: {salsa_cycles(model)} cycles/salsa, "
          f"{hash_cycles(model)} cycles/hash, "
          f"{theoretical_hashrate(model)} H/s at a 1 ns clock")

    # What memory can feed that pipeline? Rank candidates by latency.
    ranking = rank_memory_techs(load_memory_catalog())
    print("\nscratchpad memory candidates:")
    print(ranking.to_table())
    sram = ranking.ranked[0]
    print(f"\n{sram.name} read latency supports a "
          f"{max_clock_ghz(sram):.2f} GHz clock")

    # The 128 KB SRAM characterization constrains the achievable clock.
    cache = load_cacti_summary()
    limited = AsicCycleModel(clock_period_ns=cache.access_time_ns)
    print(f"at the {cache.access_time_ns} ns cache access time: "
          f"{theoretical_hashrate(limited)} H/s")

    # Compare with the software kernel on this machine.
    breakdown = profile_phases(200)
    print(f"\nsoftware kernel: {breakdown.hash_rate:.0f} H/s; phase split:")
    for phase, fraction in breakdown.fractions.items():
        print(f"  {phase:<12} {fraction:6.1%}")


if __name__ == "__main__":
    main()

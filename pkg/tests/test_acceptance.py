"""End-to-end acceptance checks with pinned tolerances.

Each test prints a single PASS/FAIL line (run with -s or look at captured
output) so the suite doubles as a release checklist.
"""

import time

import numpy as np
import pytest

from scryptforge.econ import (
    bruteforce_attack_days,
    breakeven_days,
    cluster_power,
    collision_expectation,
    die_area_mm2,
    die_cost,
    load_econ_preset,
    revenue_per_day,
)
from scryptforge.instrumentation import count_mem_ops, profile_phases
from scryptforge.kernel import Scratchpad, scrypt_1024_1_1_256, xor_salsa8
from scryptforge.miner import (
    MAX_TARGET,
    BlockHeader,
    measure_hashrate,
    mine_range,
    serialize_header,
)
from scryptforge.perfmodel import (
    AsicCycleModel,
    hash_cycles,
    load_memory_catalog,
    max_clock_ghz,
    rank_memory_techs,
    salsa_cycles,
    theoretical_hashrate,
)

from _oracles import oracle_scrypt
from conftest import SALSA8_CORE_INPUT_HEX, SALSA8_CORE_OUTPUT_HEX


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_acceptance_1_kernel_correctness(scratchpad):
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        data = rng.bytes(80)
        if scrypt_1024_1_1_256(data, scratchpad) != oracle_scrypt(data):
            mismatches += 1
    elapsed = time.perf_counter() - t0

    block = np.frombuffer(bytes.fromhex(SALSA8_CORE_INPUT_HEX), dtype="<u4")
    core = xor_salsa8(block.copy(), np.zeros(16, dtype=np.uint32))
    core_ok = core.astype("<u4").tobytes().hex() == SALSA8_CORE_OUTPUT_HEX

    ok = mismatches == 0 and core_ok and elapsed < 10.0
    _report("kernel correctness", ok,
            f"{1000 - mismatches}/1000 oracle matches, core vector "
            f"{'ok' if core_ok else 'MISMATCH'}, {elapsed:.2f}s (< 10s)")


def test_acceptance_2_cycle_model():
    model = AsicCycleModel()
    per_salsa = salsa_cycles(model)
    per_hash = hash_cycles(model)
    rate = theoretical_hashrate(model)
    ok = (per_salsa, per_hash, rate) == (34, 139_264, 7180)
    _report("cycle model", ok,
            f"{per_salsa} cycles/salsa (want 34), {per_hash} cycles/hash "
            f"(want 139264), {rate} H/s at 1ns (want 7180)")


def test_acceptance_3_counter_consistency():
    counts = count_mem_ops(1)
    got = (counts.salsa_calls, counts.salsa_reads, counts.salsa_writes,
           counts.scratchpad_bytes_written)
    want = (4096, 196_608, 131_072, 131_072)
    _report("counter/model consistency", got == want,
            f"calls/reads/writes/bytes {got} (want {want})")


def test_acceptance_4_memory_ranking():
    catalog = load_memory_catalog()
    ranking = rank_memory_techs(catalog)
    first = ranking.ranked[0]
    clock = max_clock_ghz(first)
    ok = first.name == "SRAM" and abs(clock - 1.333) / 1.333 < 0.005
    _report("memory ranking", ok,
            f"fastest={first.name} (want SRAM), max clock {clock:.4f} GHz "
            f"(want 1.333 +/- 0.5%)")


def test_acceptance_5_economics_regression():
    preset = load_econ_preset()
    area = die_area_mm2(preset["die"])
    cost = die_cost(area, preset["scenario"])
    days = breakeven_days(cost["usd"], revenue_per_day(preset["scenario"]))
    comparison = cluster_power(preset["target_hashrate_khs"], preset["designs"])
    watts = {e.name: e.total_watts for e in comparison.entries}
    ok = (abs(area - 0.22748) / 0.22748 < 0.005
          and abs(cost["eur"] - 796.18) / 796.18 < 0.005
          and abs(cost["usd"] - 1087.26) / 1087.26 < 0.005
          and abs(days - 58.77) <= 2.0
          and watts["cpu"] == 84_000
          and watts["gpu"] == 3_000)
    _report("economics regression", ok,
            f"area {area:.5f} mm2, {cost['eur']:.2f} EUR, {cost['usd']:.2f} USD, "
            f"break-even {days:.2f} d, cluster {watts['cpu']:.0f}/{watts['gpu']:.0f} W "
            f"(want 0.22748/796.18/1087.26/58.77/84000/3000)")


def test_acceptance_6_background_formulas():
    attack = bruteforce_attack_days(75_000, 2, 1000, 60)
    collision = collision_expectation(52_500, 128)
    want_collision = 52_500 / 2**128
    ok = (attack == 3.90625
          and abs(collision - want_collision) <= abs(want_collision) * 1e-6)
    _report("background formulas", ok,
            f"attack {attack} d (want 3.90625 exactly), collision {collision:.6e} "
            f"(want {want_collision:.6e} to 6 sig figs)")


def test_acceptance_7_profiling():
    t0 = time.perf_counter()
    breakdown = profile_phases(1000, seed=0)
    salsa_fraction = breakdown.fractions["salsa_kernel"]
    rate = measure_hashrate(2.0)
    elapsed = time.perf_counter() - t0
    ok = salsa_fraction >= 0.45 and 1e3 <= rate <= 1e6 and elapsed < 60.0
    _report("profiling", ok,
            f"salsa phase {salsa_fraction:.1%} of wall time (want >= 45%), "
            f"{rate:.0f} H/s (want 1e3..1e6), {elapsed:.1f}s (< 60s)")


def test_acceptance_8_mining_determinism():
    rng = np.random.default_rng(8)
    t0 = time.perf_counter()
    disagreements = 0

    # 50 random headers at the max target: every nonce solves, so both
    # schedules must return the range start
    for _ in range(50):
        header = BlockHeader(1, rng.bytes(32), rng.bytes(32),
                             int(rng.integers(0, 2**32)), 0x1E0FFFF0, 0)
        start = int(rng.integers(0, 2**31))
        serial = mine_range(header, start, start + 15, MAX_TARGET, workers=1)
        threaded = mine_range(header, start, start + 15, MAX_TARGET, workers=4)
        if serial.found_nonce != threaded.found_nonce:
            disagreements += 1

    # oracle-derived solvable fixtures: plant the hit at a known nonce
    for planted in (0, 5, 13, 31):
        header = BlockHeader(1, rng.bytes(32), rng.bytes(32), 7, 0, 0)
        digest = oracle_scrypt(serialize_header(header.with_nonce(planted)))
        target = int.from_bytes(digest, "little")
        serial = mine_range(header, 0, 31, target, workers=1)
        threaded = mine_range(header, 0, 31, target, workers=4)
        if not (serial.found_nonce == threaded.found_nonce
                and serial.found_nonce is not None
                and serial.found_nonce <= planted):
            disagreements += 1

    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and elapsed < 30.0
    _report("mining determinism", ok,
            f"{disagreements} worker-count disagreements over 54 fixtures, "
            f"{elapsed:.1f}s (< 30s)")

"""Scrypt(1024,1,1) proof-of-work engine with instrumented profiling and
analytical ASIC cycle, memory-technology, and mining-economics models."""

from .hashcore import (
    be32_decode,
    be32_encode,
    hmac_sha256,
    le32_decode,
    le32_encode,
    pbkdf2_sha256,
    sha256,
)
from .kernel import (
    SALSA_CALLS_PER_HASH,
    SCRATCHPAD_BYTES,
    SCRATCHPAD_ROWS,
    SCRYPT_INPUT_BYTES,
    Scratchpad,
    romix,
    rotl32,
    scrypt_1024_1_1_256,
    xor_salsa8,
)
from .instrumentation import (
    MemOpCounts,
    PhaseBreakdown,
    count_mem_ops,
    profile_phases,
)
from .miner import (
    BlockHeader,
    MiningResult,
    deserialize_header,
    measure_hashrate,
    meets_target,
    mine_range,
    serialize_header,
    target_from_hex,
    target_to_hex,
)
from .perfmodel import (
    AsicCycleModel,
    CacheSpec,
    MemoryTech,
    NotQuantifiableError,
    hash_cycles,
    load_cacti_summary,
    load_memory_catalog,
    max_clock_ghz,
    rank_memory_techs,
    salsa_cycles,
    theoretical_hashrate,
)
from .econ import (
    ClusterDesign,
    DieModel,
    EconScenario,
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

__version__ = "0.1.0"

"""Counted and timed variants of the scrypt kernel.

count_mem_ops reproduces the static read/write accounting of the salsa
ingest/write-back blocks; profile_phases attributes wall time to the five
pipeline phases without perturbing digests.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

import numpy as np
from numba import njit, uint32

from .hashcore import _SHA256_IV, _as_u8, _pbkdf2_raw
from .kernel import (
    SALSA_CALLS_PER_HASH,
    SCRATCHPAD_BYTES,
    SCRATCHPAD_ROWS,
    Scratchpad,
    _romix_fill,
    _romix_mix,
)

__all__ = [
    "SALSA_READS_PER_CALL",
    "SALSA_WRITES_PER_CALL",
    "MemOpCounts",
    "PhaseBreakdown",
    "PHASE_NAMES",
    "count_mem_ops",
    "profile_phases",
    "scrypt_with_phases",
]

# Per salsa call, counting B/Bx array accesses (locals excluded):
# ingest 16 B-reads + 16 Bx-reads + 16 B-writes, write-back 16 B-reads
# + 16 B-writes.
SALSA_READS_PER_CALL = 48
SALSA_WRITES_PER_CALL = 32

PHASE_NAMES = ("pbkdf2_pre", "romix_fill", "romix_mix", "salsa_kernel", "pbkdf2_post")


@dataclass(frozen=True)
class MemOpCounts:
    """Memory-operation totals for a run of n hashes."""

    salsa_calls: int
    salsa_reads: int
    salsa_writes: int
    scratchpad_bytes_written: int
    scratchpad_bytes_read: int

    def to_dict(self) -> dict:
        return {
            "salsa_calls": self.salsa_calls,
            "salsa_reads": self.salsa_reads,
            "salsa_writes": self.salsa_writes,
            "scratchpad_bytes_written": self.scratchpad_bytes_written,
            "scratchpad_bytes_read": self.scratchpad_bytes_read,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def count_mem_ops(n_hashes: int) -> MemOpCounts:
    """Static memory-operation accounting for n_hashes kernel runs.

    Every counter is exactly linear in n_hashes: 4096 salsa calls per hash,
    48 reads / 32 writes per call, and one full 128 KB scratchpad write
    (fill) plus one full read (mix) per hash.
    """
    if n_hashes < 1:
        raise ValueError("n_hashes must be >= 1")
    calls = SALSA_CALLS_PER_HASH * n_hashes
    return MemOpCounts(
        salsa_calls=calls,
        salsa_reads=SALSA_READS_PER_CALL * calls,
        salsa_writes=SALSA_WRITES_PER_CALL * calls,
        scratchpad_bytes_written=SCRATCHPAD_BYTES * n_hashes,
        scratchpad_bytes_read=SCRATCHPAD_BYTES * n_hashes,
    )


@dataclass(frozen=True)
class PhaseBreakdown:
    """Wall-time attribution across the five pipeline phases."""

    phase_seconds: dict
    total_hashes: int
    total_seconds: float

    @property
    def hash_rate(self) -> float:
        return self.total_hashes / self.total_seconds

    @property
    def fractions(self) -> dict:
        attributed = sum(self.phase_seconds.values())
        return {name: self.phase_seconds[name] / attributed for name in PHASE_NAMES}

    def to_dict(self) -> dict:
        out = dict(self.fractions)
        out["total_hashes"] = self.total_hashes
        out["total_seconds"] = self.total_seconds
        out["hash_rate"] = self.hash_rate
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """Two-column CSV (phase, fraction) for plotting the breakdown."""
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["phase", "fraction"])
        for name, frac in self.fractions.items():
            writer.writerow([name, f"{frac:.6f}"])
        return buf.getvalue()


# Overhead-only twins of the ROMix loops, used to split the measured loop
# time into scratchpad traffic vs salsa compute without per-call timers
# (which would dominate the runtime they are meant to measure).

@njit(cache=True, nogil=True)
def _fill_overhead(X, V):
    for i in range(1024):
        for k in range(32):
            V[i, k] = X[k]


@njit(cache=True, nogil=True)
def _mix_overhead(X, V):
    for i in range(1024):
        j = X[16] & uint32(1023)
        for k in range(32):
            X[k] ^= V[j, k]


def _calibrate_overheads(scratchpad: Scratchpad, repeats: int = 30) -> tuple:
    """Median per-hash cost of the non-salsa part of each ROMix loop."""
    X = np.arange(32, dtype=np.uint32)
    fill_times, mix_times = [], []
    for _ in range(repeats):
        t0 = time.perf_counter()
        _fill_overhead(X, scratchpad.rows)
        t1 = time.perf_counter()
        _mix_overhead(X, scratchpad.rows)
        t2 = time.perf_counter()
        fill_times.append(t1 - t0)
        mix_times.append(t2 - t1)
    return float(np.median(fill_times)), float(np.median(mix_times))


def scrypt_with_phases(data: bytes, scratchpad: Scratchpad | None = None) -> tuple:
    """Scrypt digest plus raw per-phase boundary timings for one hash.

    Returns (digest, times) where times maps {pbkdf2_pre, romix_fill_loop,
    romix_mix_loop, pbkdf2_post} to seconds; the two loop entries still
    include their salsa time (profile_phases splits them out).
    """
    if len(data) != 80:
        raise ValueError(f"input must be exactly 80 bytes, got {len(data)}")
    if scratchpad is None:
        scratchpad = Scratchpad()
    inp = _as_u8(data)
    t0 = time.perf_counter()
    B = _pbkdf2_raw(inp, inp, 1, 128, _SHA256_IV)
    t1 = time.perf_counter()
    X = np.frombuffer(B.tobytes(), dtype="<u4").astype(np.uint32)
    _romix_fill(X, scratchpad.rows)
    t2 = time.perf_counter()
    _romix_mix(X, scratchpad.rows)
    t3 = time.perf_counter()
    B2 = X.astype("<u4").tobytes()
    digest = _pbkdf2_raw(inp, _as_u8(B2), 1, 32, _SHA256_IV).tobytes()
    t4 = time.perf_counter()
    times = {
        "pbkdf2_pre": t1 - t0,
        "romix_fill_loop": t2 - t1,
        "romix_mix_loop": t3 - t2,
        "pbkdf2_post": t4 - t3,
    }
    return digest, times


def profile_phases(n_hashes: int, seed: int = 0) -> PhaseBreakdown:
    """Profile n_hashes kernel runs over seeded random 80-byte inputs.

    Phase times come from monotonic timing around phase boundaries; the
    salsa_kernel share of each ROMix loop is separated with a calibrated
    measurement of the loop's scratchpad-only traffic, so instrumentation
    overhead stays negligible relative to an uninstrumented run.
    """
    if n_hashes < 1:
        raise ValueError("n_hashes must be >= 1")
    rng = np.random.default_rng(seed)
    inputs = [rng.bytes(80) for _ in range(n_hashes)]
    scratchpad = Scratchpad()

    scrypt_with_phases(inputs[0], scratchpad)  # warm the JIT outside the clock
    cal_fill, cal_mix = _calibrate_overheads(scratchpad)

    acc = {name: 0.0 for name in
           ("pbkdf2_pre", "romix_fill_loop", "romix_mix_loop", "pbkdf2_post")}
    t_start = time.perf_counter()
    for data in inputs:
        _, times = scrypt_with_phases(data, scratchpad)
        for name, dt in times.items():
            acc[name] += dt
    total_seconds = time.perf_counter() - t_start

    fill_overhead = min(acc["romix_fill_loop"], cal_fill * n_hashes)
    mix_overhead = min(acc["romix_mix_loop"], cal_mix * n_hashes)
    phase_seconds = {
        "pbkdf2_pre": acc["pbkdf2_pre"],
        "romix_fill": fill_overhead,
        "romix_mix": mix_overhead,
        "salsa_kernel": (acc["romix_fill_loop"] - fill_overhead)
        + (acc["romix_mix_loop"] - mix_overhead),
        "pbkdf2_post": acc["pbkdf2_post"],
    }
    return PhaseBreakdown(
        phase_seconds=phase_seconds,
        total_hashes=n_hashes,
        total_seconds=total_seconds,
    )

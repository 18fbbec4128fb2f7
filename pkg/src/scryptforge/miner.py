"""Block-header serialization, difficulty targets, and nonce-range search."""

from __future__ import annotations

import json
import struct
import threading
import time
from dataclasses import dataclass, replace

from .kernel import Scratchpad, scrypt_1024_1_1_256

__all__ = [
    "HEADER_BYTES",
    "MAX_TARGET",
    "BlockHeader",
    "MiningResult",
    "serialize_header",
    "deserialize_header",
    "target_from_hex",
    "target_to_hex",
    "meets_target",
    "mine_range",
    "measure_hashrate",
]

HEADER_BYTES = 80
MAX_TARGET = 2**256 - 1
_HEADER_STRUCT = struct.Struct("<I32s32sIII")


@dataclass(frozen=True)
class BlockHeader:
    """The 80-byte mining input. Hash fields are raw 32-byte strings in
    internal (little-endian) order; `bits` is carried opaque."""

    version: int
    prev_block_hash: bytes
    merkle_root: bytes
    time: int
    bits: int
    nonce: int

    def __post_init__(self):
        if len(self.prev_block_hash) != 32:
            raise ValueError("prev_block_hash must be 32 bytes")
        if len(self.merkle_root) != 32:
            raise ValueError("merkle_root must be 32 bytes")
        for name in ("version", "time", "bits", "nonce"):
            value = getattr(self, name)
            if not 0 <= value <= 0xFFFFFFFF:
                raise ValueError(f"{name} must fit in 32 bits, got {value}")

    def with_nonce(self, nonce: int) -> "BlockHeader":
        return replace(self, nonce=nonce)


def serialize_header(header: BlockHeader) -> bytes:
    """Serialize to the 80-byte wire form: fields in declaration order,
    integers little-endian, hash fields verbatim. Nonce sits at bytes 76-79."""
    return _HEADER_STRUCT.pack(
        header.version,
        header.prev_block_hash,
        header.merkle_root,
        header.time,
        header.bits,
        header.nonce,
    )


def deserialize_header(data: bytes) -> BlockHeader:
    """Exact inverse of serialize_header."""
    if len(data) != HEADER_BYTES:
        raise ValueError(f"header must be exactly {HEADER_BYTES} bytes, got {len(data)}")
    version, prev, merkle, time_, bits, nonce = _HEADER_STRUCT.unpack(data)
    return BlockHeader(version, prev, merkle, time_, bits, nonce)


def target_from_hex(text: str) -> int:
    """Parse a 64-hex-char difficulty target."""
    text = text.strip().lower()
    if len(text) != 64:
        raise ValueError(f"target must be 64 hex chars, got {len(text)}")
    return int(text, 16)


def target_to_hex(target: int) -> str:
    if not 0 <= target <= MAX_TARGET:
        raise ValueError("target out of 256-bit range")
    return f"{target:064x}"


def meets_target(digest: bytes, target: int) -> bool:
    """True iff the digest, read as a little-endian 256-bit integer, is at
    or below the target (boundary inclusive)."""
    return int.from_bytes(digest, "little") <= target


@dataclass(frozen=True)
class MiningResult:
    found_nonce: int | None
    hashes_tried: int
    elapsed_seconds: float

    @property
    def hash_rate(self) -> float:
        return self.hashes_tried / self.elapsed_seconds

    def to_dict(self) -> dict:
        return {
            "found_nonce": self.found_nonce,
            "hashes_tried": self.hashes_tried,
            "elapsed_seconds": self.elapsed_seconds,
            "hash_rate": self.hash_rate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _scan(prefix: bytes, start: int, end: int, target: int, shared: dict,
          lock: threading.Lock) -> tuple:
    """Scan nonces start..end ascending; stop at first hit, or once a hit
    strictly below this sub-range makes it unwinnable. Returns (hit, tried)."""
    scratchpad = Scratchpad()
    tried = 0
    for nonce in range(start, end + 1):
        best = shared["best"]
        if best is not None and best < start:
            break
        digest = scrypt_1024_1_1_256(prefix + nonce.to_bytes(4, "little"), scratchpad)
        tried += 1
        if int.from_bytes(digest, "little") <= target:
            with lock:
                if shared["best"] is None or nonce < shared["best"]:
                    shared["best"] = nonce
            return nonce, tried
    return None, tried


def mine_range(template: BlockHeader, nonce_start: int, nonce_end: int,
               target: int, workers: int = 1) -> MiningResult:
    """Search the inclusive nonce range ascending; the lowest solving nonce
    wins regardless of worker count. Counts every hash attempted."""
    if not 0 <= nonce_start <= 0xFFFFFFFF or not 0 <= nonce_end <= 0xFFFFFFFF:
        raise ValueError("nonce bounds must fit in 32 bits")
    if nonce_start > nonce_end:
        raise ValueError("empty nonce range: nonce_start > nonce_end")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    prefix = serialize_header(template)[:76]
    size = nonce_end - nonce_start + 1
    workers = min(workers, size)

    shared = {"best": None}
    lock = threading.Lock()
    t0 = time.perf_counter()
    if workers == 1:
        hit, tried = _scan(prefix, nonce_start, nonce_end, target, shared, lock)
        hits = [] if hit is None else [hit]
    else:
        # contiguous sub-ranges; a worker below a found nonce keeps scanning,
        # so the global minimum is always reported
        bounds = [nonce_start + (size * w) // workers for w in range(workers + 1)]
        results = [None] * workers
        counts = [0] * workers

        def run(w):
            results[w], counts[w] = _scan(
                prefix, bounds[w], bounds[w + 1] - 1, target, shared, lock)

        threads = [threading.Thread(target=run, args=(w,)) for w in range(workers)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        hits = [r for r in results if r is not None]
        tried = sum(counts)
    elapsed = time.perf_counter() - t0
    return MiningResult(
        found_nonce=min(hits) if hits else None,
        hashes_tried=tried,
        elapsed_seconds=elapsed,
    )


def measure_hashrate(duration_seconds: float, template: BlockHeader | None = None) -> float:
    """Hash distinct nonces against the wall clock for at least the given
    duration (>= 1 s) and report the observed rate in H/s."""
    if duration_seconds < 1:
        raise ValueError("duration must be >= 1 second")
    if template is None:
        template = BlockHeader(1, bytes(32), bytes(32), 0, 0, 0)
    prefix = serialize_header(template)[:76]
    scratchpad = Scratchpad()
    scrypt_1024_1_1_256(prefix + bytes(4), scratchpad)  # warm the JIT
    nonce = 0
    t0 = time.perf_counter()
    deadline = t0 + duration_seconds
    while time.perf_counter() < deadline:
        scrypt_1024_1_1_256(prefix + (nonce & 0xFFFFFFFF).to_bytes(4, "little"), scratchpad)
        nonce += 1
    return nonce / (time.perf_counter() - t0)

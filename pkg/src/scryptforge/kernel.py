"""The fixed-parameter scrypt pipeline: N=1024, r=1, p=1, dkLen=32.

PBKDF2 expands the 80-byte input into a 32-word state, ROMix shuttles that
state through a 128 KB scratchpad (1024 rows x 128 bytes), and PBKDF2
compresses the result back to 32 bytes.  The salsa core and the two ROMix
loops are numba-compiled; the state layout mirrors the miner convention:
two 16-word half-blocks, little-endian word ingest.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint32, uint64

from .hashcore import _SHA256_IV, _as_u8, _pbkdf2_raw

__all__ = [
    "SCRYPT_INPUT_BYTES",
    "SCRATCHPAD_ROWS",
    "SCRATCHPAD_BYTES",
    "STATE_WORDS",
    "SALSA_CALLS_PER_HASH",
    "Scratchpad",
    "rotl32",
    "xor_salsa8",
    "romix",
    "scrypt_1024_1_1_256",
]

SCRYPT_INPUT_BYTES = 80
SCRATCHPAD_ROWS = 1024
STATE_WORDS = 32
SCRATCHPAD_BYTES = SCRATCHPAD_ROWS * STATE_WORDS * 4  # 131,072
SALSA_CALLS_PER_HASH = 2 * 2 * SCRATCHPAD_ROWS  # 2 calls/iteration x 2 loops

_MASK32 = 0xFFFFFFFF
_M = uint64(0xFFFFFFFF)


def rotl32(a: int, b: int) -> int:
    """Circular left rotation of a 32-bit word. b must be in 1..31."""
    if not 1 <= b <= 31:
        raise ValueError(f"rotation amount must be in 1..31, got {b}")
    a &= _MASK32
    return ((a << b) | (a >> (32 - b))) & _MASK32


class Scratchpad:
    """One worker's 128 KB ROMix working set, reused across hashes.

    The fill phase rewrites every row before the mix phase reads any, so no
    zeroing between hashes is needed.
    """

    def __init__(self):
        self.rows = np.empty((SCRATCHPAD_ROWS, STATE_WORDS), dtype=np.uint32)

    @property
    def nbytes(self) -> int:
        return self.rows.nbytes


@njit(cache=True, nogil=True)
def _xor_salsa8(B, Bx):
    """B <- (B ^ Bx) + salsa20/8-rounds(B ^ Bx), all 32-bit wrapping."""
    for k in range(16):
        B[k] ^= Bx[k]
    x00 = uint64(B[0]);  x01 = uint64(B[1]);  x02 = uint64(B[2]);  x03 = uint64(B[3])
    x04 = uint64(B[4]);  x05 = uint64(B[5]);  x06 = uint64(B[6]);  x07 = uint64(B[7])
    x08 = uint64(B[8]);  x09 = uint64(B[9]);  x10 = uint64(B[10]); x11 = uint64(B[11])
    x12 = uint64(B[12]); x13 = uint64(B[13]); x14 = uint64(B[14]); x15 = uint64(B[15])
    for _ in range(4):
        # columns
        t = (x00 + x12) & _M; x04 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x05 + x01) & _M; x09 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x10 + x06) & _M; x14 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x15 + x11) & _M; x03 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x04 + x00) & _M; x08 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x09 + x05) & _M; x13 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x14 + x10) & _M; x02 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x03 + x15) & _M; x07 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x08 + x04) & _M; x12 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x13 + x09) & _M; x01 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x02 + x14) & _M; x06 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x07 + x03) & _M; x11 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x12 + x08) & _M; x00 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x01 + x13) & _M; x05 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x06 + x02) & _M; x10 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x11 + x07) & _M; x15 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        # rows
        t = (x00 + x03) & _M; x01 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x05 + x04) & _M; x06 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x10 + x09) & _M; x11 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x15 + x14) & _M; x12 ^= ((t << uint64(7)) | (t >> uint64(25))) & _M
        t = (x01 + x00) & _M; x02 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x06 + x05) & _M; x07 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x11 + x10) & _M; x08 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x12 + x15) & _M; x13 ^= ((t << uint64(9)) | (t >> uint64(23))) & _M
        t = (x02 + x01) & _M; x03 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x07 + x06) & _M; x04 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x08 + x11) & _M; x09 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x13 + x12) & _M; x14 ^= ((t << uint64(13)) | (t >> uint64(19))) & _M
        t = (x03 + x02) & _M; x00 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x04 + x07) & _M; x05 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x09 + x08) & _M; x10 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
        t = (x14 + x13) & _M; x15 ^= ((t << uint64(18)) | (t >> uint64(14))) & _M
    B[0] = uint32((uint64(B[0]) + x00) & _M)
    B[1] = uint32((uint64(B[1]) + x01) & _M)
    B[2] = uint32((uint64(B[2]) + x02) & _M)
    B[3] = uint32((uint64(B[3]) + x03) & _M)
    B[4] = uint32((uint64(B[4]) + x04) & _M)
    B[5] = uint32((uint64(B[5]) + x05) & _M)
    B[6] = uint32((uint64(B[6]) + x06) & _M)
    B[7] = uint32((uint64(B[7]) + x07) & _M)
    B[8] = uint32((uint64(B[8]) + x08) & _M)
    B[9] = uint32((uint64(B[9]) + x09) & _M)
    B[10] = uint32((uint64(B[10]) + x10) & _M)
    B[11] = uint32((uint64(B[11]) + x11) & _M)
    B[12] = uint32((uint64(B[12]) + x12) & _M)
    B[13] = uint32((uint64(B[13]) + x13) & _M)
    B[14] = uint32((uint64(B[14]) + x14) & _M)
    B[15] = uint32((uint64(B[15]) + x15) & _M)


@njit(cache=True, nogil=True)
def _romix_fill(X, V):
    """Phase 1: write V row i, then the two half-block salsa calls."""
    for i in range(1024):
        for k in range(32):
            V[i, k] = X[k]
        _xor_salsa8(X[:16], X[16:])
        _xor_salsa8(X[16:], X[:16])


@njit(cache=True, nogil=True)
def _romix_mix(X, V):
    """Phase 2: data-dependent row revisit keyed by X[16], then salsa."""
    for i in range(1024):
        j = X[16] & uint32(1023)
        for k in range(32):
            X[k] ^= V[j, k]
        _xor_salsa8(X[:16], X[16:])
        _xor_salsa8(X[16:], X[:16])


def _as_block(b, name: str) -> np.ndarray:
    arr = np.asarray(b, dtype=np.uint32)
    if arr.shape != (16,):
        raise ValueError(f"{name} must be 16 words, got shape {arr.shape}")
    return arr


def xor_salsa8(B, Bx) -> np.ndarray:
    """Fused miner salsa: B <- (B ^ Bx) + salsa20/8-rounds(B ^ Bx).

    B and Bx are 16-word blocks; B is updated in place when already a
    uint32 array, and the updated block is returned either way.
    """
    B = _as_block(B, "B")
    Bx = _as_block(Bx, "Bx")
    _xor_salsa8(B, Bx)
    return B


def romix(X, V=None) -> np.ndarray:
    """Sequential memory-hard mix of a 32-word state through the 1024-row
    scratchpad: fill phase then data-dependent mix phase, 4096 salsa calls
    total.  Mutates and returns X."""
    X = np.asarray(X, dtype=np.uint32)
    if X.shape != (STATE_WORDS,):
        raise ValueError(f"state must be {STATE_WORDS} words, got shape {X.shape}")
    if V is None:
        V = Scratchpad()
    rows = V.rows if isinstance(V, Scratchpad) else np.asarray(V, dtype=np.uint32)
    if rows.shape != (SCRATCHPAD_ROWS, STATE_WORDS):
        raise ValueError(f"scratchpad must be {SCRATCHPAD_ROWS}x{STATE_WORDS} words")
    _romix_fill(X, rows)
    _romix_mix(X, rows)
    return X


def scrypt_1024_1_1_256(data: bytes, scratchpad: Scratchpad | None = None) -> bytes:
    """Scrypt(N=1024, r=1, p=1) digest of an 80-byte block header.

    The input serves as both password and salt for the PBKDF2 stages.
    Returns the 32-byte digest.
    """
    if len(data) != SCRYPT_INPUT_BYTES:
        raise ValueError(f"input must be exactly {SCRYPT_INPUT_BYTES} bytes, got {len(data)}")
    if scratchpad is None:
        scratchpad = Scratchpad()
    inp = _as_u8(data)
    B = _pbkdf2_raw(inp, inp, 1, 128, _SHA256_IV)
    # le32 ingest: X[k] = le32_decode(B[4k..4k+4])
    X = np.frombuffer(B.tobytes(), dtype="<u4").astype(np.uint32)
    _romix_fill(X, scratchpad.rows)
    _romix_mix(X, scratchpad.rows)
    B2 = X.astype("<u4").tobytes()  # le32 write-back
    return _pbkdf2_raw(inp, _as_u8(B2), 1, 32, _SHA256_IV).tobytes()

"""SHA-256 family primitives and 32-bit word codecs.

Everything here is implemented in-repo (no hashlib delegation) so the rest of
the package can reason about, count, and accelerate every hash invocation.
The compression function and the one-shot fast paths are JIT-compiled with
numba; the streaming classes are plain Python on top of the same compression
kernel, so both routes produce identical bits.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint32, uint64

__all__ = [
    "be32_decode",
    "be32_encode",
    "le32_decode",
    "le32_encode",
    "Sha256",
    "sha256",
    "HmacSha256",
    "hmac_sha256",
    "pbkdf2_sha256",
]

_MASK32 = 0xFFFFFFFF

# ---------------------------------------------------------------------------
# word codecs

def be32_decode(data: bytes) -> int:
    """Decode 4 octets big-endian: octet 0 is most significant."""
    if len(data) != 4:
        raise ValueError(f"be32_decode needs exactly 4 bytes, got {len(data)}")
    return int.from_bytes(data, "big")


def be32_encode(word: int) -> bytes:
    """Encode a 32-bit word big-endian; exact inverse of be32_decode."""
    return (word & _MASK32).to_bytes(4, "big")


def le32_decode(data: bytes) -> int:
    """Decode 4 octets little-endian: octet 0 is least significant."""
    if len(data) != 4:
        raise ValueError(f"le32_decode needs exactly 4 bytes, got {len(data)}")
    return int.from_bytes(data, "little")


def le32_encode(word: int) -> bytes:
    """Encode a 32-bit word little-endian; exact inverse of le32_decode."""
    return (word & _MASK32).to_bytes(4, "little")


# ---------------------------------------------------------------------------
# SHA-256 core

_SHA256_IV = np.array(
    [0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
     0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19],
    dtype=np.uint32,
)

_SHA256_K = np.array(
    [0x428A2F98, 0x71374491, 0xB5C0FBCF, 0xE9B5DBA5,
     0x3956C25B, 0x59F111F1, 0x923F82A4, 0xAB1C5ED5,
     0xD807AA98, 0x12835B01, 0x243185BE, 0x550C7DC3,
     0x72BE5D74, 0x80DEB1FE, 0x9BDC06A7, 0xC19BF174,
     0xE49B69C1, 0xEFBE4786, 0x0FC19DC6, 0x240CA1CC,
     0x2DE92C6F, 0x4A7484AA, 0x5CB0A9DC, 0x76F988DA,
     0x983E5152, 0xA831C66D, 0xB00327C8, 0xBF597FC7,
     0xC6E00BF3, 0xD5A79147, 0x06CA6351, 0x14292967,
     0x27B70A85, 0x2E1B2138, 0x4D2C6DFC, 0x53380D13,
     0x650A7354, 0x766A0ABB, 0x81C2C92E, 0x92722C85,
     0xA2BFE8A1, 0xA81A664B, 0xC24B8B70, 0xC76C51A3,
     0xD192E819, 0xD6990624, 0xF40E3585, 0x106AA070,
     0x19A4C116, 0x1E376C08, 0x2748774C, 0x34B0BCB5,
     0x391C0CB3, 0x4ED8AA4A, 0x5B9CCA4F, 0x682E6FF3,
     0x748F82EE, 0x78A5636F, 0x84C87814, 0x8CC70208,
     0x90BEFFFA, 0xA4506CEB, 0xBEF9A3F7, 0xC67178F2],
    dtype=np.uint32,
)

_M64 = uint64(0xFFFFFFFF)


@njit(cache=True, nogil=True)
def _compress(state, block):
    """One SHA-256 compression round. state: uint32[8], block: uint8[64]."""
    w = np.empty(64, dtype=np.uint64)
    for t in range(16):
        w[t] = (
            (uint64(block[4 * t]) << uint64(24))
            | (uint64(block[4 * t + 1]) << uint64(16))
            | (uint64(block[4 * t + 2]) << uint64(8))
            | uint64(block[4 * t + 3])
        )
    for t in range(16, 64):
        x = w[t - 15]
        s0 = (((x >> uint64(7)) | (x << uint64(25)))
              ^ ((x >> uint64(18)) | (x << uint64(14)))
              ^ (x >> uint64(3))) & _M64
        x = w[t - 2]
        s1 = (((x >> uint64(17)) | (x << uint64(15)))
              ^ ((x >> uint64(19)) | (x << uint64(13)))
              ^ (x >> uint64(10))) & _M64
        w[t] = (w[t - 16] + s0 + w[t - 7] + s1) & _M64

    a = uint64(state[0]); b = uint64(state[1]); c = uint64(state[2]); d = uint64(state[3])
    e = uint64(state[4]); f = uint64(state[5]); g = uint64(state[6]); h = uint64(state[7])
    for t in range(64):
        s1 = (((e >> uint64(6)) | (e << uint64(26)))
              ^ ((e >> uint64(11)) | (e << uint64(21)))
              ^ ((e >> uint64(25)) | (e << uint64(7)))) & _M64
        ch = (e & f) ^ ((~e) & g)
        t1 = (h + s1 + (ch & _M64) + uint64(_SHA256_K[t]) + w[t]) & _M64
        s0 = (((a >> uint64(2)) | (a << uint64(30)))
              ^ ((a >> uint64(13)) | (a << uint64(19)))
              ^ ((a >> uint64(22)) | (a << uint64(10)))) & _M64
        maj = (a & b) ^ (a & c) ^ (b & c)
        t2 = (s0 + (maj & _M64)) & _M64
        h = g; g = f; f = e
        e = (d + t1) & _M64
        d = c; c = b; b = a
        a = (t1 + t2) & _M64
    state[0] = uint32((uint64(state[0]) + a) & _M64)
    state[1] = uint32((uint64(state[1]) + b) & _M64)
    state[2] = uint32((uint64(state[2]) + c) & _M64)
    state[3] = uint32((uint64(state[3]) + d) & _M64)
    state[4] = uint32((uint64(state[4]) + e) & _M64)
    state[5] = uint32((uint64(state[5]) + f) & _M64)
    state[6] = uint32((uint64(state[6]) + g) & _M64)
    state[7] = uint32((uint64(state[7]) + h) & _M64)


@njit(cache=True, nogil=True)
def _digest_raw(msg, iv):
    """Full SHA-256 over msg (uint8[:]) starting from iv; returns uint8[32]."""
    state = iv.copy()
    n = msg.shape[0]
    full = n // 64
    for i in range(full):
        _compress(state, msg[64 * i:64 * i + 64])
    # padding: 0x80, zeros, 64-bit big-endian bit length
    rem = n - 64 * full
    tail = np.zeros(128, dtype=np.uint8)
    for i in range(rem):
        tail[i] = msg[64 * full + i]
    tail[rem] = 0x80
    tail_len = 64 if rem < 56 else 128
    bitlen = uint64(n) * uint64(8)
    for i in range(8):
        tail[tail_len - 1 - i] = uint32((bitlen >> uint64(8 * i)) & uint64(0xFF))
    _compress(state, tail[0:64])
    if tail_len == 128:
        _compress(state, tail[64:128])
    out = np.empty(32, dtype=np.uint8)
    for i in range(8):
        out[4 * i] = uint32((uint64(state[i]) >> uint64(24)) & uint64(0xFF))
        out[4 * i + 1] = uint32((uint64(state[i]) >> uint64(16)) & uint64(0xFF))
        out[4 * i + 2] = uint32((uint64(state[i]) >> uint64(8)) & uint64(0xFF))
        out[4 * i + 3] = uint32(uint64(state[i]) & uint64(0xFF))
    return out


@njit(cache=True, nogil=True)
def _hmac_raw(key, msg, iv):
    """HMAC-SHA256(key, msg) over uint8 arrays; returns uint8[32]."""
    k = key
    if k.shape[0] > 64:
        k = _digest_raw(k, iv)
    inner = np.empty(64 + msg.shape[0], dtype=np.uint8)
    for i in range(64):
        inner[i] = 0x36
    for i in range(k.shape[0]):
        inner[i] ^= k[i]
    for i in range(msg.shape[0]):
        inner[64 + i] = msg[i]
    ihash = _digest_raw(inner, iv)
    outer = np.empty(96, dtype=np.uint8)
    for i in range(64):
        outer[i] = 0x5C
    for i in range(k.shape[0]):
        outer[i] ^= k[i]
    for i in range(32):
        outer[64 + i] = ihash[i]
    return _digest_raw(outer, iv)


@njit(cache=True, nogil=True)
def _pbkdf2_raw(passwd, salt, c, dklen, iv):
    """PBKDF2-HMAC-SHA256 over uint8 arrays; returns uint8[dklen]."""
    out = np.empty(dklen, dtype=np.uint8)
    nblocks = (dklen + 31) // 32
    sblock = np.empty(salt.shape[0] + 4, dtype=np.uint8)
    for i in range(salt.shape[0]):
        sblock[i] = salt[i]
    for blk in range(1, nblocks + 1):
        # big-endian block counter appended to the salt
        sblock[salt.shape[0]] = uint32((blk >> 24) & 0xFF)
        sblock[salt.shape[0] + 1] = uint32((blk >> 16) & 0xFF)
        sblock[salt.shape[0] + 2] = uint32((blk >> 8) & 0xFF)
        sblock[salt.shape[0] + 3] = uint32(blk & 0xFF)
        u = _hmac_raw(passwd, sblock, iv)
        t = u.copy()
        for _ in range(c - 1):
            u = _hmac_raw(passwd, u, iv)
            for k in range(32):
                t[k] ^= u[k]
        off = 32 * (blk - 1)
        end = min(off + 32, dklen)
        for k in range(end - off):
            out[off + k] = t[k]
    return out


def _as_u8(data: bytes) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8)


# ---------------------------------------------------------------------------
# streaming API

class Sha256:
    """Streaming SHA-256 (FIPS 180). Any partition of the message into
    update() calls yields the same digest."""

    digest_size = 32
    block_size = 64

    def __init__(self, data: bytes = b""):
        self._state = _SHA256_IV.copy()
        self._buffer = bytearray()
        self._length = 0
        if data:
            self.update(data)

    def update(self, data: bytes) -> None:
        self._buffer += data
        self._length += len(data)
        nfull = len(self._buffer) // 64
        if nfull:
            blocks = _as_u8(self._buffer[:64 * nfull])
            for i in range(nfull):
                _compress(self._state, blocks[64 * i:64 * i + 64])
            del self._buffer[:64 * nfull]

    def copy(self) -> "Sha256":
        clone = Sha256.__new__(Sha256)
        clone._state = self._state.copy()
        clone._buffer = bytearray(self._buffer)
        clone._length = self._length
        return clone

    def digest(self) -> bytes:
        state = self._state.copy()
        tail = bytearray(self._buffer)
        tail.append(0x80)
        while len(tail) % 64 != 56:
            tail.append(0)
        tail += (self._length * 8).to_bytes(8, "big")
        blocks = _as_u8(bytes(tail))
        for i in range(len(tail) // 64):
            _compress(state, blocks[64 * i:64 * i + 64])
        return b"".join(be32_encode(int(w)) for w in state)

    def hexdigest(self) -> str:
        return self.digest().hex()


def sha256(message: bytes) -> bytes:
    """One-shot SHA-256 digest (32 bytes)."""
    return _digest_raw(_as_u8(message), _SHA256_IV).tobytes()


class HmacSha256:
    """Streaming HMAC-SHA256 with the init/update/final lifecycle.

    Keys longer than one block are first hashed.  final() consumes the
    state; a second final() raises.
    """

    def __init__(self, key: bytes):
        if len(key) > 64:
            key = sha256(key)
        self._inner = Sha256(bytes(b ^ 0x36 for b in key.ljust(64, b"\x00")))
        self._outer = Sha256(bytes(b ^ 0x5C for b in key.ljust(64, b"\x00")))
        self._finalized = False

    def update(self, data: bytes) -> None:
        if self._finalized:
            raise RuntimeError("HMAC state already finalized")
        self._inner.update(data)

    def copy(self) -> "HmacSha256":
        if self._finalized:
            raise RuntimeError("HMAC state already finalized")
        clone = HmacSha256.__new__(HmacSha256)
        clone._inner = self._inner.copy()
        clone._outer = self._outer.copy()
        clone._finalized = False
        return clone

    def final(self) -> bytes:
        if self._finalized:
            raise RuntimeError("HMAC state already finalized")
        self._finalized = True
        self._outer.update(self._inner.digest())
        return self._outer.digest()


def hmac_sha256(key: bytes, message: bytes) -> bytes:
    """One-shot HMAC-SHA256 digest (32 bytes)."""
    return _hmac_raw(_as_u8(key), _as_u8(message), _SHA256_IV).tobytes()


def pbkdf2_sha256(passwd: bytes, salt: bytes, c: int, dklen: int) -> bytes:
    """PBKDF2 with HMAC-SHA256 as the PRF.

    The block counter is appended big-endian.  dklen of 0 yields an empty
    key; an iteration count of 0 is a parameter error.
    """
    if c < 1:
        raise ValueError("iteration count must be >= 1")
    if dklen < 0 or dklen > 32 * (2**32 - 1):
        raise ValueError("dklen out of range")
    if dklen == 0:
        return b""
    return _pbkdf2_raw(_as_u8(passwd), _as_u8(salt), c, dklen, _SHA256_IV).tobytes()

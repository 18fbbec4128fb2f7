import numpy as np
import pytest

from scryptforge.kernel import Scratchpad, scrypt_1024_1_1_256


# Known-good fixtures, verified against the OpenSSL scrypt oracle and (for
# the genesis header) against public chain data before being pinned here.
ZERO_HEADER_DIGEST_HEX = (
    "161d0876f3b93b1048cda1bdeaa7332ee210f7131b42013cb43913a6553a4b69"
)
GENESIS_HEADER_HEX = (
    "010000000000000000000000000000000000000000000000000000000000000000000000"
    "d9ced4ed1130f7b7faad9be25323ffafa33232a17c3edf6cfd97bee6bafbdd97"
    "b9aa8e4ef0ff0f1ecd513f7c"
)
GENESIS_POW_DIGEST_HEX = (
    "001e67b013726fd7382e9acb69165b4b6316227fb3156b5b414ba6340c050000"
)
# sha256d block hash of the same header, displayed byte-reversed
GENESIS_BLOCK_HASH_DISPLAY = (
    "12a765e31ffd4059bada1e25190f6e98c99d9714d334efa41a195a7e7e04bfe2"
)

# Salsa20/8 core vector from the scrypt standardization
SALSA8_CORE_INPUT_HEX = (
    "7e879a214f3ec9867ca940e641718f26"
    "baee555b8c61c1b50df846116dcd3b1d"
    "ee24f319df9b3d8514121e4b5ac5aa32"
    "76021d2909c74829edebc68db8b8c25e"
)
SALSA8_CORE_OUTPUT_HEX = (
    "a41f859c6608cc993b81cacb020cef05"
    "044b2181a2fd337dfd7b1c6396682f29"
    "b4393168e3c9e6bcfe6bc5b7a06d96ba"
    "e424cc102c91745c24ad673dc7618f81"
)


@pytest.fixture(scope="session")
def scratchpad():
    return Scratchpad()


@pytest.fixture(scope="session", autouse=True)
def warm_jit(scratchpad):
    # compile the numba kernels once, outside any timed assertion
    scrypt_1024_1_1_256(bytes(80), scratchpad)


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)

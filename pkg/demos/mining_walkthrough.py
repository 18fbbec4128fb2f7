"""Walk through hashing a block header and searching a nonce range.

Run: python3 demos/mining_walkthrough.py
"""

from scryptforge.kernel import Scratchpad, scrypt_1024_1_1_256
from scryptforge.miner import (
    MAX_TARGET,
    BlockHeader,
    meets_target,
    mine_range,
    serialize_header,
    target_to_hex,
)


def main():
    # An 80-byte header: version, two 32-byte hash fields, time, bits, nonce.
    header = BlockHeader(
        version=1,
        prev_block_hash=bytes(32),
        merkle_root=bytes.fromhex("ab" * 32),
        time=1386325540,
        bits=0x1E0FFFF0,
        nonce=0,
    )
    raw = serialize_header(header)
    print(f"serialized header ({len(raw)} bytes): {raw.hex()}")

    # One scrypt(1024,1,1) proof-of-work hash of the header.
    scratchpad = Scratchpad()
    digest = scrypt_1024_1_1_256(raw, scratchpad)
    print(f"pow digest: {digest.hex()}")

    # A digest "wins" when its little-endian integer value is at or below
    # the difficulty target. Pick an easy target (top 12 bits zero) so the
    # demo finds a block in a few thousand attempts on average.
    target = MAX_TARGET >> 12
    print(f"target:     {target_to_hex(target)}")

    result = mine_range(header, nonce_start=0, nonce_end=100_000,
                        target=target, workers=4)
    print(f"tried {result.hashes_tried} nonces in {result.elapsed_seconds:.2f}s "
          f"({result.hash_rate:.0f} H/s)")
    if result.found_nonce is None:
        print("no solution in range")
        return
    print(f"found nonce {result.found_nonce}")

    winning = scrypt_1024_1_1_256(
        serialize_header(header.with_nonce(result.found_nonce)), scratchpad)
    print(f"winning digest: {winning.hex()}")
    assert meets_target(winning, target)


if __name__ == "__main__":
    main()

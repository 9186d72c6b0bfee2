"""Bit-exact codec for the 448-bit telemetry frame.

Frame layout (56 bytes total):

    [0:2)   asset ID (AAD), big-endian u16
    [2:14)  IV = counter (big-endian u32) || timestamp (big-endian u64)
    [14:56) ciphertext: 26-byte encrypted payload || 16-byte auth tag

All multibyte integers are big-endian.
"""

import struct
from typing import Sequence, Tuple

from .errors import MalformedFrame

AAD_LEN = 2
IV_LEN = 12
PAYLOAD_LEN = 26
TAG_LEN = 16
CIPHERTEXT_LEN = PAYLOAD_LEN + TAG_LEN  # 42
FRAME_LEN = AAD_LEN + IV_LEN + CIPHERTEXT_LEN  # 56

SGB_BITS = 202

ASSET_ID_MAX = 2**16 - 1
COUNTER_MAX = 2**32 - 1
TIMESTAMP_MAX = 2**64 - 1


def build_iv(counter: int, timestamp: int) -> bytes:
    """Compose the 96-bit nonce: counter || timestamp."""
    if not 0 <= counter <= COUNTER_MAX:
        raise ValueError("counter out of 32-bit range")
    if not 0 <= timestamp <= TIMESTAMP_MAX:
        raise ValueError("timestamp out of 64-bit range")
    return struct.pack(">IQ", counter, timestamp)


def split_iv(iv: bytes) -> Tuple[int, int]:
    """Inverse of build_iv: 12 bytes -> (counter, timestamp)."""
    if len(iv) != IV_LEN:
        raise ValueError(f"IV must be {IV_LEN} bytes, got {len(iv)}")
    counter, timestamp = struct.unpack(">IQ", iv)
    return counter, timestamp


def encode_frame(asset_id: int, iv: bytes, ciphertext: bytes) -> bytes:
    """Concatenate AAD || IV || ciphertext into the 56-byte wire frame."""
    if not 0 <= asset_id <= ASSET_ID_MAX:
        raise ValueError("asset ID out of 16-bit range")
    if len(iv) != IV_LEN:
        raise ValueError(f"IV must be {IV_LEN} bytes, got {len(iv)}")
    if len(ciphertext) != CIPHERTEXT_LEN:
        raise ValueError(
            f"ciphertext must be {CIPHERTEXT_LEN} bytes, got {len(ciphertext)}"
        )
    return struct.pack(">H", asset_id) + iv + ciphertext


def decode_frame(data: bytes) -> Tuple[int, bytes, bytes]:
    """Split a wire frame into (asset_id, iv, ciphertext).

    Raises MalformedFrame unless the input is exactly 56 bytes; this
    also realizes the |C| = 42 length check.
    """
    if len(data) != FRAME_LEN:
        raise MalformedFrame(f"frame must be {FRAME_LEN} bytes, got {len(data)}")
    (asset_id,) = struct.unpack(">H", data[:AAD_LEN])
    iv = data[AAD_LEN : AAD_LEN + IV_LEN]
    ciphertext = data[AAD_LEN + IV_LEN :]
    return asset_id, iv, ciphertext


def pack_sgb(bits: Sequence[int]) -> bytes:
    """Pack a 202-bit beacon payload into 26 bytes, MSB-aligned.

    The trailing 6 bits of the last byte are zero padding.
    """
    if len(bits) != SGB_BITS:
        raise ValueError(f"payload must be {SGB_BITS} bits, got {len(bits)}")
    value = 0
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        value = (value << 1) | bit
    return (value << 6).to_bytes(PAYLOAD_LEN, "big")


def unpack_sgb(data: bytes) -> Tuple[int, ...]:
    """Inverse of pack_sgb: 26 bytes -> 202 bits."""
    if len(data) != PAYLOAD_LEN:
        raise ValueError(f"payload must be {PAYLOAD_LEN} bytes, got {len(data)}")
    value = int.from_bytes(data, "big") >> 6
    return tuple((value >> (SGB_BITS - 1 - i)) & 1 for i in range(SGB_BITS))

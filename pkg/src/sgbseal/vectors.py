"""Flat key-value test-vector files, one `name = hexvalue` per line.

Fields and byte lengths mirror the frame layout: key 32, aad 2, counter 4,
timestamp 8, plaintext 26, ciphertext 26, tag 16, frame 56. Hex is
lowercase without separators.
"""

import binascii
from typing import Dict, Optional, Tuple

from . import aead, frame
from .errors import AuthenticationFailure, VectorFormatError

FIELD_LENGTHS = {
    "key": 32,
    "aad": 2,
    "counter": 4,
    "timestamp": 8,
    "plaintext": 26,
    "ciphertext": 26,
    "tag": 16,
    "frame": 56,
}

FIELD_ORDER = ("key", "aad", "counter", "timestamp", "plaintext",
               "ciphertext", "tag", "frame")


def parse_vector(text: str) -> Dict[str, bytes]:
    fields: Dict[str, bytes] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise VectorFormatError(f"line {lineno}: expected `name = hexvalue`")
        name, _, value = line.partition("=")
        name = name.strip()
        if name not in FIELD_LENGTHS:
            raise VectorFormatError(f"line {lineno}: unknown field {name!r}")
        try:
            data = binascii.unhexlify(value.strip())
        except (binascii.Error, ValueError):
            raise VectorFormatError(f"line {lineno}: invalid hex for {name!r}") from None
        if len(data) != FIELD_LENGTHS[name]:
            raise VectorFormatError(
                f"line {lineno}: {name!r} must be {FIELD_LENGTHS[name]} bytes, "
                f"got {len(data)}"
            )
        fields[name] = data
    missing = [name for name in FIELD_ORDER if name not in fields]
    if missing:
        raise VectorFormatError(f"missing fields: {', '.join(missing)}")
    return fields


def format_vector(fields: Dict[str, bytes]) -> str:
    lines = [f"{name} = {fields[name].hex()}" for name in FIELD_ORDER]
    return "\n".join(lines) + "\n"


def make_vector(key: bytes, asset_id: int, counter: int, timestamp: int,
                plaintext: bytes) -> Dict[str, bytes]:
    """Seal the inputs and assemble a complete vector record."""
    iv = frame.build_iv(counter, timestamp)
    sealed = aead.seal(key, iv, plaintext, asset_id)
    return {
        "key": key,
        "aad": asset_id.to_bytes(2, "big"),
        "counter": counter.to_bytes(4, "big"),
        "timestamp": timestamp.to_bytes(8, "big"),
        "plaintext": plaintext,
        "ciphertext": sealed[:26],
        "tag": sealed[26:],
        "frame": frame.encode_frame(asset_id, iv, sealed),
    }


def verify_vector(fields: Dict[str, bytes]) -> Tuple[bool, Optional[str]]:
    """Re-derive every output field; returns (ok, first mismatching field)."""
    asset_id = int.from_bytes(fields["aad"], "big")
    iv = fields["counter"] + fields["timestamp"]
    sealed = aead.seal(fields["key"], iv, fields["plaintext"], asset_id)
    if sealed[:26] != fields["ciphertext"]:
        return False, "ciphertext"
    if sealed[26:] != fields["tag"]:
        return False, "tag"
    expected_frame = frame.encode_frame(asset_id, iv, sealed)
    if expected_frame != fields["frame"]:
        return False, "frame"
    try:
        plaintext = aead.unseal(
            fields["key"], iv, fields["ciphertext"] + fields["tag"], asset_id
        )
    except AuthenticationFailure:
        return False, "tag"
    if plaintext != fields["plaintext"]:
        return False, "plaintext"
    return True, None

"""Thin AES-256-GCM boundary with the 96-bit composed IV and 16-bit AAD.

Backed by the `cryptography` library's AESGCM (constant-time, well audited);
no GCM arithmetic is implemented here. Nonce uniqueness is the counter
store's responsibility, not this module's.
"""

import struct

from cryptography.exceptions import InvalidTag
from cryptography.hazmat.primitives.ciphers.aead import AESGCM

from .errors import AuthenticationFailure
from .frame import CIPHERTEXT_LEN, IV_LEN, PAYLOAD_LEN, ASSET_ID_MAX

KEY_LEN = 32


def _check_key(key: bytes) -> None:
    if len(key) != KEY_LEN:
        raise ValueError(f"key must be {KEY_LEN} bytes, got {len(key)}")


def _aad_bytes(asset_id: int) -> bytes:
    if not 0 <= asset_id <= ASSET_ID_MAX:
        raise ValueError("asset ID out of 16-bit range")
    return struct.pack(">H", asset_id)


def seal(key: bytes, iv: bytes, plaintext: bytes, asset_id: int) -> bytes:
    """Encrypt a 26-byte payload; returns 42 bytes (body || tag)."""
    _check_key(key)
    if len(iv) != IV_LEN:
        raise ValueError(f"IV must be {IV_LEN} bytes, got {len(iv)}")
    if len(plaintext) != PAYLOAD_LEN:
        raise ValueError(f"plaintext must be {PAYLOAD_LEN} bytes, got {len(plaintext)}")
    return AESGCM(key).encrypt(iv, plaintext, _aad_bytes(asset_id))


def unseal(key: bytes, iv: bytes, sealed: bytes, asset_id: int) -> bytes:
    """Decrypt and verify 42 bytes (body || tag); returns the 26-byte payload.

    Raises AuthenticationFailure on any tag mismatch, with no detail on
    which input component failed.
    """
    _check_key(key)
    if len(iv) != IV_LEN:
        raise ValueError(f"IV must be {IV_LEN} bytes, got {len(iv)}")
    if len(sealed) != CIPHERTEXT_LEN:
        raise ValueError(f"sealed payload must be {CIPHERTEXT_LEN} bytes, got {len(sealed)}")
    try:
        return AESGCM(key).decrypt(iv, sealed, _aad_bytes(asset_id))
    except InvalidTag:
        raise AuthenticationFailure("authentication failed") from None

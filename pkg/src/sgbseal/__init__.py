"""Authenticated encryption for fixed-size emergency telemetry frames.

448-bit frames over AES-256-GCM with a counter || timestamp nonce,
durable counter journaling, per-asset replay protection, link-budget
arithmetic and an adversarial scenario harness.
"""

from .aead import seal, unseal
from .counter_store import CounterStore
from .errors import (
    AuthenticationFailure,
    CounterExhausted,
    MalformedFrame,
    SgbSealError,
    StateFormatError,
    VectorFormatError,
)
from .frame import (
    build_iv,
    decode_frame,
    encode_frame,
    pack_sgb,
    split_iv,
    unpack_sgb,
)
from .replay_state import ReplayState
from .txrx import (
    AcceptancePolicy,
    FixedClock,
    Mode,
    SystemClock,
    Verdict,
    VerdictKind,
    receive,
    transmit,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptancePolicy",
    "AuthenticationFailure",
    "CounterExhausted",
    "CounterStore",
    "FixedClock",
    "MalformedFrame",
    "Mode",
    "ReplayState",
    "SgbSealError",
    "StateFormatError",
    "SystemClock",
    "VectorFormatError",
    "Verdict",
    "VerdictKind",
    "build_iv",
    "decode_frame",
    "encode_frame",
    "pack_sgb",
    "receive",
    "seal",
    "split_iv",
    "transmit",
    "unpack_sgb",
    "unseal",
]

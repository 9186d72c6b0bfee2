"""Transmitter and receiver pipelines.

Receiver evaluation order is fixed: decode -> replay check -> timestamp
window -> authenticated decryption -> commit. Replay state is only ever
updated on a successful decrypt, and every failure is a verdict rather
than an exception.
"""

import enum
import time
from dataclasses import dataclass
from typing import Optional, Protocol

from . import aead, frame
from .counter_store import CounterStore
from .errors import AuthenticationFailure, MalformedFrame
from .replay_state import ReplayState


class Clock(Protocol):
    def now(self) -> int:
        """Current time, whole seconds since the Unix epoch."""
        ...


class SystemClock:
    def now(self) -> int:
        return int(time.time())


class FixedClock:
    """Test clock pinned to one instant; settable for scripted scenarios."""

    def __init__(self, seconds: int):
        self.seconds = seconds

    def now(self) -> int:
        return self.seconds


class Mode(enum.Enum):
    NORMAL = "normal"
    DTN_RELAXED = "dtn-relaxed"
    COUNTER_ONLY = "counter-only"


NORMAL_WINDOW_S = 2


@dataclass(frozen=True)
class AcceptancePolicy:
    mode: Mode = Mode.NORMAL
    window_seconds: int = NORMAL_WINDOW_S

    def __post_init__(self):
        if self.mode is Mode.NORMAL and self.window_seconds != NORMAL_WINDOW_S:
            raise ValueError(f"normal mode requires a {NORMAL_WINDOW_S} s window")

    @classmethod
    def normal(cls) -> "AcceptancePolicy":
        return cls(Mode.NORMAL, NORMAL_WINDOW_S)

    @classmethod
    def dtn_relaxed(cls, window_seconds: int) -> "AcceptancePolicy":
        return cls(Mode.DTN_RELAXED, window_seconds)

    @classmethod
    def counter_only(cls) -> "AcceptancePolicy":
        return cls(Mode.COUNTER_ONLY, 0)


class VerdictKind(enum.Enum):
    OK = "OK"
    MALFORMED = "MALFORMED"
    STALE = "STALE"
    REPLAY = "REPLAY"
    AUTH_FAIL = "AUTHFAIL"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    plaintext: Optional[bytes] = None

    def __post_init__(self):
        if (self.kind is VerdictKind.OK) != (self.plaintext is not None):
            raise ValueError("plaintext accompanies OK and only OK")

    @property
    def ok(self) -> bool:
        return self.kind is VerdictKind.OK


def transmit(
    key: bytes,
    asset_id: int,
    payload: bytes,
    clock: Clock,
    store: CounterStore,
) -> bytes:
    """Produce one 56-byte frame; the counter is persisted before emission."""
    counter = store.next()
    iv = frame.build_iv(counter, clock.now())
    sealed = aead.seal(key, iv, payload, asset_id)
    return frame.encode_frame(asset_id, iv, sealed)


def receive(
    key: bytes,
    frame_bytes: bytes,
    clock: Clock,
    state: ReplayState,
    policy: AcceptancePolicy = AcceptancePolicy.normal(),
) -> Verdict:
    """Verify one received frame and return a single verdict.

    Accepts arbitrary bytes; no exception escapes for untrusted input.
    """
    try:
        asset_id, iv, ciphertext = frame.decode_frame(bytes(frame_bytes))
    except MalformedFrame:
        return Verdict(VerdictKind.MALFORMED)
    counter, sender_ts = frame.split_iv(iv)

    with state.lock:
        if not state.check(asset_id, counter, sender_ts):
            return Verdict(VerdictKind.REPLAY)

        if policy.mode is not Mode.COUNTER_ONLY:
            receiver_ts = clock.now()
            if abs(receiver_ts - sender_ts) > policy.window_seconds:
                return Verdict(VerdictKind.STALE)

        try:
            plaintext = aead.unseal(key, iv, ciphertext, asset_id)
        except AuthenticationFailure:
            return Verdict(VerdictKind.AUTH_FAIL)

        state.commit(asset_id, counter, sender_ts)
    return Verdict(VerdictKind.OK, plaintext)

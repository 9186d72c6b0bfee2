"""Per-asset replay protection state with merge and file export.

Each asset maps to the (counter, timestamp) of its last accepted frame.
A frame passes the replay check only if BOTH values strictly exceed the
stored pair; equality on either component is a replay.

Export format (all integers big-endian):

    "SGBS" | version u16 | entry count u32 |
    entries (asset u16 | counter u32 | timestamp u64) |
    CRC-32 over all preceding bytes
"""

import os
import struct
import threading
import zlib
from pathlib import Path
from typing import Dict, Tuple

from .errors import StateFormatError

MAGIC = b"SGBS"
FORMAT_VERSION = 1
_HEADER = struct.Struct(">4sHI")
_ENTRY = struct.Struct(">HIQ")


class ReplayState:
    def __init__(self, entries: Dict[int, Tuple[int, int]] | None = None):
        self._entries: Dict[int, Tuple[int, int]] = dict(entries or {})
        # Guards check-then-commit sequences in the receiver pipeline.
        self.lock = threading.RLock()

    @property
    def entries(self) -> Dict[int, Tuple[int, int]]:
        return dict(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReplayState):
            return NotImplemented
        return self._entries == other._entries

    def check(self, asset_id: int, counter: int, timestamp: int) -> bool:
        """True if the frame is fresh; never mutates state."""
        last = self._entries.get(asset_id)
        if last is None:
            return True
        last_counter, last_timestamp = last
        return counter > last_counter and timestamp > last_timestamp

    def commit(self, asset_id: int, counter: int, timestamp: int) -> None:
        """Record an accepted frame; call only after authenticated decryption."""
        self._entries[asset_id] = (counter, timestamp)

    def check_and_commit(self, asset_id: int, counter: int, timestamp: int) -> bool:
        """Atomic check-then-commit; commits only when the check passes."""
        with self.lock:
            if not self.check(asset_id, counter, timestamp):
                return False
            self.commit(asset_id, counter, timestamp)
            return True

    def merge(self, other: "ReplayState") -> "ReplayState":
        """Element-wise maximum per asset; commutative, associative, idempotent."""
        merged = dict(self._entries)
        for asset_id, (counter, timestamp) in other._entries.items():
            if asset_id in merged:
                last_counter, last_timestamp = merged[asset_id]
                merged[asset_id] = (max(last_counter, counter), max(last_timestamp, timestamp))
            else:
                merged[asset_id] = (counter, timestamp)
        return ReplayState(merged)

    def to_bytes(self) -> bytes:
        body = _HEADER.pack(MAGIC, FORMAT_VERSION, len(self._entries))
        for asset_id in sorted(self._entries):
            counter, timestamp = self._entries[asset_id]
            body += _ENTRY.pack(asset_id, counter, timestamp)
        return body + struct.pack(">I", zlib.crc32(body))

    @classmethod
    def from_bytes(cls, data: bytes) -> "ReplayState":
        if len(data) < _HEADER.size + 4:
            raise StateFormatError("state blob too short")
        magic, version, count = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise StateFormatError("bad magic")
        if version != FORMAT_VERSION:
            raise StateFormatError(f"unsupported format version {version}")
        expected_len = _HEADER.size + count * _ENTRY.size + 4
        if len(data) != expected_len:
            raise StateFormatError(
                f"length mismatch: got {len(data)} bytes, expected {expected_len}"
            )
        (stored_crc,) = struct.unpack(">I", data[-4:])
        if zlib.crc32(data[:-4]) != stored_crc:
            raise StateFormatError("checksum mismatch")
        entries = {}
        for i in range(count):
            asset_id, counter, timestamp = _ENTRY.unpack_from(
                data, _HEADER.size + i * _ENTRY.size
            )
            entries[asset_id] = (counter, timestamp)
        return cls(entries)

    def save(self, path: os.PathLike | str) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: os.PathLike | str) -> "ReplayState":
        return cls.from_bytes(Path(path).read_bytes())

"""Crash-safe monotonic frame counter backed by an append-only journal.

Journal record (16 bytes): version u64 || counter u32 || CRC-32 of the
first 12 bytes. All integers big-endian; CRC-32 is the standard reflected
0xEDB88320 polynomial (zlib.crc32).

Recovery scans every aligned 16-byte record, drops anything whose CRC does
not verify (including a short trailing record from a torn write) and adopts
the counter of the highest valid version. `next()` flushes the new record
to stable storage before returning, so a value can only ever have been
handed out if its record survives a crash.
"""

import os
import struct
import zlib
from pathlib import Path
from typing import Optional, Tuple

from .errors import CounterExhausted
from .frame import COUNTER_MAX

RECORD_LEN = 16


def encode_record(version: int, counter: int) -> bytes:
    body = struct.pack(">QI", version, counter)
    return body + struct.pack(">I", zlib.crc32(body))


def scan_journal(data: bytes) -> Optional[Tuple[int, int]]:
    """Return (version, counter) of the highest valid record, or None."""
    best = None
    for offset in range(0, len(data) - RECORD_LEN + 1, RECORD_LEN):
        record = data[offset : offset + RECORD_LEN]
        version, counter, crc = struct.unpack(">QII", record)
        if zlib.crc32(record[:12]) != crc:
            continue
        if best is None or version > best[0]:
            best = (version, counter)
    return best


class CounterStore:
    """Exclusive-writer durable counter; reads of `current` are cheap."""

    def __init__(self, path: os.PathLike | str):
        self._path = Path(path)
        data = self._path.read_bytes() if self._path.exists() else b""
        best = scan_journal(data)
        self._version, self._current = best if best is not None else (0, 0)

    @property
    def path(self) -> Path:
        return self._path

    @property
    def current(self) -> int:
        return self._current

    def next(self) -> int:
        """Increment the counter, durably journal it, then return it.

        The flush happens before the return so a transmitted frame always
        has a surviving record (persist-before-transmit ordering).
        """
        if self._current >= COUNTER_MAX:
            raise CounterExhausted("32-bit counter exhausted; refusing to wrap")
        value = self._current + 1
        record = encode_record(self._version + 1, value)
        with open(self._path, "ab") as fh:
            fh.write(record)
            fh.flush()
            os.fsync(fh.fileno())
        self._version += 1
        self._current = value
        return value

    def compact(self) -> None:
        """Rewrite the journal keeping only the newest valid record."""
        if self._version == 0:
            return
        record = encode_record(self._version, self._current)
        tmp = self._path.with_suffix(self._path.suffix + ".tmp")
        with open(tmp, "wb") as fh:
            fh.write(record)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, self._path)


def seed_journal(path: os.PathLike | str, counter: int, version: int = 1) -> None:
    """Write a single-record journal positioning the store at `counter`."""
    Path(path).write_bytes(encode_record(version, counter))

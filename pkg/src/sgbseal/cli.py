"""Operator command-line interface.

Hex (lowercase, no separators) is the universal text encoding. `decrypt`
maps verdicts to distinct exit codes so shell harnesses can assert the
decision tree without parsing text: OK=0, MALFORMED=2, STALE=3, REPLAY=4,
AUTHFAIL=5.
"""

import binascii
import os
import secrets
import sys
from pathlib import Path

import click

from . import linkmodel, sim, txrx, vectors
from .counter_store import RECORD_LEN, CounterStore, scan_journal
from .errors import SgbSealError, StateFormatError, VectorFormatError
from .replay_state import ReplayState
from .txrx import AcceptancePolicy, FixedClock, Mode, SystemClock, VerdictKind

VERDICT_EXIT_CODES = {
    VerdictKind.OK: 0,
    VerdictKind.MALFORMED: 2,
    VerdictKind.STALE: 3,
    VerdictKind.REPLAY: 4,
    VerdictKind.AUTH_FAIL: 5,
}


def _read_key(path: str) -> bytes:
    try:
        key = binascii.unhexlify(Path(path).read_text().strip())
    except (OSError, binascii.Error, ValueError) as exc:
        raise click.ClickException(f"cannot read key file {path}: {exc}")
    if len(key) != 32:
        raise click.ClickException(f"key file {path} must hold 64 hex chars")
    return key


def _parse_hex(value: str, what: str) -> bytes:
    try:
        return binascii.unhexlify(value.strip())
    except (binascii.Error, ValueError):
        raise click.ClickException(f"invalid hex for {what}")


def _load_state(path: str) -> ReplayState:
    if not Path(path).exists():
        return ReplayState()
    try:
        return ReplayState.load(path)
    except StateFormatError as exc:
        raise click.ClickException(f"bad state file {path}: {exc}")


@click.group()
def main():
    """Authenticated encryption for fixed-size emergency telemetry frames."""


@main.command()
@click.argument("keyfile", type=click.Path(dir_okay=False))
def keygen(keyfile):
    """Generate a 256-bit key and write it as 64 hex chars."""
    path = Path(keyfile)
    path.touch(mode=0o600, exist_ok=True)
    os.chmod(path, 0o600)
    path.write_text(secrets.token_bytes(32).hex() + "\n")
    click.echo(f"wrote {keyfile}", err=True)


@main.command()
@click.option("--key", "keyfile", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--asset-id", required=True, help="16-bit asset ID (decimal or 0x-prefixed hex)")
@click.option("--journal", required=True, type=click.Path(dir_okay=False),
              help="counter journal path (created if absent)")
@click.option("--payload", "payload_hex", help="26-byte payload as 52 hex chars")
@click.option("--payload-file", type=click.Path(exists=True, dir_okay=False),
              help="26-byte raw payload file")
@click.option("--timestamp", type=int, default=None,
              help="override the clock (seconds since epoch) for reproducibility")
def encrypt(keyfile, asset_id, journal, payload_hex, payload_file, timestamp):
    """Seal one payload and print the 112-hex-char frame."""
    key = _read_key(keyfile)
    try:
        asset = int(asset_id, 0)
    except ValueError:
        raise click.ClickException("asset ID must be an integer")
    if (payload_hex is None) == (payload_file is None):
        raise click.ClickException("provide exactly one of --payload or --payload-file")
    payload = (_parse_hex(payload_hex, "payload") if payload_hex
               else Path(payload_file).read_bytes())
    if len(payload) != 26:
        raise click.ClickException(f"payload must be 26 bytes, got {len(payload)}")
    clock = FixedClock(timestamp) if timestamp is not None else SystemClock()
    store = CounterStore(journal)
    try:
        frame_bytes = txrx.transmit(key, asset, payload, clock, store)
    except SgbSealError as exc:
        raise click.ClickException(str(exc))
    click.echo(frame_bytes.hex())


@main.command()
@click.option("--key", "keyfile", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--state", "state_path", required=True, type=click.Path(dir_okay=False),
              help="replay state file (created on first acceptance)")
@click.option("--window", type=int, default=2, show_default=True,
              help="acceptance window in seconds (dtn mode)")
@click.option("--mode", type=click.Choice(["normal", "dtn", "counter-only"]),
              default="normal", show_default=True)
@click.option("--now", type=int, default=None,
              help="override the receiver clock (seconds since epoch)")
@click.argument("frame_hex")
def decrypt(keyfile, state_path, window, mode, now, frame_hex):
    """Verify one frame; print the verdict and, on OK, the payload hex."""
    key = _read_key(keyfile)
    if mode == "normal":
        policy = AcceptancePolicy.normal()
    elif mode == "dtn":
        policy = AcceptancePolicy.dtn_relaxed(window)
    else:
        policy = AcceptancePolicy.counter_only()
    try:
        frame_bytes = binascii.unhexlify(frame_hex.strip())
    except (binascii.Error, ValueError):
        frame_bytes = b""  # undecodable input is a malformed frame
    clock = FixedClock(now) if now is not None else SystemClock()
    state = _load_state(state_path)
    verdict = txrx.receive(key, frame_bytes, clock, state, policy)
    click.echo(verdict.kind.value)
    if verdict.ok:
        click.echo(verdict.plaintext.hex())
        state.save(state_path)
    sys.exit(VERDICT_EXIT_CODES[verdict.kind])


@main.group()
def vector():
    """Test-vector files (flat `name = hex` key-value format)."""


@vector.command("verify")
@click.argument("vector_file", type=click.Path(exists=True, dir_okay=False))
def vector_verify(vector_file):
    """Re-derive and compare every field of a vector file."""
    try:
        fields = vectors.parse_vector(Path(vector_file).read_text())
    except VectorFormatError as exc:
        raise click.ClickException(str(exc))
    ok, failing = vectors.verify_vector(fields)
    if ok:
        click.echo("OK")
    else:
        click.echo(f"MISMATCH {failing}")
        sys.exit(1)


@vector.command("gen")
@click.argument("out", type=click.Path(dir_okay=False))
@click.option("--seed", type=int, default=None,
              help="derive all inputs deterministically from this seed")
def vector_gen(out, seed):
    """Generate a random self-consistent vector file."""
    if seed is not None:
        import random

        rng = random.Random(seed)
        key, plaintext = rng.randbytes(32), rng.randbytes(26)
        asset = rng.randrange(2**16)
        counter = rng.randrange(1, 2**32)
        timestamp = rng.randrange(1, 2**64)
    else:
        key, plaintext = secrets.token_bytes(32), secrets.token_bytes(26)
        asset = secrets.randbelow(2**16)
        counter = 1 + secrets.randbelow(2**32 - 1)
        timestamp = 1 + secrets.randbelow(2**64 - 1)
    fields = vectors.make_vector(key, asset, counter, timestamp, plaintext)
    Path(out).write_text(vectors.format_vector(fields))
    click.echo(f"wrote {out}", err=True)


@main.group()
def state():
    """Replay-state files (SGBS format)."""


@state.command("export")
@click.argument("state_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("out", type=click.Path(dir_okay=False))
def state_export(state_path, out):
    """Validate a state file and write a canonical copy."""
    try:
        ReplayState.load(state_path).save(out)
    except StateFormatError as exc:
        raise click.ClickException(f"bad state file {state_path}: {exc}")
    click.echo(f"wrote {out}", err=True)


@state.command("import")
@click.argument("blob", type=click.Path(exists=True, dir_okay=False))
@click.argument("state_path", type=click.Path(dir_okay=False))
def state_import(blob, state_path):
    """Validate an incoming blob and install it as the local state."""
    try:
        ReplayState.load(blob).save(state_path)
    except StateFormatError as exc:
        raise click.ClickException(f"bad state blob {blob}: {exc}")
    click.echo(f"wrote {state_path}", err=True)


@state.command("merge")
@click.argument("out", type=click.Path(dir_okay=False))
@click.argument("inputs", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
def state_merge(out, inputs):
    """Merge station states element-wise (join-semilattice max)."""
    merged = ReplayState()
    for path in inputs:
        try:
            merged = merged.merge(ReplayState.load(path))
        except StateFormatError as exc:
            raise click.ClickException(f"bad state file {path}: {exc}")
    merged.save(out)
    click.echo(f"wrote {out} ({len(merged)} assets)", err=True)


@main.group()
def journal():
    """Counter journal files."""


@journal.command("inspect")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def journal_inspect(path):
    """List records, flagging CRC failures and torn tails."""
    data = Path(path).read_bytes()
    import struct
    import zlib

    for offset in range(0, len(data) - RECORD_LEN + 1, RECORD_LEN):
        record = data[offset : offset + RECORD_LEN]
        version, counter, crc = struct.unpack(">QII", record)
        status = "ok" if zlib.crc32(record[:12]) == crc else "BAD-CRC"
        click.echo(f"offset={offset} version={version} counter={counter} {status}")
    tail = len(data) % RECORD_LEN
    if tail:
        click.echo(f"offset={len(data) - tail} torn record ({tail} bytes)")
    best = scan_journal(data)
    if best is None:
        click.echo("no valid record; recovery restarts at counter 0")
    else:
        click.echo(f"recovered: version={best[0]} counter={best[1]}")


@journal.command("compact")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def journal_compact(path):
    """Keep only the newest valid record."""
    store = CounterStore(path)
    store.compact()
    click.echo(f"compacted {path}; counter={store.current}", err=True)


@main.command()
@click.option("--format", "fmt", type=click.Choice(["text", "kv"]), default="text",
              show_default=True)
@click.option("--altitude-m", type=float, default=None)
@click.option("--data-bits", type=float, default=None)
@click.option("--baseline-bits", type=float, default=None)
@click.option("--carrier-hz", type=float, default=None)
@click.option("--bandwidth-bps", type=float, default=None)
@click.option("--orbital-speed-mps", type=float, default=None)
@click.option("--earth-surface-speed-mps", type=float, default=None)
@click.option("--pass-duration-s", type=float, default=None)
@click.option("--beamwidth-deg", type=float, default=None)
@click.option("--rtc-ppm", type=float, default=None)
@click.option("--sync-interval-s", type=float, default=None)
def linkbudget(fmt, **overrides):
    """Evaluate the full link report."""
    kwargs = {name: value for name, value in overrides.items() if value is not None}
    try:
        report = linkmodel.full_report(linkmodel.LinkParams(**kwargs))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    values = report.as_dict()
    if fmt == "kv":
        for name, value in values.items():
            click.echo(f"{name} = {value!r}")
    else:
        width = max(len(name) for name in values)
        for name, value in values.items():
            click.echo(f"{name:<{width}}  {value:.6g}")


@main.command()
@click.argument("scenario", type=click.Choice(sim.SCENARIO_NAMES))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "kv"]), default="text",
              show_default=True)
def simulate(scenario, seed, fmt):
    """Run one adversarial scenario; exit status reflects the outcome."""
    report = sim.run_scenario(scenario, seed)
    if fmt == "kv":
        click.echo(f"scenario = {report.name}")
        click.echo(f"seed = {report.seed}")
        for i, step in enumerate(report.steps):
            click.echo(f"step.{i} = {step.action} | {step.expected} | {step.observed}")
        click.echo(f"passed = {str(report.passed).lower()}")
    else:
        for step in report.steps:
            mark = "ok" if step.matched else "MISMATCH"
            click.echo(f"[{mark}] {step.action}: expected {step.expected}, "
                       f"observed {step.observed}")
        click.echo(f"{report.name}: {'PASSED' if report.passed else 'FAILED'}")
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()

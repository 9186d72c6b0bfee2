"""Deterministic adversarial-channel scenarios.

Each scenario scripts the interaction between simulated transmitters, a
byte-level channel adversary (no key access) and one or more receivers,
recording expected vs observed outcomes per step. Clocks are explicit
step values; nothing here reads wall-clock time, so a (scenario, seed)
pair always produces an identical report.
"""

import random
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import List

from . import txrx
from .counter_store import CounterStore
from .replay_state import ReplayState
from .txrx import AcceptancePolicy, FixedClock, VerdictKind

SCENARIO_NAMES = (
    "time-rollback",
    "power-loss",
    "replay-injection",
    "cross-site-replay",
    "dtn-window",
    "bitflip-sweep",
)


@dataclass(frozen=True)
class ScenarioStep:
    action: str
    expected: str
    observed: str

    @property
    def matched(self) -> bool:
        return self.expected == self.observed


@dataclass
class ScenarioReport:
    name: str
    seed: int
    steps: List[ScenarioStep] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(step.matched for step in self.steps)

    def add(self, action: str, expected: str, observed: str) -> None:
        self.steps.append(ScenarioStep(action, expected, observed))


class _Setup:
    """Seeded key/asset/payload material plus a scratch counter journal."""

    def __init__(self, seed: int, workdir: Path):
        self.rng = random.Random(seed)
        self.key = self.rng.randbytes(32)
        self.asset_id = self.rng.randrange(2**16)
        self.workdir = workdir

    def payload(self) -> bytes:
        return self.rng.randbytes(26)

    def store(self, name: str = "journal.bin") -> CounterStore:
        return CounterStore(self.workdir / name)


def run_scenario(name: str, seed: int = 0) -> ScenarioReport:
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(
            f"unknown scenario {name!r}; choose from {', '.join(SCENARIO_NAMES)}"
        ) from None
    report = ScenarioReport(name=name, seed=seed)
    with tempfile.TemporaryDirectory(prefix="sgbseal-sim-") as tmp:
        runner(_Setup(seed, Path(tmp)), report)
    return report


def run_all(seed: int = 0) -> List[ScenarioReport]:
    return [run_scenario(name, seed) for name in SCENARIO_NAMES]


def _time_rollback(setup: _Setup, report: ScenarioReport) -> None:
    # Sender RTC rolled back 10 s behind true time before first contact.
    true_time = 1_700_000_000
    sender_clock = FixedClock(true_time - 10)
    receiver_clock = FixedClock(true_time)
    store = setup.store()
    frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), sender_clock, store)

    normal_state = ReplayState()
    verdict = txrx.receive(setup.key, frame, receiver_clock, normal_state)
    report.add("rolled-back frame, normal mode", "STALE", verdict.kind.value)

    counter_only = AcceptancePolicy.counter_only()
    state = ReplayState()
    verdict = txrx.receive(setup.key, frame, receiver_clock, state, counter_only)
    report.add("rolled-back frame, counter-only mode", "OK", verdict.kind.value)

    verdict = txrx.receive(setup.key, frame, receiver_clock, state, counter_only)
    report.add("duplicate frame, counter-only mode", "REPLAY", verdict.kind.value)


def _power_loss(setup: _Setup, report: ScenarioReport) -> None:
    # Build a short transmission history, then replay a power cut at every
    # byte offset of the journal. Each cut is an independent timeline: the
    # frames sent before the cut are those whose records are fully present.
    clock = FixedClock(1_700_000_000)  # frozen, so uniqueness rests on R alone
    store = setup.store()
    sent_ivs = []
    for _ in range(8):
        frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), clock, store)
        sent_ivs.append(frame[2:14])
    journal = store.path.read_bytes()

    for offset in range(len(journal) + 1):
        cut_path = setup.workdir / "cut.bin"
        cut_path.write_bytes(journal[:offset])
        recovered = CounterStore(cut_path)
        frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), clock, recovered)
        pre_crash = sent_ivs[: offset // 16]
        timeline = set(pre_crash)
        fresh = frame[2:14] not in timeline
        report.add(f"truncate journal at byte {offset}", "unique-iv",
                   "unique-iv" if fresh else "iv-reuse")


def _replay_injection(setup: _Setup, report: ScenarioReport) -> None:
    now = 1_700_000_000
    store = setup.store()
    frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), FixedClock(now), store)
    state = ReplayState()
    receiver_clock = FixedClock(now + 1)

    verdict = txrx.receive(setup.key, frame, receiver_clock, state)
    report.add("genuine frame", "OK", verdict.kind.value)

    verdict = txrx.receive(setup.key, frame, receiver_clock, state)
    report.add("replayed frame within window", "REPLAY", verdict.kind.value)


def _cross_site_replay(setup: _Setup, report: ScenarioReport) -> None:
    # DTN relaxes the window enough for a capture to stay fresh at a second
    # site; state merge closes the gap.
    now = 1_700_000_000
    policy = AcceptancePolicy.dtn_relaxed(3600)
    store = setup.store()
    frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), FixedClock(now), store)

    station1 = ReplayState()
    station2 = ReplayState()
    verdict = txrx.receive(setup.key, frame, FixedClock(now + 5), station1, policy)
    report.add("frame at station 1", "OK", verdict.kind.value)

    verdict = txrx.receive(setup.key, frame, FixedClock(now + 600), station2, policy)
    report.add("replay at station 2 before sync", "OK", verdict.kind.value)

    merged = station1.merge(station2)
    verdict = txrx.receive(setup.key, frame, FixedClock(now + 900), merged, policy)
    report.add("replay at station 2 after merge", "REPLAY", verdict.kind.value)


def _dtn_window(setup: _Setup, report: ScenarioReport) -> None:
    now = 1_700_000_000
    delay = 30  # store-and-forward hop, well past the 2 s window
    store = setup.store()
    frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), FixedClock(now), store)
    receiver_clock = FixedClock(now + delay)

    verdict = txrx.receive(setup.key, frame, receiver_clock, ReplayState())
    report.add(f"frame delayed {delay} s, normal policy", "STALE", verdict.kind.value)

    relaxed = AcceptancePolicy.dtn_relaxed(60)
    state = ReplayState()
    verdict = txrx.receive(setup.key, frame, receiver_clock, state, relaxed)
    report.add(f"frame delayed {delay} s, dtn-relaxed policy", "OK", verdict.kind.value)

    verdict = txrx.receive(setup.key, frame, receiver_clock, state, relaxed)
    report.add("replay under dtn-relaxed policy", "REPLAY", verdict.kind.value)


def _bitflip_sweep(setup: _Setup, report: ScenarioReport) -> None:
    now = 1_700_000_000
    store = setup.store()
    frame = txrx.transmit(setup.key, setup.asset_id, setup.payload(), FixedClock(now), store)
    receiver_clock = FixedClock(now)
    for bit in range(len(frame) * 8):
        mutated = bytearray(frame)
        mutated[bit // 8] ^= 0x80 >> (bit % 8)
        verdict = txrx.receive(setup.key, bytes(mutated), receiver_clock, ReplayState())
        report.add(f"flip bit {bit}", "reject",
                   "accept" if verdict.ok else "reject")


_RUNNERS = {
    "time-rollback": _time_rollback,
    "power-loss": _power_loss,
    "replay-injection": _replay_injection,
    "cross-site-replay": _cross_site_replay,
    "dtn-window": _dtn_window,
    "bitflip-sweep": _bitflip_sweep,
}

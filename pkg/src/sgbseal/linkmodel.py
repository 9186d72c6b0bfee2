"""Link-budget arithmetic for a LEO UHF downlink.

Pure scalar formulas: clock drift, propagation and transmission delay,
satellite travel offset during the latency difference, Doppler shift and
rate, ground beam footprint, and the frame-size overhead ratio.
"""

import math
from dataclasses import dataclass, asdict
from typing import Dict

SPEED_OF_LIGHT_MPS = 3e8


@dataclass(frozen=True)
class LinkParams:
    altitude_m: float = 500e3
    data_bits: float = 448
    baseline_bits: float = 250
    carrier_hz: float = 4e8
    bandwidth_bps: float = 9.6e3
    orbital_speed_mps: float = 7.8e3
    earth_surface_speed_mps: float = 465
    pass_duration_s: float = 600
    beamwidth_deg: float = 10
    rtc_ppm: float = 3
    sync_interval_s: float = 43200

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f"{name} must be strictly positive")


def clock_drift_ms(ppm: float, elapsed_s: float) -> float:
    if ppm < 0:
        raise ValueError("ppm must be non-negative")
    return ppm / 1e6 * elapsed_s * 1000


def propagation_delay_s(distance_m: float) -> float:
    if distance_m < 0:
        raise ValueError("distance must be non-negative")
    return distance_m / SPEED_OF_LIGHT_MPS


def transmission_time_s(bits: float, bps: float) -> float:
    if bps <= 0:
        raise ValueError("bandwidth must be positive")
    return bits / bps


def total_latency_s(distance_m: float, bits: float, bps: float) -> float:
    return propagation_delay_s(distance_m) + transmission_time_s(bits, bps)


def travel_offset_m(orbital_speed_mps: float, earth_speed_mps: float, dt_s: float) -> float:
    if dt_s < 0:
        raise ValueError("time delta must be non-negative")
    return (orbital_speed_mps + earth_speed_mps) * dt_s


def doppler_shift_hz(relative_speed_mps: float, carrier_hz: float) -> float:
    return relative_speed_mps / SPEED_OF_LIGHT_MPS * carrier_hz


def doppler_rate_hz_per_s(shift_hz: float, pass_s: float) -> float:
    """Rate of the positive-to-negative swing (2x the peak shift) over a pass."""
    if pass_s <= 0:
        raise ValueError("pass duration must be positive")
    return 2 * shift_hz / pass_s


def beam_footprint_radius_m(altitude_m: float, full_beamwidth_deg: float) -> float:
    if not 0 < full_beamwidth_deg < 180:
        raise ValueError("beamwidth must be in (0, 180) degrees")
    if altitude_m < 0:
        raise ValueError("altitude must be non-negative")
    return altitude_m * math.tan(math.radians(full_beamwidth_deg / 2))


def overhead_ratio(new_bits: float, baseline_bits: float) -> float:
    if baseline_bits <= 0:
        raise ValueError("baseline must be positive")
    return new_bits / baseline_bits - 1


@dataclass(frozen=True)
class LinkReport:
    drift_ms: float
    one_way_prop_ms: float
    tx_time_ms: float
    baseline_tx_time_ms: float
    total_latency_ms: float
    baseline_latency_ms: float
    latency_delta_s: float
    orbital_offset_m: float
    earth_offset_m: float
    travel_offset_m: float
    doppler_shift_hz: float
    doppler_rate_hz_s: float
    doppler_delta_hz: float
    footprint_radius_m: float
    overhead_ratio: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


def full_report(params: LinkParams = LinkParams()) -> LinkReport:
    """Evaluate every derived quantity; stored values are never rounded."""
    prop_s = propagation_delay_s(params.altitude_m)
    tx_s = transmission_time_s(params.data_bits, params.bandwidth_bps)
    baseline_tx_s = transmission_time_s(params.baseline_bits, params.bandwidth_bps)
    latency_s = prop_s + tx_s
    baseline_latency_s = prop_s + baseline_tx_s
    # Latency gap between the sealed frame and the bare beacon frame; this
    # is the dt over which the travel offset and Doppler delta accrue.
    delta_s = latency_s - baseline_latency_s

    relative_speed = params.orbital_speed_mps + params.earth_surface_speed_mps
    shift_hz = doppler_shift_hz(relative_speed, params.carrier_hz)
    rate = doppler_rate_hz_per_s(shift_hz, params.pass_duration_s)

    return LinkReport(
        drift_ms=clock_drift_ms(params.rtc_ppm, params.sync_interval_s),
        one_way_prop_ms=prop_s * 1000,
        tx_time_ms=tx_s * 1000,
        baseline_tx_time_ms=baseline_tx_s * 1000,
        total_latency_ms=latency_s * 1000,
        baseline_latency_ms=baseline_latency_s * 1000,
        latency_delta_s=delta_s,
        orbital_offset_m=params.orbital_speed_mps * delta_s,
        earth_offset_m=params.earth_surface_speed_mps * delta_s,
        travel_offset_m=travel_offset_m(
            params.orbital_speed_mps, params.earth_surface_speed_mps, delta_s
        ),
        doppler_shift_hz=shift_hz,
        doppler_rate_hz_s=rate,
        doppler_delta_hz=rate * delta_s,
        footprint_radius_m=beam_footprint_radius_m(params.altitude_m, params.beamwidth_deg),
        overhead_ratio=overhead_ratio(params.data_bits, params.baseline_bits),
    )

"""Seeded self-checks that cross-validate the engine against its oracles.

Used by ``bunchlab verify``. Every check returns a :class:`CheckResult`; the
random ones draw from a :class:`numpy.random.Generator` seeded by the caller
so repeated runs produce identical reports.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .amplifier import AmplifierGain, emission_probability
from .interference import (InputConfiguration, coincidence_probability,
                           enhancement_partial, oracle_permutation_sum,
                           v_overlap)
from .permanents import permanent_fast, permanent_naive
from .scenarios import (PUBLISHED_TABLES, closed_form_enhancement,
                        enumerate_scenarios, published_table, scenario_to_packets)
from .temporal_modes import WavePacket


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    cases: int

    def as_dict(self):
        return asdict(self)


def random_packet(rng: np.random.Generator, spread: float = 2.0) -> WavePacket:
    return WavePacket(center_time=float(rng.normal(scale=spread)),
                      width=float(rng.uniform(0.5, 2.0)),
                      detuning=float(rng.normal(scale=0.5)),
                      phase=float(rng.uniform(0.0, 2 * math.pi)))


def random_configuration(rng: np.random.Generator, max_photons: int = 5) -> InputConfiguration:
    total = int(rng.integers(1, max_photons + 1))
    n = int(rng.integers(0, total + 1))
    return InputConfiguration(tuple(random_packet(rng) for _ in range(n)),
                              tuple(random_packet(rng) for _ in range(total - n)),
                              float(rng.uniform(0.05, 0.95)))


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def check_tables() -> CheckResult:
    errors = [abs(closed_form_enhancement(s) - value)
              for key in PUBLISHED_TABLES for _, s, value in published_table(*key)]
    return CheckResult("published tables", max(errors) == 0, float(max(errors)), 0.0, len(errors))


def check_permanents(rng, cases=100, tol=1e-10) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        n = int(rng.integers(1, 9))
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        worst = max(worst, _rel(permanent_fast(a), permanent_naive(a)))
    return CheckResult("permanent fast vs naive", worst < tol, worst, tol, cases)


def check_oracle(rng, cases=50, tol=1e-9) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        cfg = random_configuration(rng)
        fast, slow = coincidence_probability(cfg), oracle_permutation_sum(cfg)
        worst = max(worst, _rel(fast.p_quantum, slow.p_quantum),
                    _rel(fast.enhancement, slow.enhancement))
    return CheckResult("engine vs permutation-sum oracle", worst < tol, worst, tol, cases)


def check_scenarios(max_photons=5, tol=1e-6) -> CheckResult:
    worst, count = 0.0, 0
    for total in range(1, max_photons + 1):
        for n in range(total + 1):
            for s, factor in enumerate_scenarios(n, total - n):
                enh = coincidence_probability(scenario_to_packets(s, 1.0, 12.0)).enhancement
                worst = max(worst, abs(enh - factor))
                count += 1
    return CheckResult("scenario realizations vs closed form", worst < tol, worst, tol, count)


def check_partial_overlap(rng, cases=20, tol=1e-9) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        n = int(rng.integers(1, 6))
        a = WavePacket(width=1.0)
        b = WavePacket(center_time=float(rng.uniform(-4, 4)), width=1.0)
        cfg = InputConfiguration((a,) * n, (b,), 0.5)
        enh = coincidence_probability(cfg).enhancement
        worst = max(worst, abs(enh - enhancement_partial(n, v_overlap(b, a))))
    return CheckResult("1 + N V law", worst < tol, worst, tol, cases)


def check_transmissivity(rng, cases=20, tol=1e-10) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        cfg = random_configuration(rng)
        values = [coincidence_probability(cfg.with_transmissivity(t)).enhancement
                  for t in (0.1, 0.3, 0.5, 0.7, 0.9)]
        worst = max(worst, max(values) - min(values))
    return CheckResult("enhancement independent of T", worst < tol, worst, tol, cases)


def check_amplifier(max_m=10) -> CheckResult:
    gain = AmplifierGain.from_coupling(2.0**-4)
    base = emission_probability(gain, 0)
    errors = [abs(emission_probability(gain, m, 3) / base - (m + 1)) for m in range(max_m + 1)]
    return CheckResult("amplifier m+1 law", max(errors) < 1e-12, max(errors), 1e-12, len(errors))


def run_all(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        check_tables(),
        check_permanents(rng),
        check_oracle(rng),
        check_scenarios(),
        check_partial_overlap(rng),
        check_transmissivity(rng),
        check_amplifier(),
    ]

"""Bunching coincidence probabilities at a lossless two-port beam splitter.

N photons enter port ``a`` and M photons enter port ``b``; all N+M are
detected behind the same output, which sees the field sqrt(T) E_a + sqrt(R) E_b.
For product-form inputs the time-integrated (N+M)-fold coincidence reduces to

    p_quantum = (N+M)! T^N R^M perm(G_all) / (perm(G_a) perm(G_b))

with G_all, G_a, G_b the Gram matrices of all packets, the a packets and the
b packets. The fully distinguishable value (N+M)! T^N R^M is the classical
baseline, so the enhancement is the permanent ratio and does not depend on T.

:func:`oracle_permutation_sum` evaluates the same quantity as the literal
double sum over photon-to-detector assignments, without any permanent code.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .exceptions import (CapacityError, ConfigurationError,
                         DegenerateNormalizationError, DomainError,
                         EmptyInputError)
from .permanents import MAX_FAST_DIM, permanent_fast
from .temporal_modes import WavePacket, gram, overlap

MAX_ORACLE_PHOTONS = 6
NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class InputConfiguration:
    """Packets at the two input ports plus the intensity transmissivity T.

    The reflectivity is fixed to ``1 - T`` (lossless splitter).
    """

    port_a: tuple[WavePacket, ...] = ()
    port_b: tuple[WavePacket, ...] = ()
    transmissivity: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "port_a", tuple(self.port_a))
        object.__setattr__(self, "port_b", tuple(self.port_b))
        if self.n_photons < 1:
            raise ConfigurationError("configuration needs at least one photon")
        for packet in self.port_a + self.port_b:
            if not isinstance(packet, WavePacket):
                raise ConfigurationError(f"ports must hold WavePacket objects, got {packet!r}")
        t = self.transmissivity
        if not (isinstance(t, (int, float)) and 0.0 <= t <= 1.0):
            raise ConfigurationError(f"transmissivity must lie in [0, 1], got {t!r}")

    @property
    def n_a(self) -> int:
        return len(self.port_a)

    @property
    def n_b(self) -> int:
        return len(self.port_b)

    @property
    def n_photons(self) -> int:
        return len(self.port_a) + len(self.port_b)

    @property
    def reflectivity(self) -> float:
        return 1.0 - self.transmissivity

    @property
    def packets(self) -> tuple[WavePacket, ...]:
        return self.port_a + self.port_b

    def with_transmissivity(self, t: float) -> "InputConfiguration":
        return InputConfiguration(self.port_a, self.port_b, t)

    def with_b_delay(self, delay: float) -> "InputConfiguration":
        """Shift every port-b packet by ``delay``."""
        return InputConfiguration(self.port_a,
                                  tuple(p.shifted(delay) for p in self.port_b),
                                  self.transmissivity)


@dataclass(frozen=True)
class CoincidenceResult:
    """Quantum coincidence probability, classical baseline and their ratio.

    Both probabilities include the (N+M)! factor of the unordered
    multi-detector time integral, so the fully indistinguishable N+1 case
    gives T^N R (N+1)! (N+1).
    """

    p_quantum: float
    p_classical: float
    enhancement: float

    def as_dict(self) -> dict:
        return {"p_quantum": self.p_quantum, "p_classical": self.p_classical,
                "enhancement": self.enhancement}


def _splitting_weight(cfg: InputConfiguration) -> float:
    n, m = cfg.n_a, cfg.n_b
    return math.factorial(n + m) * cfg.transmissivity**n * cfg.reflectivity**m


def _port_norm(packets: Sequence[WavePacket]) -> float:
    if not packets:
        return 1.0
    return permanent_fast(gram(packets)).real


def coincidence_probability(cfg: InputConfiguration) -> CoincidenceResult:
    """All-photons-in-one-output coincidence probability for ``cfg``.

    Raises
    ------
    CapacityError
        If N + M exceeds the permanent bound.
    DegenerateNormalizationError
        If perm(G_a) perm(G_b) is not positive.
    """
    if cfg.n_photons > MAX_FAST_DIM:
        raise CapacityError(f"at most {MAX_FAST_DIM} photons supported, got {cfg.n_photons}")
    norm = _port_norm(cfg.port_a) * _port_norm(cfg.port_b)
    if not norm > NORMALIZATION_TOL:
        raise DegenerateNormalizationError(f"port normalization {norm!r} is not positive")
    ratio = permanent_fast(gram(cfg.packets)).real / norm
    baseline = _splitting_weight(cfg)
    return CoincidenceResult(p_quantum=baseline * ratio, p_classical=baseline,
                             enhancement=ratio)


def oracle_permutation_sum(cfg: InputConfiguration) -> CoincidenceResult:
    """Independent evaluation by brute-force permutation sums (N + M <= 6).

    The amplitude for detecting the K = N+M photons at times t_1..t_K is a sum
    over assignments sigma of photons to detection slots of
    prod_k f_sigma(k)(t_k). Integrating its squared modulus over all times
    gives sum_{sigma, tau} prod_k <f_sigma(k)|f_tau(k)>, which is evaluated
    term by term here. Port normalizations are the single permutation sums.
    """
    k = cfg.n_photons
    if k > MAX_ORACLE_PHOTONS:
        raise CapacityError(f"oracle supports at most {MAX_ORACLE_PHOTONS} photons, got {k}")

    def overlaps(packets):
        return [[overlap(p, q) for q in packets] for p in packets]

    def normalization(packets):
        # sum over permutations of the photons within one port
        ov = overlaps(packets)
        total = 0j
        for sigma in itertools.permutations(range(len(packets))):
            term = 1 + 0j
            for i, j in enumerate(sigma):
                term *= ov[i][j]
            total += term
        return total.real

    def double_sum(packets):
        ov = overlaps(packets)
        total = 0j
        perms = list(itertools.permutations(range(len(packets))))
        for sigma in perms:
            for tau in perms:
                term = 1 + 0j
                for i, j in zip(sigma, tau):
                    term *= ov[i][j]
                total += term
        return total.real

    norm = normalization(cfg.port_a) * normalization(cfg.port_b)
    if not norm > NORMALIZATION_TOL:
        raise DegenerateNormalizationError(f"port normalization {norm!r} is not positive")
    full = double_sum(cfg.packets)
    weight = cfg.transmissivity**cfg.n_a * cfg.reflectivity**cfg.n_b
    p_quantum = weight * full / norm
    p_classical = math.factorial(k) * weight
    enhancement = full / (norm * math.factorial(k))
    return CoincidenceResult(p_quantum=p_quantum, p_classical=p_classical,
                             enhancement=enhancement)


def v_overlap(single: WavePacket, group: WavePacket) -> float:
    """Distinguishability measure |<single|group>|^2 in [0, 1]."""
    v = abs(overlap(single, group)) ** 2
    return min(1.0, v)


def enhancement_partial(n: int, v: float) -> float:
    """Enhancement 1 + n v for n mutually identical photons meeting one photon of overlap v."""
    if n < 0:
        raise DomainError(f"photon count must be non-negative, got {n}")
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"overlap measure must lie in [0, 1], got {v!r}")
    return 1.0 + n * v


def optimal_transmissivity(n: int, m: int) -> float:
    """Transmissivity maximizing T^n (1-T)^m, i.e. n / (n + m)."""
    if n < 0 or m < 0 or n + m == 0:
        raise DomainError(f"need n, m >= 0 with n + m >= 1, got ({n}, {m})")
    return n / (n + m)


@dataclass(frozen=True)
class ScanResult:
    """Delay scan of the port-b packets against port a.

    ``normalized`` is ``p_quantum`` divided by ``baseline``, the median
    ``p_quantum`` over the 10% of scan points farthest from the scan center.
    ``extension`` is set when port b does not hold exactly one photon.
    """

    delays: np.ndarray
    results: tuple[CoincidenceResult, ...]
    normalized: np.ndarray
    baseline: float
    extension: bool = False
    points: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "points", list(zip(self.delays.tolist(), self.results)))

    @property
    def p_quantum(self) -> np.ndarray:
        return np.array([r.p_quantum for r in self.results])

    @property
    def enhancement(self) -> np.ndarray:
        return np.array([r.enhancement for r in self.results])


def outer_baseline(delays, values, fraction: float = 0.1) -> float:
    """Median of ``values`` over the ``fraction`` of points farthest from the scan center."""
    delays = np.asarray(delays, dtype=float)
    values = np.asarray(values, dtype=float)
    center = 0.5 * (delays.min() + delays.max())
    count = max(1, int(math.ceil(fraction * len(delays))))
    order = np.argsort(-np.abs(delays - center), kind="stable")
    return float(np.median(values[order[:count]]))


def delay_scan(cfg: InputConfiguration, delays, *, workers: int = 1) -> ScanResult:
    """Evaluate the coincidence probability while delaying port b.

    Each delay is added to the center time of every port-b packet. The
    classical fraction of the signal is flat, so a bump of height m appears
    whenever the scanned photon overlaps m identical port-a photons.
    """
    delays = np.asarray(list(delays), dtype=float)
    if delays.size == 0:
        raise EmptyInputError("delay list is empty")
    if cfg.n_b == 0:
        raise ConfigurationError("port b has no packet to scan")

    def point(tau):
        return coincidence_probability(cfg.with_b_delay(float(tau)))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(point, delays))
    else:
        results = tuple(point(tau) for tau in delays)

    p = np.array([r.p_quantum for r in results])
    baseline = outer_baseline(delays, p)
    if baseline > 0:
        normalized = p / baseline
    else:
        # degenerate splitter: fall back to the T-independent ratio
        enh = np.array([r.enhancement for r in results])
        normalized = enh / outer_baseline(delays, enh)
    return ScanResult(delays=delays, results=results, normalized=normalized,
                      baseline=baseline, extension=cfg.n_b != 1)

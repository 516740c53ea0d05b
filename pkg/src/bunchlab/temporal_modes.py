"""Gaussian single-photon temporal modes and their overlaps.

Each photon occupies a normalized Gaussian amplitude

    g(t) = (pi tau^2)^(-1/4) exp(-(t - t0)^2 / (2 tau^2)) exp(-i (dw t - phi))

where ``tau`` is the 1/e half-width of the amplitude, ``dw`` the carrier
detuning from a common reference frequency and ``phi`` a constant phase.
All distinguishability information of a product-form multi-photon state is
carried by the matrix of pairwise overlaps (the Gram matrix).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .exceptions import EmptyInputError, InvalidPacketError

#: |overlap| below this counts as "completely distinguishable".
ORTHOGONALITY_THRESHOLD = 1e-9


@dataclass(frozen=True)
class WavePacket:
    """Normalized Gaussian temporal mode of a single photon.

    Parameters
    ----------
    center_time : float
        Pulse center ``t0`` in seconds (any consistent unit works).
    width : float
        Amplitude 1/e half-width ``tau``; must be positive.
    detuning : float
        Carrier offset in rad/s relative to the common reference frequency.
    phase : float
        Constant phase in radians.
    """

    center_time: float = 0.0
    width: float = 1.0
    detuning: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        for name in ("center_time", "width", "detuning", "phase"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidPacketError(f"{name} must be finite, got {value!r}")
        if not self.width > 0:
            raise InvalidPacketError(f"width must be positive, got {self.width!r}")

    def amplitude(self, t):
        """Evaluate the complex time-domain amplitude g(t)."""
        t = np.asarray(t, dtype=float)
        norm = (math.pi * self.width**2) ** -0.25
        envelope = np.exp(-((t - self.center_time) ** 2) / (2 * self.width**2))
        return norm * envelope * np.exp(-1j * (self.detuning * t - self.phase))

    def shifted(self, delay: float) -> "WavePacket":
        """Return a copy delayed by ``delay``."""
        return replace(self, center_time=self.center_time + delay)


def overlap(p: WavePacket, q: WavePacket) -> complex:
    """Closed-form overlap amplitude <p|q> = integral of conj(g_p(t)) g_q(t) dt.

    Written in the numerically stable form

        sqrt(2 tp tq / S) * exp(-dt^2 / (2S) - dw^2 tp^2 tq^2 / (2S))
                          * exp(i dw tm + i (phi_q - phi_p))

    with ``S = tp^2 + tq^2``, ``dt = t_q - t_p``, ``dw = w_p - w_q`` and
    ``tm`` the width-weighted mean center. Avoids cancellation when centers
    are large compared with the widths.
    """
    for packet in (p, q):
        if not isinstance(packet, WavePacket):
            raise InvalidPacketError(f"expected WavePacket, got {type(packet).__name__}")
    if p == q:
        return 1.0 + 0.0j
    tp2 = p.width**2
    tq2 = q.width**2
    s = tp2 + tq2
    dt = q.center_time - p.center_time
    dw = p.detuning - q.detuning
    prefactor = math.sqrt(2.0 * p.width * q.width / s)
    decay = -(dt * dt) / (2.0 * s) - (dw * dw) * tp2 * tq2 / (2.0 * s)
    # weighted center; written relative to p's center to keep precision
    t_mean = p.center_time + tp2 * dt / s
    phase = dw * t_mean + (q.phase - p.phase)
    return prefactor * math.exp(decay) * complex(math.cos(phase), math.sin(phase))


def distinguishable(p: WavePacket, q: WavePacket,
                    threshold: float = ORTHOGONALITY_THRESHOLD) -> bool:
    """True when the two modes are orthogonal to within ``threshold``."""
    return abs(overlap(p, q)) < threshold


def gram(packets: Sequence[WavePacket]) -> np.ndarray:
    """Hermitian matrix of pairwise overlaps, ``G[i, j] = <packets[i]|packets[j]>``.

    Raises
    ------
    EmptyInputError
        If ``packets`` is empty.
    """
    packets = list(packets)
    n = len(packets)
    if n == 0:
        raise EmptyInputError("gram() needs at least one packet")
    g = np.eye(n, dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            v = overlap(packets[i], packets[j])
            g[i, j] = v
            g[j, i] = v.conjugate()
    return g


def check_gram(matrix, *, atol: float = 1e-12, psd_tol: float = 1e-10) -> list[str]:
    """List the Gram-matrix invariants that ``matrix`` violates (empty if none)."""
    m = np.asarray(matrix)
    problems = []
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        return ["not a non-empty square matrix"]
    if not np.allclose(m, m.conj().T, rtol=0, atol=atol):
        problems.append("not Hermitian")
    if not np.allclose(np.diag(m), 1.0, rtol=0, atol=atol):
        problems.append("diagonal not unit")
    if np.any(np.abs(m) > 1 + atol):
        problems.append("entry magnitude exceeds 1")
    herm = 0.5 * (m + m.conj().T)
    if np.linalg.eigvalsh(herm).min() < -psd_tol:
        problems.append("not positive semidefinite")
    return problems

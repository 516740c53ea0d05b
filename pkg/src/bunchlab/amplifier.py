"""Single-mode picture: stimulated emission from a small-gain amplifier.

The amplifier couples its signal mode ``s`` to an internal mode ``0`` that
starts in vacuum. To first order in the idler coupling ``g`` the output is

    |m>_s |k>_s' |0>_0  +  g sqrt(m + 1) |m+1>_s |k>_s' |1>_0

when ``m`` input photons share the amplifier mode and ``k`` sit in other,
distinguishable modes ``s'``. The emission probability (m + 1)|g|^2 is thus
enhanced by m + 1 over spontaneous emission, independent of ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_SMALL_GAIN = 0.1
GAIN_TOL = 1e-12


@dataclass(frozen=True)
class AmplifierGain:
    """Signal gain ``big_g`` and idler coupling ``small_g`` with |G|^2 - |g|^2 = 1."""

    big_g: complex
    small_g: complex

    def __post_init__(self):
        if abs(abs(self.big_g) ** 2 - abs(self.small_g) ** 2 - 1.0) > GAIN_TOL:
            raise ValueError("gain must satisfy |G|^2 - |g|^2 = 1")
        if abs(self.small_g) > MAX_SMALL_GAIN:
            raise ValueError(f"|g| = {abs(self.small_g):.3g} is outside the small-gain "
                             f"regime (|g| <= {MAX_SMALL_GAIN})")

    @classmethod
    def from_coupling(cls, small_g: complex) -> "AmplifierGain":
        """Build the gain pair from g, choosing a real positive G."""
        return cls(big_g=math.sqrt(1.0 + abs(small_g) ** 2), small_g=small_g)


def _check_counts(n_matched, n_unmatched):
    if n_matched < 0 or n_unmatched < 0:
        raise ValueError("photon counts must be non-negative")


def emission_probability(gain: AmplifierGain, n_matched: int, n_unmatched: int = 0) -> float:
    """Lowest-order emission probability (m + 1) |g|^2."""
    _check_counts(n_matched, n_unmatched)
    return (n_matched + 1) * abs(gain.small_g) ** 2


def creation_amplitude(n: int) -> float:
    """Matrix element <n+1| a^dagger |n> = sqrt(n + 1)."""
    return math.sqrt(n + 1)


def output_amplitudes(gain: AmplifierGain, n_matched: int,
                      n_unmatched: int = 0) -> list[tuple[tuple[int, int, int], complex]]:
    """First-order output state as ``[((n_s, n_s', n_0), amplitude), ...]``.

    The state is unnormalized: its squared norm is 1 + (m + 1)|g|^2, which
    differs from 1 only at the order neglected by the expansion.
    """
    _check_counts(n_matched, n_unmatched)
    m, k = n_matched, n_unmatched
    return [
        ((m, k, 0), 1.0 + 0j),
        ((m + 1, k, 1), complex(gain.small_g) * creation_amplitude(m) * creation_amplitude(0)),
    ]

"""Generalized multi-photon bunching at a lossless beam splitter.

Computes bunching coincidence probabilities and enhancement factors for an
N-photon state meeting an M-photon state, with temporal distinguishability
described by Gaussian wave packets.
"""

__version__ = "0.1.0"

from .amplifier import AmplifierGain, emission_probability, output_amplitudes
from .exceptions import (BunchlabError, CapacityError, ConfigurationError,
                         DegenerateNormalizationError, DomainError,
                         EmptyInputError, InvalidPacketError, LabelParseError)
from .interference import (CoincidenceResult, InputConfiguration, ScanResult,
                           coincidence_probability, delay_scan,
                           enhancement_partial, optimal_transmissivity,
                           oracle_permutation_sum, v_overlap)
from .permanents import permanent, permanent_fast, permanent_naive
from .scenarios import (DistinguishabilityScenario, closed_form_enhancement,
                        enumerate_scenarios, format_label, parse_label,
                        scenario_to_packets)
from .temporal_modes import (ORTHOGONALITY_THRESHOLD, WavePacket, check_gram,
                             distinguishable, gram, overlap)

__all__ = [
    "AmplifierGain", "BunchlabError", "CapacityError", "CoincidenceResult",
    "ConfigurationError", "DegenerateNormalizationError",
    "DistinguishabilityScenario", "DomainError", "EmptyInputError",
    "InputConfiguration", "InvalidPacketError", "LabelParseError",
    "ORTHOGONALITY_THRESHOLD", "ScanResult", "WavePacket", "check_gram",
    "closed_form_enhancement", "coincidence_probability", "delay_scan",
    "distinguishable", "emission_probability", "enhancement_partial",
    "enumerate_scenarios", "format_label", "gram", "optimal_transmissivity",
    "oracle_permutation_sum", "output_amplitudes", "overlap", "parse_label",
    "permanent", "permanent_fast", "permanent_naive", "scenario_to_packets",
    "v_overlap",
]

import math

import numpy as np
import pytest
from scipy.linalg import expm

from bunchlab import (AmplifierGain, InputConfiguration, WavePacket,
                      coincidence_probability, emission_probability,
                      output_amplitudes)


def ladder(dim):
    return np.diag(np.sqrt(np.arange(1, dim)), 1)


def fock_operators(cutoff):
    """Annihilation operators for modes s and 0 on a truncated two-mode space."""
    a = ladder(cutoff)
    eye = np.eye(cutoff)
    return np.kron(a, eye), np.kron(eye, a)


def basis(cutoff, n_s, n_0):
    v = np.zeros(cutoff * cutoff, dtype=complex)
    v[n_s * cutoff + n_0] = 1
    return v


def test_gain_constraints():
    AmplifierGain.from_coupling(0.1)
    with pytest.raises(ValueError):
        AmplifierGain(big_g=1.0, small_g=0.05)
    with pytest.raises(ValueError):
        AmplifierGain.from_coupling(0.2)
    gain = AmplifierGain.from_coupling(0.03 + 0.04j)
    assert abs(gain.big_g) ** 2 - abs(gain.small_g) ** 2 == pytest.approx(1, abs=1e-12)


def test_spontaneous_and_stimulated():
    gain = AmplifierGain.from_coupling(0.1)
    g2 = abs(gain.small_g) ** 2
    assert emission_probability(gain, 0) == pytest.approx(g2)
    assert emission_probability(gain, 4) == pytest.approx(5 * g2)
    assert emission_probability(AmplifierGain.from_coupling(math.sqrt(0.01)), 2, 5) == pytest.approx(0.03)


def test_ratio_is_m_plus_one_exactly():
    gain = AmplifierGain.from_coupling(2.0**-4)
    base = emission_probability(gain, 0, 0)
    for m in range(11):
        for k in (0, 1, 7):
            assert emission_probability(gain, m, k) / base == m + 1


def test_output_amplitudes_labels():
    gain = AmplifierGain.from_coupling(0.05j)
    assert output_amplitudes(gain, 0, 0) == [((0, 0, 0), 1), ((1, 0, 1), 0.05j)]
    (_, _), (label, amp) = output_amplitudes(gain, 3, 2)
    assert label == (4, 2, 1)
    assert amp == pytest.approx(0.05j * 2)
    for m in range(6):
        amp = output_amplitudes(gain, m)[1][1]
        assert abs(amp) ** 2 / abs(gain.small_g) ** 2 == pytest.approx(m + 1, rel=1e-14)


def test_norm_to_first_order():
    gain = AmplifierGain.from_coupling(0.08)
    for m in range(5):
        norm = sum(abs(a) ** 2 for _, a in output_amplitudes(gain, m, 3))
        assert norm == pytest.approx(1 + (m + 1) * 0.08**2, rel=1e-14)


@pytest.mark.parametrize("m", range(5))
def test_first_order_matches_operator_action(m):
    cutoff = 8
    a_s, a_0 = fock_operators(cutoff)
    g = 0.07
    out = (np.eye(cutoff**2) + g * a_s.conj().T @ a_0.conj().T) @ basis(cutoff, m, 0)
    (lab0, amp0), (lab1, amp1) = output_amplitudes(AmplifierGain.from_coupling(g), m, 0)
    assert out[m * cutoff] == pytest.approx(amp0)
    assert out[(m + 1) * cutoff + 1] == pytest.approx(amp1)


@pytest.mark.parametrize("m", range(4))
def test_emission_matches_full_evolution_at_small_gain(m):
    cutoff = 10
    a_s, a_0 = fock_operators(cutoff)
    eta = 0.02
    gen = eta * (a_s.conj().T @ a_0.conj().T) - eta * (a_s @ a_0)
    psi = expm(gen) @ basis(cutoff, m, 0)
    p_emit = abs(psi[(m + 1) * cutoff + 1]) ** 2
    approx = emission_probability(AmplifierGain.from_coupling(eta), m)
    assert p_emit == pytest.approx(approx, rel=10 * (m + 2) * eta**2)


def test_agrees_with_beam_splitter_picture():
    for m in range(6):
        a = tuple([WavePacket(0.0)] * m + [WavePacket(40.0)] * 2)
        cfg = InputConfiguration(a, (WavePacket(0.0),), 0.5)
        gain = AmplifierGain.from_coupling(0.05)
        ratio = emission_probability(gain, m, 2) / emission_probability(gain, 0, 2)
        assert coincidence_probability(cfg).enhancement == pytest.approx(ratio, abs=1e-9)

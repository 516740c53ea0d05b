"""
Stimulated emission as bunching
===============================

A small-gain amplifier emits with probability (m + 1)|g|^2 when m input
photons share its mode; photons in other modes do not help. The same m + 1
shows up at a beam splitter when one photon meets m identical photons.
"""

# %%
from bunchlab import (AmplifierGain, InputConfiguration, WavePacket,
                      coincidence_probability, emission_probability,
                      output_amplitudes)

gain = AmplifierGain.from_coupling(0.05)
for m in range(5):
    p = emission_probability(gain, m, n_unmatched=2)
    state, amp = output_amplitudes(gain, m, 2)[1]
    print(f"m={m}: P_emit={p:.5f}  ratio={p / emission_probability(gain, 0, 2):.1f}  "
          f"emitted term {state} amplitude {amp:.4f}")

# %%
# Beam-splitter version: m matched photons plus two far-away spectators.
for m in range(5):
    port_a = tuple([WavePacket(0.0)] * m + [WavePacket(30.0), WavePacket(60.0)])
    res = coincidence_probability(InputConfiguration(port_a, (WavePacket(0.0),), 0.5))
    print(f"m={m}: beam-splitter enhancement {res.enhancement:.6f}")

"""
Two-photon bunching and the 1 + N V law
=======================================

One photon meets N identical photons at a beam splitter. We look at the
probability that all N+1 photons leave through the same output and how it
grows as the single photon is slid into temporal overlap with the others.
"""

# %%
# Two photons (the Hong-Ou-Mandel case): identical packets double the
# chance of finding both photons in the same output.
import numpy as np

from bunchlab import (InputConfiguration, WavePacket, coincidence_probability,
                      enhancement_partial, v_overlap)

photon = WavePacket(center_time=0.0, width=1.0)
hom = InputConfiguration((photon,), (photon,), transmissivity=0.5)
print("N=1, M=1 identical:", coincidence_probability(hom))

# %%
# Moving the port-b photon away reduces the overlap V = |<a|b>|^2 and with
# it the enhancement. For N identical a-photons the enhancement is 1 + N V.
n = 4
group = (photon,) * n
print(f"{'delay':>6} {'V':>10} {'engine':>10} {'1 + N V':>10}")
for delay in (0.0, 0.5, 1.0, 2.0, 3.0, 4.0):
    single = WavePacket(center_time=delay, width=1.0)
    v = v_overlap(single, photon)
    engine = coincidence_probability(InputConfiguration(group, (single,), 0.8)).enhancement
    print(f"{delay:6.1f} {v:10.6f} {engine:10.6f} {enhancement_partial(n, v):10.6f}")

# %%
# The absolute probability depends on the splitting ratio, and is largest
# at T = N / (N + 1); the enhancement does not depend on T at all.
ts = np.linspace(0.0, 1.0, 11)
for t in ts:
    res = coincidence_probability(InputConfiguration(group, (photon,), float(t)))
    print(f"T={t:.1f}  p_quantum={res.p_quantum:8.4f}  enhancement={res.enhancement:.3f}")

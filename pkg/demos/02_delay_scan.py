"""
Scanning a single photon across groups of photons
=================================================

Port a holds three well-separated groups of 1, 2 and 3 identical photons.
Scanning the delay of the single port-b photon produces a bump of height m
above the baseline wherever it overlaps a group of m photons.
"""

# %%
import numpy as np

from bunchlab import InputConfiguration, WavePacket, delay_scan

width = 1.0
separation = 20.0 * width
port_a = tuple(p for i, size in enumerate((1, 2, 3))
               for p in [WavePacket(i * separation, width)] * size)
config = InputConfiguration(port_a, (WavePacket(0.0, width),), transmissivity=6 / 7)

delays = np.linspace(-2 * separation, 4 * separation, 481)
scan = delay_scan(config, delays)

# %%
# Normalized coincidence probability at the group centers and far away.
for tau in (-40.0, 0.0, 10.0, 20.0, 40.0, 80.0):
    i = int(np.argmin(np.abs(delays - tau)))
    print(f"delay {tau:6.1f}: normalized P = {scan.normalized[i]:.6f}")

# %%
# Plot the profile if matplotlib is around.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.plot(delays / width, scan.normalized)
    ax.set_xlabel("delay / width")
    ax.set_ylabel("normalized P")
    fig.tight_layout()
    fig.savefig("delay_scan.png", dpi=120)
    print("wrote delay_scan.png")

"""Gain spectrum of the driven four-level medium.

The control field reshapes the Raman gain line: weak driving gives a
single gain peak at the two-photon resonance (probe detuning 50 gamma
for the default pump detuning), stronger driving splits it into a
doublet separated by the control Rabi frequency, with a transparency
dip in between.  Under the exp(-i omega t) convention gain shows up as
negative Im(chi).

Run:  python demos/01_raman_gain_spectrum.py
Writes demos/output/raman_gain_spectrum.png
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ramanslab import AtomicParams, susceptibility

outdir = Path(__file__).parent / "output"
outdir.mkdir(exist_ok=True)

delta_p = np.linspace(40, 60, 8001)
fig, axes = plt.subplots(2, 1, figsize=(7, 7), sharex=True)

for omega_c in (1.5, 4.0, 6.0, 8.0):
    chi = susceptibility(delta_p, AtomicParams(Omega_c=omega_c))
    axes[0].plot(delta_p, -chi.imag * 1e4, label=f"$\\Omega_c = {omega_c:g}\\gamma$")
    axes[1].plot(delta_p, chi.real * 1e4)

axes[0].set_ylabel(r"gain $-\mathrm{Im}\,\chi \times 10^{4}$")
axes[0].legend()
axes[0].axhline(0, color="gray", lw=0.5)
axes[1].set_ylabel(r"dispersion $\mathrm{Re}\,\chi \times 10^{4}$")
axes[1].set_xlabel(r"probe detuning $\Delta_p/\gamma$")
axes[1].axhline(0, color="gray", lw=0.5)
fig.suptitle("Control field splits the Raman gain line")
fig.tight_layout()
fig.savefig(outdir / "raman_gain_spectrum.png", dpi=150)
print(f"wrote {outdir / 'raman_gain_spectrum.png'}")

# the dip depth at line center grows with the control field
for omega_c in (1.5, 4.0, 6.0, 8.0):
    chi0 = susceptibility(50.0, AtomicParams(Omega_c=omega_c))
    print(f"omega_c = {omega_c:3g} gamma:  chi(50 gamma) = "
          f"{chi0.real:+.3e} {chi0.imag:+.3e}i")

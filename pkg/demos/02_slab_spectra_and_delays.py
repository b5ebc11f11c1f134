"""Reflectance, transmittance and delay spectra of the doped slab.

A slab whose optical thickness is an integer number of half waves at
the carrier would be invisible if undoped; the Raman dopants imprint
their gain line on the reflectance and transmittance.  The delay times
(phase derivatives of r and t) inherit the dispersion: a weak control
field gives positive delays at line center (subluminal), a strong one
flips them negative (superluminal).

Run:  python demos/02_slab_spectra_and_delays.py
Writes demos/output/slab_spectra_weak.png and slab_spectra_strong.png
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ramanslab import (AtomicParams, SlabConfig, build_spectral_response,
                       default_sweep_grid, phase_time)

outdir = Path(__file__).parent / "output"
outdir.mkdir(exist_ok=True)
slab = SlabConfig(thickness="resonant")


def delay_curves(resp):
    return (np.gradient(resp.phi_r, resp.delta_p),
            np.gradient(resp.phi_t, resp.delta_p))


def four_panel(responses, labels, fname, title):
    fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True)
    for resp, label in zip(responses, labels):
        tau_r, tau_t = delay_curves(resp)
        axes[0, 0].plot(resp.delta_p, resp.R, label=label)
        axes[0, 1].plot(resp.delta_p, resp.T)
        axes[1, 0].plot(resp.delta_p, tau_r)
        axes[1, 1].plot(resp.delta_p, tau_t)
    axes[0, 0].set_ylabel("reflectance $|r|^2$")
    axes[0, 1].set_ylabel("transmittance $|t|^2$")
    axes[1, 0].set_ylabel(r"$\tau_r \cdot \gamma$")
    axes[1, 1].set_ylabel(r"$\tau_t \cdot \gamma$")
    for ax in axes[1]:
        ax.set_xlabel(r"$\Delta_p/\gamma$")
        ax.axhline(0, color="gray", lw=0.5)
    axes[0, 0].legend()
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(outdir / fname, dpi=150)
    print(f"wrote {outdir / fname}")


def response(omega_c):
    atoms = AtomicParams(Omega_c=omega_c)
    return build_spectral_response(atoms, slab, default_sweep_grid(atoms, slab))


weak = response(1.5)
four_panel([weak], [r"$\Omega_c=1.5\gamma$"], "slab_spectra_weak.png",
           "Weak control field: single gain peak, subluminal delays")

strong = [response(oc) for oc in (4.0, 6.0, 8.0)]
four_panel(strong, [rf"$\Omega_c={oc:g}\gamma$" for oc in (4.0, 6.0, 8.0)],
           "slab_spectra_strong.png",
           "Strong control fields: split gain peaks, delay dip turns negative")

print("\ncarrier delay times (units 1/gamma):")
for omega_c, resp in [(1.5, weak)] + list(zip((4.0, 6.0, 8.0), strong)):
    tr = phase_time(resp, 50.0, "reflection").per_gamma
    tt = phase_time(resp, 50.0, "transmission").per_gamma
    print(f"  omega_c = {omega_c:3g} gamma:  tau_r = {tr:+.4g}  tau_t = {tt:+.4g}")

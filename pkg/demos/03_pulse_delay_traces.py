"""Wave-packet check of the delay times.

Instead of reading delays off coefficient phases, propagate an actual
20-microsecond Gaussian pulse through the slab and look at where the
reflected and transmitted intensity envelopes peak relative to the
freely evolving reference pulse.  With a weak control field both peaks
arrive late (subluminal); at 6 gamma they arrive early (superluminal),
by an amount far smaller than the pulse width, which is why the zoomed
inset is needed.

Run:  python demos/03_pulse_delay_traces.py
Writes demos/output/pulse_traces_weak.png and pulse_traces_strong.png
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ramanslab import (AtomicParams, PulseConfig, SlabConfig,
                       build_spectral_response, default_sweep_grid, phase_time,
                       synthesize)

outdir = Path(__file__).parent / "output"
outdir.mkdir(exist_ok=True)

STYLES = {"incident": dict(color="k", ls="-", label="reference"),
          "reflected": dict(color="tab:red", ls="-.", label="reflected"),
          "transmitted": dict(color="tab:blue", ls="--", label="transmitted")}


def trace_figure(omega_c, fname, zoom):
    atoms = AtomicParams(Omega_c=omega_c)
    slab = SlabConfig(thickness="resonant")
    resp = build_spectral_response(atoms, slab, default_sweep_grid(atoms, slab))
    ts = synthesize(resp, PulseConfig())

    fig, ax = plt.subplots(figsize=(8, 5))
    for key, style in STYLES.items():
        ax.plot(ts.times_gamma, ts.intensity[key], **style)
    ax.set_xlim(-80, 80)
    ax.set_xlabel(r"time $\cdot\, \gamma$")
    ax.set_ylabel("normalized intensity")
    ax.legend()
    ax.set_title(rf"$\Omega_c = {omega_c:g}\gamma$, resonant thickness")

    inset = ax.inset_axes([0.62, 0.45, 0.35, 0.4])
    for key, style in STYLES.items():
        inset.plot(ts.times_gamma, ts.intensity[key], **style)
    inset.set_xlim(*zoom)
    inset.set_ylim(0.9995, 1.00005)
    inset.set_title("peak region", fontsize=8)
    fig.tight_layout()
    fig.savefig(outdir / fname, dpi=150)
    print(f"wrote {outdir / fname}")

    print(f"omega_c = {omega_c:g} gamma (times in 1/gamma):")
    for key in ("reflected", "transmitted"):
        which = "reflection" if key == "reflected" else "transmission"
        tau = phase_time(resp, 50.0, which).per_gamma
        print(f"  {key:>11}: envelope peak {ts.peak[key]:+.4g}, "
              f"phase time {tau:+.4g}")


trace_figure(1.5, "pulse_traces_weak.png", zoom=(-2, 8))
trace_figure(6.0, "pulse_traces_strong.png", zoom=(-1.5, 1.5))

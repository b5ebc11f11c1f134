"""Scenario presets, JSON configuration and reproducible output files.

A scenario bundles the atomic parameters, slab geometry, pulse shape,
detuning grid and requested outputs.  Presets fig2 .. fig7 cover the
standard parameter set at the documented control-field strengths and
thickness rules; every field can be overridden from a JSON config or
from CLI flags (flags > config > preset > defaults).

Outputs are plain files with deterministic bytes:

* ``spectra.csv``     per-detuning chi, n, reflectance, transmittance and
                      delay-time curves (17 significant digits),
* ``timeseries.csv``  normalized intensities of the three traces,
* ``summary.json``    delays, superluminality flags, distortion metrics
                      and the fully resolved parameter set.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .susceptibility import AtomicParams
from .slab import (SlabConfig, build_spectral_response, default_sweep_grid,
                   phase_time, superluminal_flags)
from .pulse import PulseConfig, TRACES, distortion_metric, synthesize

__all__ = [
    "ConfigError",
    "ParseError",
    "ValidationError",
    "GridSpec",
    "Scenario",
    "PRESETS",
    "scenario_from_mapping",
    "load_config",
    "run_scenario",
    "sweep_control_field",
]

OUTPUT_KINDS = ("spectra", "phase_times", "time_series")


class ConfigError(ValueError):
    """Base class for configuration problems."""


class ParseError(ConfigError):
    """The config file is not valid JSON."""


class ValidationError(ConfigError):
    """A config value violates an invariant; the message names it."""


@dataclass(frozen=True)
class GridSpec:
    """Detuning sweep window (x gamma)."""

    start: float = 40.0
    stop: float = 60.0
    num: int = 20001

    def __post_init__(self):
        if not self.start < self.stop:
            raise ValidationError("grid start < stop violated")
        if self.num < 3:
            raise ValidationError("grid num >= 3 violated")


@dataclass(frozen=True)
class Scenario:
    name: str
    atoms: AtomicParams = field(default_factory=AtomicParams)
    slab: SlabConfig = field(default_factory=SlabConfig)
    pulse: PulseConfig = field(default_factory=PulseConfig)
    grid: GridSpec = field(default_factory=GridSpec)
    outputs: tuple = ("spectra", "phase_times")

    def __post_init__(self):
        if not self.name:
            raise ValidationError("scenario name must be nonempty")
        for kind in self.outputs:
            if kind not in OUTPUT_KINDS:
                raise ValidationError(f"unknown output kind {kind!r}")

    def sweep_grid(self):
        return default_sweep_grid(self.atoms, self.slab,
                                  self.grid.start, self.grid.stop, self.grid.num)


# preset name -> flat config mapping (same keys as the JSON schema)
PRESETS = {
    "fig2": {"omega_c_over_gamma": 1.5, "thickness": "resonant"},
    "fig3": {"omega_c_over_gamma": 1.5, "thickness": "anti-resonant"},
    "fig4": {"omega_c_over_gamma": 4.0, "thickness": "resonant"},
    "fig5": {"omega_c_over_gamma": 4.0, "thickness": "anti-resonant"},
    "fig6": {"omega_c_over_gamma": 1.5, "thickness": "resonant",
             "outputs": ["spectra", "phase_times", "time_series"]},
    "fig7": {"omega_c_over_gamma": 6.0, "thickness": "resonant",
             "outputs": ["spectra", "phase_times", "time_series"]},
}

# config key -> (target dataclass, field name)
_ATOM_KEYS = {
    "gamma_unit": "gamma_unit",
    "omega_1_over_gamma": "Omega_1",
    "omega_c_over_gamma": "Omega_c",
    "beta_over_gamma": "beta",
    "delta_1_over_gamma": "Delta_1",
    "delta_c_over_gamma": "Delta_c",
    "Gamma_21": "Gamma_21", "Gamma_23": "Gamma_23", "Gamma_24": "Gamma_24",
    "Gamma_41": "Gamma_41", "Gamma_43": "Gamma_43", "Gamma_13": "Gamma_13",
    "Gamma_12": "Gamma_12",
    "gamma_12": "gamma_12", "gamma_32": "gamma_32",
    "gamma_34": "gamma_34", "gamma_14": "gamma_14",
}
_SLAB_KEYS = {
    "eps_b": "eps_b",
    "omega0": "omega0",
    "thickness": "thickness",
    "m": "m",
    "d_meters": "d_explicit",
    "delta_p_carrier_over_gamma": "delta_p_carrier",
}
_PULSE_KEYS = {
    "amplitude": "a0",
    "t0_seconds": "t0",
    "span": "span",
    "n_samples": "n_samples",
}
_GRID_KEYS = {
    "grid_start": "start",
    "grid_stop": "stop",
    "grid_points": "num",
}
_KNOWN_KEYS = ({"name", "preset", "outputs"} | set(_ATOM_KEYS)
               | set(_SLAB_KEYS) | set(_PULSE_KEYS) | set(_GRID_KEYS))


def scenario_from_mapping(mapping, name=None):
    """Build a validated Scenario from a flat config mapping.

    An empty mapping yields the full default scenario (control field
    1.5 gamma, resonant thickness).  A "preset" key layers the named
    preset underneath the remaining keys.
    """
    if not isinstance(mapping, dict):
        raise ValidationError("config root must be a JSON object")
    unknown = sorted(set(mapping) - _KNOWN_KEYS)
    if unknown:
        raise ValidationError(f"unknown config keys: {', '.join(unknown)}")

    merged = {}
    preset = mapping.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ValidationError(
                f"unknown preset {preset!r}; valid: {', '.join(sorted(PRESETS))}")
        merged.update(PRESETS[preset])
    merged.update({k: v for k, v in mapping.items() if k != "preset"})

    def pick(keymap):
        return {dst: merged[src] for src, dst in keymap.items() if src in merged}

    # pulse shares the slab carrier frequency unless set explicitly
    pulse_kwargs = pick(_PULSE_KEYS)
    slab_kwargs = pick(_SLAB_KEYS)
    if "omega0" in slab_kwargs:
        pulse_kwargs.setdefault("omega0", slab_kwargs["omega0"])

    try:
        atoms = AtomicParams(**pick(_ATOM_KEYS))
        slab = SlabConfig(**slab_kwargs)
        pulse = PulseConfig(**pulse_kwargs)
        grid = GridSpec(**pick(_GRID_KEYS))
    except (ValueError, TypeError) as exc:
        raise ValidationError(str(exc)) from exc

    outputs = merged.get("outputs", ["spectra", "phase_times"])
    if isinstance(outputs, str):
        outputs = [outputs]
    scenario_name = name or merged.get("name") or preset or "custom"
    return Scenario(name=scenario_name, atoms=atoms, slab=slab,
                    pulse=pulse, grid=grid, outputs=tuple(outputs))


def load_config(path):
    """Parse and validate a JSON scenario config file."""
    text = Path(path).read_text()
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return scenario_from_mapping(data, name=Path(path).stem)


def _fmt(x):
    return f"{x:.17g}"


def _resolved_parameters(s: Scenario):
    atoms = dataclasses.asdict(s.atoms)
    slab = dataclasses.asdict(s.slab)
    slab["d_meters"] = s.slab.d
    slab["lambda0_meters"] = s.slab.lambda0
    slab["d_over_c_gamma"] = s.slab.d_over_c * s.atoms.gamma_unit
    pulse = dataclasses.asdict(s.pulse)
    return {"atoms": atoms, "slab": slab, "pulse": pulse,
            "grid": dataclasses.asdict(s.grid), "outputs": list(s.outputs)}


def _round6(x):
    return float(f"{x:.6g}")


def run_scenario(s: Scenario, outdir):
    """Run one scenario and write its output files into ``outdir``.

    Returns the summary dict.  Output bytes are a pure function of the
    scenario, so re-running is byte-identical.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    gamma = s.atoms.gamma_unit

    response = build_spectral_response(s.atoms, s.slab, s.sweep_grid())
    carrier = s.slab.delta_p_carrier
    tau_r = phase_time(response, carrier, "reflection")
    tau_t = phase_time(response, carrier, "transmission")
    refl_super, trans_super = superluminal_flags(tau_r.seconds, tau_t.seconds, s.slab)

    summary = {
        "scenario": s.name,
        "parameters": _resolved_parameters(s),
        "phase_time": {
            "tau_r_gamma": tau_r.per_gamma,
            "tau_t_gamma": tau_t.per_gamma,
            "tau_r_seconds": tau_r.seconds,
            "tau_t_seconds": tau_t.seconds,
        },
        "superluminal": {"reflection": bool(refl_super),
                         "transmission": bool(trans_super)},
        "d_over_c_gamma": s.slab.d_over_c * gamma,
    }

    if "spectra" in s.outputs:
        # delay curves along the grid from the unwrapped phases
        taur_grid = np.gradient(response.phi_r, response.delta_p)
        taut_grid = np.gradient(response.phi_t, response.delta_p)
        with open(outdir / "spectra.csv", "w", newline="\n") as f:
            f.write("delta_p_over_gamma,re_chi,im_chi,re_n,im_n,"
                    "reflectance,transmittance,tau_r_gamma,tau_t_gamma\n")
            for i in range(response.delta_p.size):
                f.write(",".join(_fmt(v) for v in (
                    response.delta_p[i],
                    response.chi[i].real, response.chi[i].imag,
                    response.n[i].real, response.n[i].imag,
                    response.R[i], response.T[i],
                    taur_grid[i], taut_grid[i])) + "\n")

    if "time_series" in s.outputs:
        ts = synthesize(response, s.pulse)
        with open(outdir / "timeseries.csv", "w", newline="\n") as f:
            f.write("t_gamma,i_ref_norm,i_refl_norm,i_trans_norm\n")
            for i in range(ts.times_gamma.size):
                f.write(",".join(_fmt(v) for v in (
                    ts.times_gamma[i],
                    ts.intensity["incident"][i],
                    ts.intensity["reflected"][i],
                    ts.intensity["transmitted"][i])) + "\n")
        summary["wave_packet"] = {f"peak_{k}_gamma": ts.peak[k] for k in TRACES}
        summary["distortion"] = {
            k: distortion_metric(ts.times_gamma, ts.envelope[k], ts.envelope["incident"])
            for k in ("reflected", "transmitted")}

    summary["display"] = {
        "tau_r_gamma": _round6(tau_r.per_gamma),
        "tau_t_gamma": _round6(tau_t.per_gamma),
    }
    if "wave_packet" in summary:
        summary["display"].update(
            {k: _round6(v) for k, v in summary["wave_packet"].items()})

    with open(outdir / "summary.json", "w", newline="\n") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
        f.write("\n")
    return summary


def sweep_control_field(s: Scenario, omega_c_list):
    """Phase delays and superluminality per control-field strength.

    Returns {"rows": [...], "tau_r_sign_change": [lo, hi] | None,
    "transition_count": int}.  The sign-change interval brackets the
    subluminal-to-superluminal switch of the reflected delay between
    consecutive list entries.
    """
    if len(omega_c_list) == 0:
        raise ValidationError("omega_c_list must be nonempty")
    rows = []
    for oc in omega_c_list:
        atoms = dataclasses.replace(s.atoms, Omega_c=float(oc))
        response = build_spectral_response(atoms, s.slab,
                                           default_sweep_grid(atoms, s.slab,
                                                              s.grid.start,
                                                              s.grid.stop,
                                                              s.grid.num))
        carrier = s.slab.delta_p_carrier
        tau_r = phase_time(response, carrier, "reflection")
        tau_t = phase_time(response, carrier, "transmission")
        refl_super, trans_super = superluminal_flags(
            tau_r.seconds, tau_t.seconds, s.slab)
        rows.append({
            "omega_c_over_gamma": float(oc),
            "tau_r_gamma": tau_r.per_gamma,
            "tau_t_gamma": tau_t.per_gamma,
            "reflection_superluminal": bool(refl_super),
            "transmission_superluminal": bool(trans_super),
        })

    sign_change = None
    changes = 0
    for a, b in zip(rows, rows[1:]):
        if np.sign(a["tau_r_gamma"]) != np.sign(b["tau_r_gamma"]):
            changes += 1
            if sign_change is None:
                sign_change = [a["omega_c_over_gamma"], b["omega_c_over_gamma"]]
    return {"rows": rows, "tau_r_sign_change": sign_change,
            "transition_count": changes}

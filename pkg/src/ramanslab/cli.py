"""Command-line front end.

Subcommands:

* ``run <preset|config.json>``   compute one scenario, write output files
* ``sweep --omega-c ...``        delay table over control-field strengths
* ``validate <config.json>``     parse, validate and echo the resolved scenario
* ``list-presets``               show the built-in scenarios

Exit code 0 on success; on failure a machine-readable JSON object
(`{"error": ..., "message": ...}`) goes to stderr and the exit code is
nonzero.  Flags override config fields, configs override presets,
presets override defaults.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import __version__
from .scenarios import (PRESETS, ConfigError, Scenario, load_config,
                        run_scenario, scenario_from_mapping,
                        sweep_control_field, _resolved_parameters, _fmt)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


_OVERRIDE_FLAGS = {
    "omega_c": ("omega_c_over_gamma", float),
    "omega_1": ("omega_1_over_gamma", float),
    "beta": ("beta_over_gamma", float),
    "eps_b": ("eps_b", float),
    "thickness": ("thickness", str),
    "m": ("m", int),
    "d_meters": ("d_meters", float),
    "t0": ("t0_seconds", float),
    "span": ("span", float),
    "n_samples": ("n_samples", int),
    "name": ("name", str),
}


def _add_override_flags(p):
    p.add_argument("--omega-c", type=float, help="control-field Rabi frequency (x gamma)")
    p.add_argument("--omega-1", type=float, help="pump Rabi frequency (x gamma)")
    p.add_argument("--beta", type=float, help="coupling prefactor (x gamma)")
    p.add_argument("--eps-b", type=float, help="background dielectric constant")
    p.add_argument("--thickness", choices=["resonant", "anti-resonant", "explicit"])
    p.add_argument("--m", type=int, help="thickness order m")
    p.add_argument("--d-meters", type=float, help="explicit thickness (m)")
    p.add_argument("--t0", type=float, help="pulse width (s)")
    p.add_argument("--span", type=float, help="spectral half-window (x 1/t0)")
    p.add_argument("--n-samples", type=int, help="time-grid size")
    p.add_argument("--outputs", help="comma list of spectra,phase_times,time_series")
    p.add_argument("--name", help="scenario name for outputs")


def _build_parser():
    parser = _Parser(prog="ramanslab",
                     description="Delay of light pulses reflected from and "
                                 "transmitted through a Raman-gain doped slab")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario")
    p_run.add_argument("scenario", help="preset name or JSON config path")
    p_run.add_argument("--outdir", default="out", help="output directory")
    _add_override_flags(p_run)

    p_sweep = sub.add_parser("sweep", help="sweep the control field")
    p_sweep.add_argument("scenario", nargs="?", default="fig2",
                         help="base preset name or JSON config path")
    p_sweep.add_argument("--omega-c", required=True,
                         help="comma-separated control-field values (x gamma)")
    p_sweep.add_argument("--outdir", default="out", help="output directory")
    p_sweep.add_argument("--thickness",
                         choices=["resonant", "anti-resonant", "explicit"])

    p_val = sub.add_parser("validate", help="validate a JSON config")
    p_val.add_argument("config", help="JSON config path")

    sub.add_parser("list-presets", help="list built-in scenarios")
    return parser


def _base_scenario(token) -> Scenario:
    if token in PRESETS:
        return scenario_from_mapping({"preset": token}, name=token)
    if Path(token).exists():
        return load_config(token)
    raise ConfigError(
        f"{token!r} is neither a preset ({', '.join(sorted(PRESETS))}) "
        f"nor an existing config file")


def _apply_overrides(scenario: Scenario, args) -> Scenario:
    overrides = {}
    for flag, (key, cast) in _OVERRIDE_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = cast(value)
    outputs = getattr(args, "outputs", None)
    if outputs:
        overrides["outputs"] = [o.strip() for o in outputs.split(",") if o.strip()]
    if not overrides:
        return scenario
    # rebuild through the mapping layer so validation stays in one place
    name = overrides.pop("name", scenario.name)
    mapping = _scenario_to_mapping(scenario)
    mapping.update(overrides)
    return scenario_from_mapping(mapping, name=name)


def _scenario_to_mapping(s: Scenario):
    a, sl, pu, gr = s.atoms, s.slab, s.pulse, s.grid
    mapping = {
        "gamma_unit": a.gamma_unit,
        "omega_1_over_gamma": a.Omega_1,
        "omega_c_over_gamma": a.Omega_c,
        "beta_over_gamma": a.beta,
        "delta_1_over_gamma": a.Delta_1,
        "delta_c_over_gamma": a.Delta_c,
        "Gamma_21": a.Gamma_21, "Gamma_23": a.Gamma_23, "Gamma_24": a.Gamma_24,
        "Gamma_41": a.Gamma_41, "Gamma_43": a.Gamma_43, "Gamma_13": a.Gamma_13,
        "Gamma_12": a.Gamma_12,
        "gamma_12": a.gamma_12, "gamma_32": a.gamma_32,
        "gamma_34": a.gamma_34, "gamma_14": a.gamma_14,
        "eps_b": sl.eps_b, "omega0": sl.omega0, "thickness": sl.thickness,
        "m": sl.m,
        "delta_p_carrier_over_gamma": sl.delta_p_carrier,
        "amplitude": pu.a0, "t0_seconds": pu.t0, "span": pu.span,
        "n_samples": pu.n_samples,
        "grid_start": gr.start, "grid_stop": gr.stop, "grid_points": gr.num,
        "outputs": list(s.outputs),
    }
    if sl.d_explicit is not None:
        mapping["d_meters"] = sl.d_explicit
    return mapping


def _cmd_run(args):
    scenario = _apply_overrides(_base_scenario(args.scenario), args)
    summary = run_scenario(scenario, Path(args.outdir) / scenario.name)
    print(json.dumps(summary["display"], sort_keys=True))
    return 0


def _cmd_sweep(args):
    scenario = _base_scenario(args.scenario)
    if args.thickness:
        scenario = dataclasses.replace(
            scenario, slab=dataclasses.replace(scenario.slab,
                                               thickness=args.thickness))
    try:
        values = [float(v) for v in args.omega_c.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"--omega-c: {exc}") from exc
    result = sweep_control_field(scenario, values)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "sweep.csv", "w", newline="\n") as f:
        f.write("omega_c_over_gamma,tau_r_gamma,tau_t_gamma,"
                "reflection_superluminal,transmission_superluminal\n")
        for row in result["rows"]:
            f.write(",".join([
                _fmt(row["omega_c_over_gamma"]),
                _fmt(row["tau_r_gamma"]), _fmt(row["tau_t_gamma"]),
                str(row["reflection_superluminal"]).lower(),
                str(row["transmission_superluminal"]).lower()]) + "\n")
    with open(outdir / "sweep_summary.json", "w", newline="\n") as f:
        json.dump(result, f, indent=2, sort_keys=True)
        f.write("\n")

    for row in result["rows"]:
        print(f"omega_c={row['omega_c_over_gamma']:g}  "
              f"tau_r={row['tau_r_gamma']:+.6g}/gamma  "
              f"tau_t={row['tau_t_gamma']:+.6g}/gamma  "
              f"superluminal: r={row['reflection_superluminal']} "
              f"t={row['transmission_superluminal']}")
    if result["tau_r_sign_change"]:
        lo, hi = result["tau_r_sign_change"]
        print(f"tau_r changes sign between omega_c = {lo:g} and {hi:g}")
    return 0


def _cmd_validate(args):
    scenario = load_config(args.config)
    print(json.dumps({"name": scenario.name,
                      "parameters": _resolved_parameters(scenario)},
                     indent=2, sort_keys=True))
    return 0


def _cmd_list_presets(_args):
    for name in sorted(PRESETS):
        spec = PRESETS[name]
        extra = " + time series" if "outputs" in spec else ""
        print(f"{name}: omega_c={spec['omega_c_over_gamma']:g} gamma, "
              f"{spec['thickness']} thickness{extra}")
    return 0


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "run": _cmd_run,
            "sweep": _cmd_sweep,
            "validate": _cmd_validate,
            "list-presets": _cmd_list_presets,
        }[args.command]
        return handler(args)
    except ConfigError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

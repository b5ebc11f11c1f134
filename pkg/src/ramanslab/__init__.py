"""Reflection and transmission of narrowband pulses through a slab doped
with control-field-driven Raman-gain atoms, including the phase delay
times that mark subluminal or superluminal pulse propagation."""

__version__ = "0.1.0"

from .susceptibility import (AtomicParams, BranchAmbiguity,
                             DegenerateDenominator, coherence_factor,
                             raman_denominator, refractive_index,
                             susceptibility)
from .slab import (C_LIGHT, GridTooCoarse, PhaseTime, SlabConfig,
                   SpectralResponse, ZeroDenominator, build_spectral_response,
                   default_sweep_grid, phase_time, reflection_coefficient,
                   slab_coefficients, superluminal_flags, transfer_matrix,
                   transmission_coefficient)
from .pulse import (EdgePeak, PulseConfig, TimeSeries, WindowTooNarrow,
                    baseband_envelope, distortion_metric, gaussian_spectrum,
                    peak_time, rms_width, synthesize)
from .scenarios import (PRESETS, ConfigError, GridSpec, ParseError, Scenario,
                        ValidationError, load_config, run_scenario,
                        scenario_from_mapping, sweep_control_field)

__all__ = [
    "AtomicParams", "BranchAmbiguity", "DegenerateDenominator",
    "coherence_factor", "raman_denominator", "refractive_index",
    "susceptibility",
    "C_LIGHT", "GridTooCoarse", "PhaseTime", "SlabConfig", "SpectralResponse",
    "ZeroDenominator", "build_spectral_response", "default_sweep_grid",
    "phase_time", "reflection_coefficient", "slab_coefficients",
    "superluminal_flags", "transfer_matrix", "transmission_coefficient",
    "EdgePeak", "PulseConfig", "TimeSeries", "WindowTooNarrow",
    "baseband_envelope", "distortion_metric", "gaussian_spectrum",
    "peak_time", "rms_width", "synthesize",
    "PRESETS", "ConfigError", "GridSpec", "ParseError", "Scenario",
    "ValidationError", "load_config", "run_scenario", "scenario_from_mapping",
    "sweep_control_field",
]

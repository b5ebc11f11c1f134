"""Slab reflection/transmission coefficients and phase delay times.

A homogeneous nonmagnetic slab of thickness d and complex index n(omega)
sits in vacuum; a plane wave hits it at normal incidence.  The field and
its normalized derivative transfer across the slab as

    M = [[cos(theta), sin(theta)/n], [-n sin(theta), cos(theta)]],

with theta = n omega d / c.  Matching to incoming/outgoing plane waves
gives

    r = i (n - 1/n) sin(theta) / (2 cos(theta) - i (n + 1/n) sin(theta)),
    t = 2 / (2 cos(theta) - i (n + 1/n) sin(theta)).

These satisfy |r|^2 + |t|^2 = 1 for real n and reduce to r = 0,
t = exp(i omega d / c) in vacuum.  t is referenced to the back face, so
the vacuum transit d/c is part of its phase.

Delay times are derivatives of the unwrapped coefficient phases with
respect to absolute frequency.  Reflection is superluminal when
tau_r < 0; transmission is superluminal when tau_t < d/c.

The slab thickness is normally tied to the carrier wavelength: the
"resonant" rule makes the optical thickness at the carrier an integer
number of half waves (theta = m pi for the undoped slab), the
"anti-resonant" rule a half-odd number.  Those rules are applied through
the phase identity sqrt(eps_b) omega0 d / c = m pi (or (2m+1) pi/2)
rather than through a thickness rounded to meters, so the carrier sits
on the slab resonance to machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple
import numpy as np

from .susceptibility import AtomicParams, refractive_index, susceptibility

__all__ = [
    "C_LIGHT",
    "SlabConfig",
    "SpectralResponse",
    "PhaseTime",
    "ZeroDenominator",
    "GridTooCoarse",
    "transfer_matrix",
    "slab_coefficients",
    "slab_coefficients_split",
    "reflection_coefficient",
    "transmission_coefficient",
    "build_spectral_response",
    "default_sweep_grid",
    "phase_time",
    "superluminal_flags",
]

C_LIGHT = 299792458.0  # m/s

# |denominator| below this counts as a lasing-threshold pole.
POLE_THRESHOLD = 1e-30

THICKNESS_RULES = ("resonant", "anti-resonant", "explicit")


class ZeroDenominator(ValueError):
    """The slab denominator vanished (lasing threshold); results diverge."""

    def __init__(self, message, delta_p=None):
        super().__init__(message)
        self.delta_p = delta_p


class GridTooCoarse(ValueError):
    """Central-difference delay failed its Richardson consistency check."""


@dataclass(frozen=True)
class SlabConfig:
    """Geometry and background optics of the doped slab.

    ``thickness`` selects how d is fixed: "resonant" and "anti-resonant"
    derive it from the carrier wavelength and the order m, "explicit"
    takes ``d_explicit`` in meters.
    """

    eps_b: float = 4.0
    omega0: float = 1.0e15        # carrier angular frequency, rad/s
    thickness: str = "resonant"
    m: int = 1500
    d_explicit: float | None = None
    delta_p_carrier: float = 50.0  # probe detuning of the carrier, x gamma

    def __post_init__(self):
        if self.eps_b <= 0:
            raise ValueError("eps_b > 0 violated")
        if self.thickness not in THICKNESS_RULES:
            raise ValueError(f"thickness must be one of {THICKNESS_RULES}")
        if self.thickness == "explicit":
            if self.d_explicit is None or self.d_explicit <= 0:
                raise ValueError("explicit thickness requires d_explicit > 0")
        else:
            if int(self.m) != self.m or self.m < 1:
                raise ValueError("m >= 1 integer violated")

    @property
    def lambda0(self):
        """Carrier vacuum wavelength (m)."""
        return 2 * np.pi * C_LIGHT / self.omega0

    @property
    def vacuum_phase(self):
        """omega0 * d / c, the carrier phase across the slab width in vacuum."""
        if self.thickness == "resonant":
            return self.m * np.pi / np.sqrt(self.eps_b)
        if self.thickness == "anti-resonant":
            return (2 * self.m + 1) * np.pi / (2 * np.sqrt(self.eps_b))
        return self.omega0 * self.d_explicit / C_LIGHT

    @property
    def d(self):
        """Slab thickness (m)."""
        return self.vacuum_phase * C_LIGHT / self.omega0

    @property
    def d_over_c(self):
        """Vacuum transit time of the slab width (s)."""
        return self.vacuum_phase / self.omega0

    def theta(self, n, omega):
        """Complex optical phase n * omega * d / c across the slab."""
        return n * self.vacuum_phase * (omega / self.omega0)

    def theta_parts(self, n, delta_p, gamma_unit):
        """Optical phase split as (carrier part, increment).

        The full phase is thousands of radians while a detuning step
        changes it by ~1e-9 rad; returning the two parts separately lets
        the trig evaluation keep the increment at full precision instead
        of losing it to the float64 quantum of the carrier part.
        """
        base = n * self.vacuum_phase
        shift = (np.asarray(delta_p, dtype=float) - self.delta_p_carrier) \
            * gamma_unit / self.omega0
        return base, base * shift

    def omega_of(self, delta_p, gamma_unit):
        """Absolute frequency of the probe component at detuning delta_p."""
        return self.omega0 + (np.asarray(delta_p, dtype=float) - self.delta_p_carrier) * gamma_unit


def transfer_matrix(n, omega, dz):
    """Field transfer matrix of a homogeneous layer of width dz (m).

    Maps (E, E' c/omega) across the layer; det M = 1 identically.
    """
    if dz < 0:
        raise ValueError("dz >= 0 violated")
    theta = n * omega * dz / C_LIGHT
    return np.array([
        [np.cos(theta), np.sin(theta) / n],
        [-n * np.sin(theta), np.cos(theta)],
    ])


def _coefficients_from_trig(n, cos_t, sin_t, delta_p=None):
    den = 2 * cos_t - 1j * (n + 1 / n) * sin_t
    bad = np.abs(den) < POLE_THRESHOLD
    if np.any(bad):
        where = None
        if delta_p is not None:
            where = np.atleast_1d(np.asarray(delta_p))[np.atleast_1d(bad)]
        raise ZeroDenominator(
            f"slab denominator vanished (lasing threshold) at delta_p={where}",
            delta_p=where)
    r = 1j * (n - 1 / n) * sin_t / den
    t = 2 / den
    return r, t


def slab_coefficients(n, theta, delta_p=None):
    """Reflection and transmission coefficients at optical phase theta.

    Vectorized over (n, theta).  Raises :class:`ZeroDenominator` on a
    lasing-threshold pole; ``delta_p`` is only used to label the
    offending grid points in that error.
    """
    n = np.asarray(n, dtype=complex)
    return _coefficients_from_trig(n, np.cos(theta), np.sin(theta), delta_p)


def slab_coefficients_split(n, theta_base, theta_inc, delta_p=None):
    """Coefficients at theta = theta_base + theta_inc via angle addition.

    Keeps a tiny increment on top of a large carrier phase at full
    precision; see :meth:`SlabConfig.theta_parts`.
    """
    n = np.asarray(n, dtype=complex)
    cb, sb = np.cos(theta_base), np.sin(theta_base)
    ci, si = np.cos(theta_inc), np.sin(theta_inc)
    return _coefficients_from_trig(n, cb * ci - sb * si, sb * ci + cb * si, delta_p)


def reflection_coefficient(n, omega, d):
    """r for a slab of index n and thickness d (m) at frequency omega."""
    return slab_coefficients(n, n * omega * d / C_LIGHT)[0]


def transmission_coefficient(n, omega, d):
    """t for a slab of index n and thickness d (m) at frequency omega."""
    return slab_coefficients(n, n * omega * d / C_LIGHT)[1]


@dataclass
class SpectralResponse:
    """Per-frequency response of the doped slab on a detuning grid.

    Phases are unwrapped by nearest-branch accumulation anchored at the
    low end of the grid.  Carries its generating parameters so delay
    evaluation and pulse synthesis can re-evaluate coefficients exactly
    at off-grid points.
    """

    delta_p: np.ndarray   # x gamma, strictly increasing
    omega: np.ndarray     # rad/s
    chi: np.ndarray
    n: np.ndarray
    r: np.ndarray
    t: np.ndarray
    phi_r: np.ndarray     # unwrapped, rad
    phi_t: np.ndarray
    R: np.ndarray         # |r|^2
    T: np.ndarray         # |t|^2
    params: AtomicParams
    slab: SlabConfig

    def evaluate(self, delta_p):
        """Exact (r, t) at arbitrary detunings, same medium and slab."""
        chi = susceptibility(delta_p, self.params)
        n = refractive_index(chi, self.slab.eps_b)
        base, inc = self.slab.theta_parts(n, delta_p, self.params.gamma_unit)
        return slab_coefficients_split(n, base, inc, delta_p=delta_p)


# Grid spacing required around the narrow gain features (x gamma).
MAX_FEATURE_SPACING = 1e-2


def default_sweep_grid(params: AtomicParams, slab: SlabConfig,
                       start=40.0, stop=60.0, num=20001):
    """Detuning grid for spectra: uniform, with a 10x denser core when the
    control field is weak enough (< 2 gamma) for the narrow Raman feature
    to need it."""
    base = np.linspace(start, stop, num)
    if params.Omega_c >= 2.0:
        return base
    c = slab.delta_p_carrier
    half = 0.5
    if c - half <= start or c + half >= stop:
        return base
    step = (stop - start) / (num - 1)
    inner = np.linspace(c - half, c + half, int(round(2 * half / (step / 10))) + 1)
    outer = base[(base < c - half - 1e-9) | (base > c + half + 1e-9)]
    return np.sort(np.concatenate([outer, inner]))


def build_spectral_response(params: AtomicParams, slab: SlabConfig, grid):
    """Evaluate chi, n, r, t with unwrapped phases over a detuning grid."""
    dp = np.asarray(grid, dtype=float)
    if dp.ndim != 1 or dp.size < 3:
        raise ValueError("grid must be a 1-d array with at least 3 points")
    steps = np.diff(dp)
    if np.any(steps <= 0):
        raise ValueError("grid strictly increasing violated")
    c = slab.delta_p_carrier
    near = (dp[:-1] < c + 5.0) & (dp[1:] > c - 5.0)  # step touches the feature region
    if np.any(steps[near] > MAX_FEATURE_SPACING * (1 + 1e-9)):
        raise ValueError(
            f"grid spacing near the carrier exceeds {MAX_FEATURE_SPACING} gamma")

    chi = susceptibility(dp, params)
    n = refractive_index(chi, slab.eps_b)
    omega = slab.omega_of(dp, params.gamma_unit)
    base, inc = slab.theta_parts(n, dp, params.gamma_unit)
    r, t = slab_coefficients_split(n, base, inc, delta_p=dp)
    phi_r = np.unwrap(np.angle(r))
    phi_t = np.unwrap(np.angle(t))
    return SpectralResponse(
        delta_p=dp, omega=omega, chi=chi, n=n, r=r, t=t,
        phi_r=phi_r, phi_t=phi_t,
        R=np.abs(r) ** 2, T=np.abs(t) ** 2,
        params=params, slab=slab)


class PhaseTime(NamedTuple):
    seconds: float
    per_gamma: float


def phase_time(response: SpectralResponse, at, which="reflection",
               h=1e-3, richardson_tol=1e-3):
    """Phase delay tau = d(phi)/d(omega) at detuning ``at``.

    Central difference with step h (x gamma) on branch-consistent phases;
    a Richardson extrapolation against step h/2 guards the step size and
    raises :class:`GridTooCoarse` if the two disagree beyond
    ``richardson_tol`` relative.
    """
    if which not in ("reflection", "transmission"):
        raise ValueError("which must be 'reflection' or 'transmission'")
    idx = 0 if which == "reflection" else 1
    dp = response.delta_p
    if not (dp[0] <= at - h and at + h <= dp[-1]):
        raise ValueError("evaluation point (at +- h) not interior to the grid")

    def central(step):
        lo = response.evaluate(at - step)[idx]
        hi = response.evaluate(at + step)[idx]
        # angle of the ratio = phase increment on the nearest branch
        return np.angle(hi / lo) / (2 * step)

    plain = central(h)
    refined = central(h / 2)
    richardson = (4 * refined - plain) / 3
    if abs(richardson - plain) > richardson_tol * abs(richardson):
        raise GridTooCoarse(
            f"phase-time step h={h} fails Richardson check at delta_p={at}: "
            f"central={plain}, extrapolated={richardson}")
    per_gamma = float(plain)
    return PhaseTime(seconds=per_gamma / response.params.gamma_unit,
                     per_gamma=per_gamma)


def superluminal_flags(tau_r_seconds, tau_t_seconds, slab: SlabConfig):
    """(reflection, transmission) superluminality per the delay criteria."""
    return tau_r_seconds < 0, tau_t_seconds < slab.d_over_c

"""Probe susceptibility of a driven four-level Raman-gain medium.

The medium is a vapor of four-level atoms in N configuration: a strong
pump couples |1>-|2>, a weak probe couples |3>-|2>, and a control field
couples |3>-|4>.  A two-photon (pump + probe) stimulated Raman process
amplifies the probe; the control field dresses the lower Raman coherence
and thereby reshapes the gain line.

Everything here works in a dimensionless unit system where the reference
rate ``gamma_unit`` equals 1: rates, detunings and Rabi frequencies are
multiples of gamma, the returned susceptibility is dimensionless and the
coherence factor carries gamma^-3.  Conversion to SI happens only where
optical path lengths are formed (see :mod:`ramanslab.slab`).

Sign convention: fields evolve as exp(-i omega t), so gain corresponds
to Im(chi) < 0 and absorption to Im(chi) > 0.

The probe is treated in the weak-field limit: the probe coherence is
linear in the probe Rabi frequency, which therefore cancels out of chi
and never appears as a parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

__all__ = [
    "AtomicParams",
    "DegenerateDenominator",
    "BranchAmbiguity",
    "raman_denominator",
    "coherence_factor",
    "susceptibility",
    "refractive_index",
]

# Below this magnitude (gamma units) a denominator counts as a pole.
POLE_THRESHOLD = 1e-30


class DegenerateDenominator(ValueError):
    """A resonance denominator vanished; the parameter set sits on a pole."""

    def __init__(self, message, delta_p=None):
        super().__init__(message)
        self.delta_p = delta_p


class BranchAmbiguity(ValueError):
    """eps_b + chi landed on the negative real axis; no physical root."""


@dataclass(frozen=True)
class AtomicParams:
    """Rates, detunings and drive strengths of the four-level system.

    All rate-like fields are multiples of ``gamma_unit`` (rad/s).  The
    probe detuning is not stored here; it is the sweep variable and is
    passed per evaluation.

    ``beta`` bundles number density and probe dipole moment into a single
    coupling prefactor (2 N |d23|^2 / (hbar eps0), expressed in gamma).

    ``Gamma_12`` enters only through its square in the pump-saturation
    denominator; it defaults to ``Gamma_21`` but stays overridable.

    Defaults are the reference scenario used throughout: pump detuned by
    50 gamma, control on resonance, ``Omega_1 = 4`` calibrated so the
    reference delay values are reproduced (see README).
    """

    gamma_unit: float = 1.0e6

    # dephasing rates of the optical and Raman coherences (x gamma)
    Gamma_21: float = 2.01
    Gamma_23: float = 2.01
    Gamma_24: float = 4.01
    Gamma_41: float = 2.01
    Gamma_43: float = 2.01
    Gamma_13: float = 0.01
    Gamma_12: float | None = None

    # spontaneous decay rates (x gamma)
    gamma_12: float = 2.0
    gamma_32: float = 2.0
    gamma_34: float = 2.0
    gamma_14: float = 2.0

    # detunings (x gamma)
    Delta_1: float = 50.0
    Delta_c: float = 0.0

    # Rabi frequencies (x gamma)
    Omega_1: float = 4.0
    Omega_c: float = 1.5

    # coupling prefactor (x gamma)
    beta: float = 0.16

    def __post_init__(self):
        if self.Gamma_12 is None:
            object.__setattr__(self, "Gamma_12", self.Gamma_21)
        if self.gamma_unit <= 0:
            raise ValueError("gamma_unit > 0 violated")
        for name in ("Gamma_21", "Gamma_23", "Gamma_24", "Gamma_41",
                     "Gamma_43", "Gamma_13", "Gamma_12",
                     "gamma_12", "gamma_32", "gamma_34", "gamma_14"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} > 0 violated (rates are strictly positive)")
        if self.beta < 0:
            raise ValueError("beta >= 0 violated")
        if self.Omega_1 < 0:
            raise ValueError("Omega_1 >= 0 violated")
        if self.Omega_c < 0:
            raise ValueError("Omega_c >= 0 violated")


def _as_complex(delta_p):
    dp = np.asarray(delta_p, dtype=float)
    return dp, np.ndim(delta_p) == 0


def raman_denominator(delta_p, params: AtomicParams):
    """Control-field-dressed denominator A of the probe coherence.

    A = (Gamma_23 - i dp)(Gamma_24 - i (dp - Delta_c)) + |Omega_c|^2 / 4,
    in units of gamma^2.  Total function: with strictly positive rates the
    two factors cannot both vanish for real detunings.
    """
    dp, scalar = _as_complex(delta_p)
    p = params
    A = (p.Gamma_23 - 1j * dp) * (p.Gamma_24 - 1j * (dp - p.Delta_c)) \
        + abs(p.Omega_c) ** 2 / 4
    return complex(A) if scalar else A


def coherence_factor(delta_p, params: AtomicParams):
    """Raman coherence response D (units gamma^-3).

    D collects the steady-state response of the probe coherence per unit
    pump intensity: a Raman-scattering term fed by the pumped population
    plus a direct two-photon pathway, both screened by the dressed
    denominator A.  Raises :class:`DegenerateDenominator` when A or the
    dressed two-photon denominator falls below the pole threshold.
    """
    dp, scalar = _as_complex(delta_p)
    p = params
    A = (p.Gamma_23 - 1j * dp) * (p.Gamma_24 - 1j * (dp - p.Delta_c)) \
        + abs(p.Omega_c) ** 2 / 4

    bad = np.abs(A) < POLE_THRESHOLD
    if np.any(bad):
        raise DegenerateDenominator(
            "dressed denominator A vanished", delta_p=np.atleast_1d(dp)[np.atleast_1d(bad)])

    raman = 2 * p.Gamma_21 * (p.Gamma_24 - 1j * (dp - p.Delta_c)) \
        / ((p.gamma_12 + p.gamma_32) * (p.Gamma_12 ** 2 + p.Delta_1 ** 2))

    two_photon_num = (p.Gamma_24 - 1j * (dp - p.Delta_c)) \
        * (p.Gamma_41 - 1j * (dp - p.Delta_1 - p.Delta_c)) \
        - abs(p.Omega_c) ** 2 / 4
    inner = (p.Gamma_13 - 1j * (dp - p.Delta_1)) \
        * (p.Gamma_41 - 1j * (dp - p.Delta_1 - p.Delta_c)) \
        + abs(p.Omega_c) ** 2 / 4

    bad = np.abs(inner) < POLE_THRESHOLD
    if np.any(bad):
        raise DegenerateDenominator(
            "two-photon denominator vanished", delta_p=np.atleast_1d(dp)[np.atleast_1d(bad)])

    D = (-1j / A) * (raman + two_photon_num / ((p.Gamma_21 + 1j * p.Delta_1) * inner))
    return complex(D) if scalar else D


def susceptibility(delta_p, params: AtomicParams):
    """Dimensionless probe susceptibility chi = beta * Omega_1^2 * D / 8.

    Linear in beta, quadratic in the pump Rabi frequency, independent of
    the probe strength (weak-probe limit).
    """
    scale = params.beta * params.Omega_1 ** 2 / 8
    if scale == 0.0:
        dp, scalar = _as_complex(delta_p)
        return 0j if scalar else np.zeros_like(dp, dtype=complex)
    return scale * coherence_factor(delta_p, params)


def refractive_index(chi_val, eps_b):
    """Complex refractive index n = sqrt(eps_b + chi), principal branch.

    The physical root has Re(n) > 0.  A purely real, nonpositive
    eps_b + chi has no such root and raises :class:`BranchAmbiguity`.
    """
    if eps_b <= 0:
        raise ValueError("eps_b > 0 violated")
    arg = np.asarray(chi_val, dtype=complex) + eps_b
    bad = (arg.real <= 0) & (arg.imag == 0)
    if np.any(bad):
        raise BranchAmbiguity("eps_b + chi on the nonpositive real axis")
    n = np.sqrt(arg)
    return complex(n) if np.ndim(chi_val) == 0 else n

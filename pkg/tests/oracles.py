"""Independent reference implementations used only by the tests.

These deliberately do not import from the package internals beyond the
parameter container: the high-precision susceptibility path is written
from scratch in 40-digit mpmath arithmetic, and the closed forms are
derived analytically.  They exist so the production code has something
external to agree with.
"""

import mpmath as mp

mp.mp.dps = 40

_I = mp.mpc(0, 1)


def _m(x):
    return mp.mpf(float(x))


def hp_denominator(delta_p, p):
    """Dressed denominator, 40-digit arithmetic."""
    dp = _m(delta_p)
    oc2 = _m(p.Omega_c) ** 2
    f1 = mp.mpc(_m(p.Gamma_23), -dp)
    f2 = mp.mpc(_m(p.Gamma_24), -(dp - _m(p.Delta_c)))
    return f1 * f2 + oc2 / 4


def hp_coherence(delta_p, p):
    """Raman coherence response factor, 40-digit arithmetic."""
    dp = _m(delta_p)
    d1 = _m(p.Delta_1)
    dc = _m(p.Delta_c)
    oc2_4 = _m(p.Omega_c) ** 2 / 4

    A = hp_denominator(delta_p, p)

    term1_num = 2 * _m(p.Gamma_21) * mp.mpc(_m(p.Gamma_24), -(dp - dc))
    term1_den = (_m(p.gamma_12) + _m(p.gamma_32)) * (_m(p.Gamma_12) ** 2 + d1 ** 2)
    term1 = term1_num / term1_den

    term2_num = (mp.mpc(_m(p.Gamma_24), -(dp - dc))
                 * mp.mpc(_m(p.Gamma_41), -(dp - d1 - dc)) - oc2_4)
    inner = (mp.mpc(_m(p.Gamma_13), -(dp - d1))
             * mp.mpc(_m(p.Gamma_41), -(dp - d1 - dc)) + oc2_4)
    term2 = term2_num / (mp.mpc(_m(p.Gamma_21), d1) * inner)

    return (-_I / A) * (term1 + term2)


def hp_susceptibility(delta_p, p):
    """chi = beta * Omega_1^2 / 8 * D, 40-digit arithmetic."""
    return _m(p.beta) * _m(p.Omega_1) ** 2 / 8 * hp_coherence(delta_p, p)


def coherence_control_off(delta_p, p):
    """Hand-simplified coherence factor for a switched-off control field.

    With Omega_c = 0 the dressed terms collapse: the far off-resonant
    factor cancels out of the two-photon term, leaving

        D0 = (-i / A0) * [ 2 G21 (G24 - i dp') / ((g12+g32)(G12^2+D1^2))
                           + (G24 - i dp') / ((G21 + i D1)(G13 - i(dp-D1))) ]

    with A0 = (G23 - i dp)(G24 - i dp') and dp' = dp - Delta_c.
    Plain complex arithmetic; independent of both the production code and
    the mpmath path.
    """
    dp = float(delta_p)
    dpp = dp - p.Delta_c
    A0 = (p.Gamma_23 - 1j * dp) * (p.Gamma_24 - 1j * dpp)
    term1 = (2 * p.Gamma_21 * (p.Gamma_24 - 1j * dpp)
             / ((p.gamma_12 + p.gamma_32) * (p.Gamma_12 ** 2 + p.Delta_1 ** 2)))
    term2 = ((p.Gamma_24 - 1j * dpp)
             / ((p.Gamma_21 + 1j * p.Delta_1) * (p.Gamma_13 - 1j * (dp - p.Delta_1))))
    return (-1j / A0) * (term1 + term2)


def fabry_perot_resonant_delay(n, d_over_c):
    """Transmission group delay of a lossless slab at exact resonance.

    Airy form: t = t01 t10 e^{i theta} / (1 - rho e^{2 i theta}) with
    rho = ((n-1)/(n+1))^2.  At theta = m pi the phase slope is
    d(phi)/d(theta) = (1+rho)/(1-rho) = (n^2+1)/(2n), and theta slews as
    d(theta)/d(omega) = n d / c, so

        tau_t = (n^2 + 1) / 2 * d / c.

    Reduces to d/c for n = 1.
    """
    return (n ** 2 + 1) / 2 * d_over_c


def parabola_vertex(t0, t1, t2, y0, y1, y2):
    """Vertex abscissa of the parabola through three equispaced points."""
    dt = t1 - t0
    assert abs((t2 - t1) - dt) < 1e-12 * abs(dt)
    return t1 + 0.5 * (y0 - y2) / (y0 - 2 * y1 + y2) * dt


def gaussian_energy_fraction(span):
    """Fraction of total spectral energy inside +-span/t0 of the carrier.

    The energy density is a Gaussian of standard width 1/(t0 sqrt(2)) in
    detuning, so the captured fraction is erf(span).
    """
    return float(mp.erf(_m(span)))

"""Unit tests of the Gaussian pulse synthesis and peak extraction."""

import numpy as np
import pytest

from ramanslab import (AtomicParams, EdgePeak, PulseConfig, SlabConfig,
                       WindowTooNarrow, baseband_envelope,
                       build_spectral_response, distortion_metric,
                       gaussian_spectrum, peak_time, rms_width, synthesize)
from ramanslab.pulse import N_FREQ

from oracles import gaussian_energy_fraction, parabola_vertex

GAMMA = 1e6
T0G = 20.0  # default t0 in 1/gamma units


def identity_coef(d):
    return np.ones_like(d, dtype=complex)


class TestGaussianSpectrum:
    def test_peak_value(self):
        cfg = PulseConfig()
        peak = gaussian_spectrum(cfg.omega0, cfg)
        assert peak == pytest.approx(cfg.a0 * cfg.t0 / (2 * np.sqrt(np.pi)), rel=1e-14)

    def test_width_scaling(self):
        cfg = PulseConfig()
        v = gaussian_spectrum(cfg.omega0 + 1 / cfg.t0, cfg)
        peak = gaussian_spectrum(cfg.omega0, cfg)
        assert v == pytest.approx(peak * np.exp(-0.5), rel=1e-13)

    def test_window_captures_spectral_energy(self):
        # captured fraction of integrated |spectrum|^2 is erf(span)
        cfg = PulseConfig()
        delta = np.linspace(-cfg.span / cfg.t0, cfg.span / cfg.t0, 20001)
        amp = gaussian_spectrum(cfg.omega0 + delta, cfg)
        captured = np.trapezoid(amp ** 2, delta)
        total = cfg.a0 ** 2 * cfg.t0 ** 2 / (4 * np.pi) * np.sqrt(np.pi) / cfg.t0
        assert captured / total > 1 - 1e-3
        assert captured / total == pytest.approx(gaussian_energy_fraction(cfg.span),
                                                 rel=1e-9)

    @pytest.mark.parametrize("bad", [
        {"t0": 0.0}, {"t0": -1e-6}, {"span": 3.0}, {"n_samples": 512},
    ])
    def test_config_validation(self, bad):
        with pytest.raises(ValueError):
            PulseConfig(**bad)


class TestBasebandEnvelope:
    def test_identity_coefficient_peaks_at_zero(self):
        cfg = PulseConfig(n_samples=2 ** 12)
        times, env = baseband_envelope(identity_coef, cfg, GAMMA)
        assert abs(peak_time(times, env)) < (times[1] - times[0])

    @pytest.mark.parametrize("tau", [0.5, -0.5, 2.0, -2.0, 1.0])
    def test_linear_phase_shifts_peak(self, tau):
        cfg = PulseConfig(n_samples=2 ** 12)
        times, env = baseband_envelope(lambda d: np.exp(1j * d * tau), cfg, GAMMA)
        assert abs(peak_time(times, env) - tau) < (times[1] - times[0])

    def test_matches_direct_trapezoid_sum(self):
        # independent brute-force evaluation of the same quadrature
        cfg = PulseConfig(n_samples=2 ** 10)
        coef = lambda d: np.exp(1j * d * 1.7) / (1 + 0.3j * d)
        times, env = baseband_envelope(coef, cfg, GAMMA)

        half = cfg.span / T0G
        delta = np.linspace(-half, half, N_FREQ)
        amp = gaussian_spectrum(cfg.omega0 + delta * GAMMA, cfg)
        w = np.full(N_FREQ, delta[1] - delta[0])
        w[0] = w[-1] = w[0] / 2
        g = w * amp * coef(delta)
        direct = np.exp(-1j * np.outer(times, delta)) @ g
        assert np.max(np.abs(env - direct)) < 1e-9 * np.max(np.abs(direct))

    def test_narrow_window_with_varying_coefficient_rejected(self, fig2_response):
        with pytest.raises(WindowTooNarrow):
            synthesize(fig2_response, PulseConfig(span=4.0))


class TestSynthesize:
    def test_traces_normalized_and_consistent(self, fig2_response):
        ts = synthesize(fig2_response, PulseConfig())
        for k in ("incident", "reflected", "transmitted"):
            assert ts.intensity[k].max() == 1.0
            assert ts.intensity[k].min() >= 0.0
            assert np.isfinite(ts.peak[k])
        assert abs(ts.peak["incident"]) < 1e-6
        assert ts.times_gamma[0] == -6 * T0G and ts.times_gamma[-1] == 6 * T0G
        assert np.allclose(ts.times_s * GAMMA, ts.times_gamma)

    def test_reference_scenario_peaks(self, fig2_response):
        # frozen converged values for the standard resonant scenario
        ts = synthesize(fig2_response, PulseConfig())
        assert ts.peak["reflected"] == pytest.approx(4.026079, abs=2e-3)
        assert ts.peak["transmitted"] == pytest.approx(1.049792, abs=2e-3)

    def test_doubling_time_samples_is_converged(self, fig7_response):
        a = synthesize(fig7_response, PulseConfig(n_samples=2 ** 14))
        b = synthesize(fig7_response, PulseConfig(n_samples=2 ** 15))
        for k in ("reflected", "transmitted"):
            assert abs(a.peak[k] - b.peak[k]) < 1e-3

    def test_grid_must_cover_spectral_window(self):
        atoms, slab = AtomicParams(), SlabConfig()
        resp = build_spectral_response(atoms, slab, np.linspace(49.7, 50.3, 601))
        with pytest.raises(ValueError):
            synthesize(resp, PulseConfig())


class TestPeakTime:
    def test_exact_parabola_vertex(self):
        times = np.linspace(-10, 10, 2001)
        t_star = 2 * (times[1] - times[0])  # two samples off center
        inten = np.clip(1 - 0.01 * (times - t_star) ** 2, 0, None)
        env = np.sqrt(inten)
        got = peak_time(times, env)
        i = int(np.argmax(inten))
        expected = parabola_vertex(times[i - 1], times[i], times[i + 1],
                                   inten[i - 1], inten[i], inten[i + 1])
        assert got == pytest.approx(expected, abs=1e-12)
        assert got == pytest.approx(t_star, abs=1e-9)

    def test_edge_peak_rejected(self):
        times = np.linspace(0, 10, 100)
        env = np.exp(-0.5 * times)  # maximum at the first sample
        with pytest.raises(EdgePeak):
            peak_time(times, env)

    def test_shifted_beyond_window_is_edge_peak(self):
        cfg = PulseConfig(n_samples=2 ** 12)
        times, env = baseband_envelope(lambda d: np.exp(1j * d * 130.0), cfg, GAMMA)
        with pytest.raises(EdgePeak):
            peak_time(times, env)


class TestDistortion:
    def test_identical_traces(self):
        times = np.linspace(-120, 120, 4001)
        env = np.exp(-times ** 2 / (2 * T0G ** 2))
        assert distortion_metric(times, env, env) == 0.0

    def test_pure_delay_preserves_width(self):
        cfg = PulseConfig(n_samples=2 ** 12)
        times, ref = baseband_envelope(identity_coef, cfg, GAMMA)
        _, delayed = baseband_envelope(lambda d: np.exp(1j * d * 2.0), cfg, GAMMA)
        assert distortion_metric(times, delayed, ref) < 1e-6

    def test_reference_scenario_is_narrowband(self, fig2_response):
        ts = synthesize(fig2_response, PulseConfig())
        for k in ("reflected", "transmitted"):
            m = distortion_metric(ts.times_gamma, ts.envelope[k],
                                  ts.envelope["incident"])
            assert m < 0.1

    def test_warns_on_heavy_reshaping(self):
        cfg = PulseConfig(n_samples=2 ** 12)
        times, ref = baseband_envelope(identity_coef, cfg, GAMMA)
        # spectral narrowing by a factor ~3 broadens the pulse well past 10%
        _, narrow = baseband_envelope(lambda d: np.exp(-(3 * T0G * d) ** 2 / 2),
                                      cfg, GAMMA)
        with pytest.warns(UserWarning):
            m = distortion_metric(times, narrow, ref)
        assert m > 0.1

    def test_rms_width_of_gaussian(self):
        times = np.linspace(-200, 200, 2 ** 14)
        env = np.exp(-times ** 2 / (2 * T0G ** 2))
        # intensity has standard deviation t0 / sqrt(2)
        assert rms_width(times, env) == pytest.approx(T0G / np.sqrt(2), rel=1e-6)

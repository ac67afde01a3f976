import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from metric_ripple import (PulseInput, TransferParams, accelerating_voltage_of, alpha_of,
                           de_broglie_wavelength, electron_wavelength,
                           gaussian_kernel_closed, gaussian_kernel_quadrature,
                           momentum_of, psi_out)

M_E_2018 = 9.1093837015e-31
HBAR = 1.054571817e-34


class TestAlpha:
    def test_electron_value(self):
        a = alpha_of(M_E_2018, 1e-18, hbar=HBAR)
        assert a.real == 0.0
        # mpmath: hbar * 1e-18 / (2 m_e)
        assert a.imag == pytest.approx(-5.788381802527149e-23, rel=1e-14)

    def test_linear_in_dt(self):
        assert alpha_of(M_E_2018, 2e-18) == 2 * alpha_of(M_E_2018, 1e-18)

    @pytest.mark.parametrize("m, dt", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
    def test_rejects(self, m, dt):
        with pytest.raises(ValueError):
            alpha_of(m, dt)

    def test_params_alpha(self):
        p = TransferParams()
        assert p.alpha.real == 0.0
        assert p.alpha.imag == -p.hbar * p.dt_interaction / (2 * p.m)


class TestClosedKernel:
    def test_real_gaussian(self):
        assert gaussian_kernel_closed(1.0, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert gaussian_kernel_closed(1.0, 2.0) == pytest.approx(0.6520493321732922, rel=1e-14)

    def test_fresnel_limit(self):
        s = 2.5
        got = gaussian_kernel_closed(-1j * s, 0.0)
        assert got == pytest.approx(math.sqrt(math.pi / s) * cmath.exp(1j * math.pi / 4),
                                    rel=1e-14)

    def test_paper_convention(self):
        a = 0.7 + 0.2j
        got = gaussian_kernel_closed(a, 0.3, "paper")
        ref = 1 / (2 * cmath.sqrt(math.pi * a)) * cmath.exp(-0.09 / (4 * a))
        assert got == pytest.approx(ref, rel=1e-14)

    @pytest.mark.parametrize("alpha", [0.0, -1.0, -0.1 + 1j])
    def test_rejects(self, alpha):
        with pytest.raises(ValueError):
            gaussian_kernel_closed(alpha, 0.0)

    def test_bad_convention(self):
        with pytest.raises(ValueError):
            gaussian_kernel_closed(1.0, 0.0, "mine")

    @settings(max_examples=200)
    @given(st.floats(0.1, 10), st.floats(-10, 10), st.floats(-5, 5), st.floats(-5, 5))
    def test_conventions_differ_by_u_independent_constant(self, re, im, u1, u2):
        a = complex(re, im)
        r1 = gaussian_kernel_closed(a, u1) / gaussian_kernel_closed(a, u1, "paper")
        r2 = gaussian_kernel_closed(a, u2) / gaussian_kernel_closed(a, u2, "paper")
        assert r1 == pytest.approx(r2, rel=1e-12)
        # sqrt(pi/a) * 2 sqrt(pi a) = 2 pi on the principal branch for Re(a) > 0
        assert r1 == pytest.approx(2 * math.pi, rel=1e-12)


class TestQuadrature:
    def test_real_cases(self):
        assert gaussian_kernel_quadrature(1.0, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-8)
        assert gaussian_kernel_quadrature(1.0, 2.0) == pytest.approx(0.6520493321732922, rel=1e-8)
        assert gaussian_kernel_quadrature(2.0, 0.0) == pytest.approx(1.2533141373155001, rel=1e-8)

    def test_random_against_closed(self, rng):
        worst = 0.0
        for _ in range(200):
            a = complex(rng.uniform(0.1, 10), rng.uniform(-10, 10))
            u = rng.uniform(-5, 5)
            c = gaussian_kernel_closed(a, u)
            worst = max(worst, abs(gaussian_kernel_quadrature(a, u) - c) / abs(c))
        assert worst <= 1e-6

    def test_fresnel_limit_monotone(self):
        target = gaussian_kernel_closed(-1j, 0.0)
        errs = [abs(gaussian_kernel_quadrature(-1j, 0.0, epsilon=e) - target)
                for e in (1e-2, 1e-3, 1e-4)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 1e-3

    def test_parameter_checks(self):
        with pytest.raises(ValueError):
            gaussian_kernel_quadrature(1.0, 0.0, epsilon=0.0)
        with pytest.raises(ValueError):
            gaussian_kernel_quadrature(1.0, 0.0, k_max=1.0)
        with pytest.raises(ValueError):
            gaussian_kernel_quadrature(1.0, 0.0, n=999)
        with pytest.raises(ValueError):
            gaussian_kernel_quadrature(-1.0, 0.0)


class TestPsiOut:
    pulse = PulseInput(v=1e6, k_prime=1e10, omega=1e15)
    params = TransferParams()

    def test_on_center(self):
        t = 3e-17
        got = psi_out(self.pulse.v * t, t, self.pulse, self.params)
        carrier = cmath.exp(1j * self.pulse.k_prime * self.pulse.v * t) \
            * cmath.exp(-1j * self.pulse.omega * t)
        pref = cmath.sqrt(math.pi / self.params.alpha)
        assert got == pytest.approx(pref * carrier, rel=1e-12)

    def test_linear_in_a(self):
        doubled = TransferParams(a=2.0)
        x = np.linspace(-1e-10, 1e-10, 11)
        assert np.allclose(psi_out(x, 0.0, self.pulse, doubled),
                           2 * psi_out(x, 0.0, self.pulse, self.params), rtol=1e-15)

    def test_fresnel_envelope_does_not_decay(self):
        x = np.linspace(-1e-9, 1e-9, 201)
        mod = np.abs(psi_out(x, 0.0, self.pulse, self.params))
        pref = abs(cmath.sqrt(math.pi / self.params.alpha))
        assert np.allclose(mod, pref, rtol=1e-9)

    def test_regularized_envelope_decays(self):
        eps = abs(self.params.alpha.imag)
        mod = np.abs(psi_out(np.array([0.0, 1e-10, 1e-9]), 0.0, self.pulse, self.params,
                             regularization=eps))
        assert mod[0] > mod[1] > mod[2]
        assert mod[2] < 1e-6 * mod[0]

    @settings(max_examples=100)
    @given(st.floats(-1e-10, 1e-10), st.floats(0, 1e-16), st.floats(-1e-16, 1e-16))
    def test_envelope_rides_at_v(self, x, t, shift):
        eps = abs(self.params.alpha.imag)
        a = abs(psi_out(x, t, self.pulse, self.params, regularization=eps))
        b = abs(psi_out(x + self.pulse.v * shift, t + shift, self.pulse, self.params,
                        regularization=eps))
        assert a == pytest.approx(b, rel=1e-6, abs=1e-300)

    def test_paper_convention_same_shape(self):
        x = np.linspace(-1e-10, 1e-10, 5)
        eps = abs(self.params.alpha.imag)
        s = psi_out(x, 0.0, self.pulse, self.params, "standard", eps)
        p = psi_out(x, 0.0, self.pulse, self.params, "paper", eps)
        ratio = s / p
        assert np.allclose(ratio, ratio[0], rtol=1e-12)


class TestDeBroglie:
    def test_momentum(self):
        assert momentum_of(5e-11) == pytest.approx(1.32521403e-23, rel=1e-12)

    @settings(max_examples=200)
    @given(st.floats(1e-15, 1e-3))
    def test_roundtrip(self, lam):
        assert de_broglie_wavelength(momentum_of(lam)) == pytest.approx(lam, rel=1e-15)

    def test_rejects(self):
        with pytest.raises(ValueError):
            momentum_of(0.0)
        with pytest.raises(ValueError):
            de_broglie_wavelength(-1.0)

    def test_50kv_electron(self):
        lam = electron_wavelength(5e4)
        assert lam == pytest.approx(5.36e-12, rel=2e-3)
        assert abs(lam - 5e-11) > 4e-11

    def test_voltage_for_table_wavelength(self):
        v_nr = accelerating_voltage_of(5e-11, relativistic=False)
        v_r = accelerating_voltage_of(5e-11)
        assert v_nr == pytest.approx(601.65, abs=0.05)
        assert v_r < v_nr
        assert (v_nr - v_r) / v_nr < 1e-3

    def test_voltage_inverse(self):
        assert accelerating_voltage_of(electron_wavelength(5e4)) == pytest.approx(5e4, rel=1e-12)
        assert accelerating_voltage_of(5.36e-12) == pytest.approx(5.0e4, rel=0.01)

    def test_voltage_long_wavelength_limit(self):
        assert accelerating_voltage_of(1.0) < 1e-15

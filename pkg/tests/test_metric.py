import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from metric_ripple import (GaussianPacket, Metric4, SymTensor3, evaluate_packet,
                           perturbed_metric)
from metric_ripple.constants import CODATA, PhysConst

K = 1.2566370614e11


def a12_packet(amp=1e-6, sigma=1e-5, omega=0.0, z_center=0.0):
    return GaussianPacket(SymTensor3.from_components(a12=amp), K, omega, z_center, sigma)


class TestSymTensor3:
    def test_rejects_asymmetric(self):
        m = np.zeros((3, 3))
        m[0, 1] = 1.0
        with pytest.raises(ValueError):
            SymTensor3(m)

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            SymTensor3(np.zeros((2, 2)))

    def test_from_components_fills_both_triangles(self):
        t = SymTensor3.from_components(a12=2.0, a33=-1.0)
        assert t[0, 1] == t[1, 0] == 2.0
        assert t[2, 2] == -1.0

    def test_immutable(self):
        t = SymTensor3.zeros()
        with pytest.raises(ValueError):
            t.entries[0, 0] = 1.0

    def test_arithmetic(self):
        a = SymTensor3.from_components(a11=1.0, a12=2.0)
        assert a + (-a) == SymTensor3.zeros()
        assert 2 * a == a + a


class TestMetric4:
    def test_minkowski(self):
        eta = Metric4.minkowski()
        assert np.array_equal(eta.entries, np.diag([-1.0, 1.0, 1.0, 1.0]))


class TestPhysConst:
    def test_h_hbar_consistent(self):
        assert abs(CODATA.h - 2 * math.pi * CODATA.hbar) <= 1e-12 * CODATA.h

    def test_rejects_inconsistent(self):
        with pytest.raises(ValueError):
            PhysConst(h=1.0)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            PhysConst(c=0.0)


class TestGaussianPacket:
    @pytest.mark.parametrize("kw", [dict(k_prime=0.0), dict(sigma=-1.0), dict(omega=-1.0)])
    def test_invariants(self, kw):
        args = dict(amplitude=SymTensor3.from_components(a12=1e-6), k_prime=K,
                    omega=0.0, z_center=0.0, sigma=1e-5)
        args.update(kw)
        with pytest.raises(ValueError):
            GaussianPacket(**args)

    def test_complex_amplitude_rejected(self):
        with pytest.raises(ValueError):
            GaussianPacket(SymTensor3.from_components(a12=1j), K)

    def test_half_width(self):
        p = a12_packet()
        assert p.envelope_half_width == pytest.approx(2 * math.sqrt(1e-5 / K))
        # the envelope is 1/e at the half-width
        assert p.envelope(p.envelope_half_width) == pytest.approx(math.exp(-1), rel=1e-12)


class TestEvaluatePacket:
    def test_center_value(self):
        psi = evaluate_packet(a12_packet(), 0.0, 0.0)
        assert psi[0, 1] == 1e-6 + 0j
        assert psi[0, 0] == 0

    def test_decays_far_away(self):
        psi = evaluate_packet(a12_packet(), 1.0, 0.0)
        assert psi.max_abs() == 0.0

    def test_envelope_value(self):
        # independent scalar: 1e-6 * exp(-K * 1e-16 / 4e-5), evaluated with mpmath
        psi = evaluate_packet(a12_packet(), 1e-8, 0.0)
        assert abs(psi[0, 1]) == pytest.approx(7.304026910552041e-07, rel=1e-12)

    def test_symmetric_output(self):
        p = GaussianPacket(SymTensor3.from_components(a11=1e-6, a22=-1e-6, a12=3e-7), K,
                           1e3, 2e-9, 1e-5)
        psi = evaluate_packet(p, 3e-9, 1e-4)
        assert np.array_equal(psi.entries, psi.entries.T)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-1e-7, 1e-7), st.floats(-1e-7, 1e-7))
    def test_maximal_at_center(self, z, zc):
        p = a12_packet(z_center=zc)
        assert abs(evaluate_packet(p, z, 0.3)[0, 1]) <= abs(evaluate_packet(p, zc, 0.3)[0, 1])

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-1e3, 1e3).filter(lambda s: s == 0 or abs(s) > 1e-100),
           st.floats(-1e-8, 1e-8))
    def test_linear_in_amplitude(self, s, z):
        p = a12_packet(omega=5.0)
        scaled = p.with_amplitude(p.amplitude * s)
        lhs = evaluate_packet(scaled, z, 0.7).entries
        rhs = s * evaluate_packet(p, z, 0.7).entries
        assert np.allclose(lhs, rhs, rtol=1e-14, atol=0)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(0.1, 1e3), st.floats(0.0, 10.0))
    def test_time_periodic(self, omega, t):
        p = a12_packet(omega=omega)
        T = 2 * math.pi / omega
        a = evaluate_packet(p, 0.0, t).entries
        b = evaluate_packet(p, 0.0, t + T).entries
        # rounding of omega*(t + T) is ~eps * omega * (t + T) radians
        tol = 1e-12 + 4 * np.finfo(float).eps * omega * (t + T)
        assert np.max(np.abs(a - b)) <= tol * np.max(np.abs(a))


class TestPerturbedMetric:
    def test_identity(self):
        eta = Metric4.minkowski()
        assert perturbed_metric(eta, SymTensor3.zeros()) == eta

    def test_single_entry(self):
        g = perturbed_metric(Metric4.minkowski(), SymTensor3.from_components(a11=1e-6))
        expected = np.diag([-1.0, 1.0 + 1e-6, 1.0, 1.0])
        assert np.array_equal(g.entries, expected)

    def test_time_row_untouched(self):
        psi = SymTensor3.from_components(a12=0.1 + 0.2j, a33=0.3)
        g = perturbed_metric(Metric4.minkowski(), psi)
        assert np.array_equal(g.entries[0], [-1.0, 0, 0, 0])
        assert g[1, 2] == 0.1

    def test_rejects_large(self):
        with pytest.raises(ValueError):
            perturbed_metric(Metric4.minkowski(), SymTensor3.from_components(a11=1.5))

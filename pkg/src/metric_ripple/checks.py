"""Built-in oracle checks, run by ``metric-ripple check``.

Each check returns a ``CheckResult``; none raise on failure.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import fringe, gauge, geodesic, interference, pulse
from .constants import C_LIGHT
from .metric import GaussianPacket, SymTensor3


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    limit: float
    passed: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.value:.6e} (limit {self.limit:.3e})"
        return f"{text} {self.detail}".rstrip()


def table1_regression(fmap=None):
    fmap = fmap or fringe.table1_map()
    printed = np.array(fringe.TABLE1_COLUMN1)
    got = np.array(fringe.iterate(fmap, fringe.TABLE1_SEED, len(printed) - 1).iterates)
    dev = float(np.max(np.abs(got - printed)))
    return CheckResult("table1 column 1 max |iterate - printed| [m]", dev, 5e-9, dev <= 5e-9)


def fixed_point_vs_bisection(fmap=None, tol=1e-13):
    fmap = fmap or fringe.table1_map()
    trace = fringe.solve_fixed_point(fmap, fringe.TABLE1_SEED, tol=tol)
    ref = fringe.fixed_point_bisection(fmap, tol=1e-16)
    if not trace.converged:
        return CheckResult("fixed point iteration vs bisection [m]", math.inf, 1e-12, False,
                           "iteration did not converge")
    diff = abs(trace.fixed_point - ref)
    ok = diff <= 1e-12 and abs(trace.fixed_point - 4.3008e-6) <= 5e-9
    return CheckResult("fixed point iteration vs bisection [m]", diff, 1e-12, ok,
                       f"x* = {trace.fixed_point:.6e} m")


def fringe_width_range(fmap=None):
    fmap = fmap or fringe.table1_map()
    w = fringe.fringe_width(fmap)
    return CheckResult("fringe width 2x* [m] in [7e-6, 9e-6]", w, 9e-6, 7e-6 <= w <= 9e-6)


def transient_width(fmap=None):
    fmap = fmap or fringe.table1_map()
    w = fringe.transient_fringe_width(fmap)
    dev = abs(w - 8.06e-6)
    return CheckResult("transient width 2*row6 vs 8.06e-6 [m]", dev, 1e-8, dev <= 1e-8,
                       f"width = {w:.6e} m")


def literal_d_fixed_point():
    fmap = fringe.table1_map(literal_d=True)
    trace = fringe.solve_fixed_point(fmap, fringe.TABLE1_SEED)
    x = trace.fixed_point if trace.converged else math.nan
    return CheckResult("literal d=0.5e-11 fixed point [m] >= 5.9e-6", x, 5.9e-6,
                       trace.converged and x >= 5.9e-6)


def gaussian_oracle(samples=200, seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        alpha = complex(rng.uniform(0.1, 10.0), rng.uniform(-10.0, 10.0))
        u = rng.uniform(-5.0, 5.0)
        closed = pulse.gaussian_kernel_closed(alpha, u)
        quad = pulse.gaussian_kernel_quadrature(alpha, u)
        worst = max(worst, abs(closed - quad) / abs(closed))
    return CheckResult("gaussian kernel closed vs quadrature (rel)", worst, 1e-6, worst <= 1e-6)


def superposition_identity(samples=1000, seed=0):
    setup = interference.TwoSlitSetup.table1(sigma=math.inf)
    p = setup.packet
    rng = np.random.default_rng(seed)
    scale = 2.0 * p.amplitude.max_abs()
    worst = 0.0
    for _ in range(samples):
        z = p.z_center + rng.uniform(-1e-10, 1e-10)
        t = rng.uniform(0.0, 2 * p.period)
        x = rng.uniform(-5e-5, 5e-5)
        dz = interference.path_difference(x, setup)
        direct = interference.superpose([interference.slit_wave(setup, "A", z, t),
                                         interference.slit_wave(setup, "B", z, t, dz)])
        merged = interference.pattern_closed_form(setup, z, t, x)
        worst = max(worst, float(np.max(np.abs(direct.entries - merged.entries))) / scale)
    return CheckResult("superposition identity (rel)", worst, 1e-14, worst <= 1e-14)


def geodesic_scaling(amplitudes=(1e-7, 1e-6, 1e-5), steps=1000):
    lam = interference.TABLE1_WAVELENGTH
    k = 2 * math.pi / lam
    x0 = np.array([0.0, 6e-6, 0.0])
    errs = []
    for amp in amplitudes:
        p = GaussianPacket(SymTensor3.from_components(a12=amp), k, C_LIGHT * k, 0.0,
                           interference.DEFAULT_SIGMA)
        err = geodesic.deviation_report(p, x0, np.zeros(3), p.period, p.period / steps)
        errs.append(err / np.linalg.norm(x0))
    slope = float(np.polyfit(np.log(amplitudes), np.log(errs), 1)[0])
    at_1e6 = errs[list(amplitudes).index(1e-6)] if 1e-6 in amplitudes else math.nan
    ok = 1.8 <= slope <= 2.2 and at_1e6 <= 1e-10
    return CheckResult("geodesic closed form vs RK4, log-log slope", slope, 2.2, ok,
                       f"rel err at |A|=1e-6: {at_1e6:.3e} (limit 1e-10)")


def gauge_suite(samples=1000, seed=0):
    rng = np.random.default_rng(seed)
    worst_tt = 0.0
    worst_idem = 0.0
    for _ in range(samples):
        m = rng.uniform(-1.0, 1.0, (3, 3))
        A = SymTensor3(np.triu(m) + np.triu(m, 1).T)
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        P = gauge.tt_project(A, n)
        rep = gauge.check_tt(P, n)
        worst_tt = max(worst_tt, rep.transversality_k, rep.trace)
        PP = gauge.tt_project(P, n)
        worst_idem = max(worst_idem, float(np.max(np.abs(PP.entries - P.entries))))
    ok = worst_tt <= 1e-12 and worst_idem <= 1e-14
    return CheckResult("TT projector residual", worst_tt, 1e-12, ok,
                       f"idempotence {worst_idem:.3e} (limit 1e-14)")


def de_broglie_report():
    lam50 = pulse.electron_wavelength(5e4, relativistic=True)
    v_used = pulse.accelerating_voltage_of(interference.TABLE1_WAVELENGTH, relativistic=True)
    ok = abs(lam50 - 5.36e-12) <= 0.01e-12 and abs(v_used - 602.0) <= 1.0
    detail = (f"50 kV electron: lambda = {lam50:.4e} m; used lambda = 5e-11 m "
              f"needs {v_used:.1f} V (inconsistent with 50 kV)")
    return CheckResult("lambda(50 kV electron) [m]", lam50, 5.36e-12, ok, detail)


ALL_CHECKS = (
    table1_regression, fixed_point_vs_bisection, fringe_width_range, transient_width,
    literal_d_fixed_point, gaussian_oracle, superposition_identity, geodesic_scaling,
    gauge_suite, de_broglie_report,
)


def run_all():
    return [check() for check in ALL_CHECKS]

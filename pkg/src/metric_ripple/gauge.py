"""Transverse-traceless gauge checks, TT projection and R_j0k0 curvature.

All perturbations handled here are purely spatial and the observer sits in
its proper frame (u = (1, 0, 0, 0)), so A_mu_alpha u^alpha vanishes
identically and the gauge conditions reduce to A.n = 0 and tr A = 0.
"""
from dataclasses import dataclass

import numpy as np

from .metric import SymTensor3, evaluate_packet

Z_HAT = (0.0, 0.0, 1.0)


class GaugeError(ValueError):
    """Raised when an amplitude tensor is not in TT gauge."""


@dataclass(frozen=True)
class FourVector:
    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.as_array())):
            raise ValueError("four-vector components must be finite")

    def as_array(self):
        return np.array([self.t, self.x, self.y, self.z], dtype=float)

    @property
    def spatial(self):
        return np.array([self.x, self.y, self.z], dtype=float)


# Proper-frame observer: contravariant u = (1, 0, 0, 0), i.e. u_0 = -1.
PROPER_OBSERVER = FourVector(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class GaugeReport:
    transversality_u: float
    transversality_k: float
    trace: float
    tol: float

    @property
    def passed(self):
        return max(self.transversality_u, self.transversality_k, self.trace) <= self.tol

    def __str__(self):
        status = "passed" if self.passed else "FAILED"
        return (f"TT gauge {status}: |A.u|={self.transversality_u:.3e} "
                f"|A.n|={self.transversality_k:.3e} |tr A|={self.trace:.3e} "
                f"(tol {self.tol:.1e})")


def _unit(propagation):
    n = np.asarray(propagation, dtype=float).reshape(3)
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise ValueError("propagation vector must have unit norm")
    return n


def check_tt(A, propagation=Z_HAT, tol=1e-12):
    """Residuals of the TT conditions for amplitude ``A`` along ``propagation``."""
    n = _unit(propagation)
    a = A.entries
    # Spatial A has no time row, so contraction with the proper-frame u is 0.
    u = PROPER_OBSERVER.as_array()
    a4 = np.zeros((4, 4), dtype=complex)
    a4[1:, 1:] = a
    return GaugeReport(
        transversality_u=float(np.max(np.abs(a4 @ u))),
        transversality_k=float(np.max(np.abs(a @ n))),
        trace=float(abs(np.trace(a))),
        tol=tol,
    )


def require_tt(A, propagation=Z_HAT, tol=1e-12):
    report = check_tt(A, propagation, tol)
    if not report.passed:
        raise GaugeError(str(report))
    return report


def tt_project(A, propagation=Z_HAT):
    """Standard TT projection: P A P - 1/2 P tr(P A), with P = I - n n^T."""
    n = _unit(propagation)
    P = np.eye(3) - np.outer(n, n)
    a = A.entries
    out = P @ a @ P - 0.5 * P * np.trace(P @ a)
    # enforce exact symmetry lost to rounding in the triple product
    out = 0.5 * (out + out.T)
    return SymTensor3(out)


def curvature_j0k0(p, z, t):
    """R^TT_j0k0 = -1/2 d^2 psi/dt^2 = 1/2 omega^2 psi for the packet carrier."""
    return evaluate_packet(p, z, t) * (0.5 * p.omega**2)

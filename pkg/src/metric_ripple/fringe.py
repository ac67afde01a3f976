"""The cosine fringe map x_{n+1} = a2 * cos(c * x_n) and its fixed point.

``a2`` is the displacement scale A_12**2 [m] and ``c = k' d / D`` [1/m].
"""
from dataclasses import dataclass, field
import math

import numpy as np
from scipy import optimize

from .interference import (TABLE1_A12_SQUARED, TABLE1_D_SLITS, TABLE1_SCREEN,
                           TABLE1_WAVELENGTH)

# Slit separation as literally printed above Table I (inconsistent with the
# 0.5 um quoted in the text and with the table's own iterates).
TABLE1_LITERAL_D = 0.5e-11
# pi as rounded in the arithmetic that produced Table I; every printed iterate
# is reproduced to 3 s.f. with it, and not with full-precision pi.
TABLE1_PI = 3.14
# First entry of the table's first column, used as the seed.
TABLE1_SEED = 5.41e-6
TABLE1_COLUMN1 = (5.41e-6, 3.39e-6, 4.92e-6, 3.81e-6, 4.65e-6, 4.03e-6, 4.50e-6,
                  4.15e-6, 4.41e-6, 4.21e-6, 4.36e-6, 4.25e-6, 4.34e-6, 4.27e-6,
                  4.32e-6)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10000


@dataclass(frozen=True)
class FringeMap:
    a2: float
    c: float

    def __post_init__(self):
        # a2 = 0 and c = 0 are allowed as degenerate (constant) maps
        if not (self.a2 >= 0 and math.isfinite(self.a2)):
            raise ValueError("a2 must be finite and >= 0")
        if not (self.c >= 0 and math.isfinite(self.c)):
            raise ValueError("c must be finite and >= 0")

    def __call__(self, x):
        return self.a2 * np.cos(self.c * x)

    def derivative(self, x):
        return -self.a2 * self.c * np.sin(self.c * x)

    @classmethod
    def from_geometry(cls, a2, lam, d, D, pi_value=math.pi):
        return cls(a2, (2 * pi_value / lam) * (d / D))


@dataclass(frozen=True)
class IterationTrace:
    iterates: tuple
    converged: bool = False
    fixed_point: float | None = None
    residual: float = math.nan
    slope: float = math.nan
    tol: float = math.nan
    notes: tuple = field(default_factory=tuple)

    @property
    def attracting(self):
        return abs(self.slope) < 1

    def __len__(self):
        return len(self.iterates)


def table1_map(literal_d=False, pi_value=TABLE1_PI):
    """Map with the Table I parameters (A_12**2 = 6e-6, lam = 5e-11 m, D = 0.35 m).

    d = 0.5e-6 m unless ``literal_d`` selects the printed 0.5e-11 m. The
    default ``pi_value`` is the rounded 3.14 that reproduces the table; pass
    ``math.pi`` for the exact-geometry map (c = 1.79520e5 1/m).
    """
    d = TABLE1_LITERAL_D if literal_d else TABLE1_D_SLITS
    return FringeMap.from_geometry(TABLE1_A12_SQUARED, TABLE1_WAVELENGTH, d,
                                   TABLE1_SCREEN, pi_value)


def iterate(fmap, x0, n):
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = [float(x0)]
    for _ in range(n):
        xs.append(float(fmap(xs[-1])))
    return IterationTrace(tuple(xs))


def solve_fixed_point(fmap, x0, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Plain fixed-point iteration until |x_{n+1} - x_n| <= tol.

    Non-convergence is reported through ``converged=False``; a repelling
    candidate (|f'| >= 1) is noted in ``notes``.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0")
    xs = [float(x0)]
    converged = False
    for _ in range(max_iter):
        xs.append(float(fmap(xs[-1])))
        if abs(xs[-1] - xs[-2]) <= tol:
            converged = True
            break
    x = xs[-1]
    slope = float(fmap.derivative(x))
    notes = ()
    if abs(slope) >= 1:
        notes = (f"|f'(x)| = {abs(slope):.3g} >= 1: not an attracting fixed point",)
    return IterationTrace(tuple(xs), converged, x if converged else None,
                          float(abs(x - fmap(x))), slope, tol, notes)


def fixed_point_bisection(fmap, tol=DEFAULT_TOL):
    """Independent root of g(x) = x - a2 cos(c x) on [0, a2] by bisection."""
    if fmap.a2 == 0:
        return 0.0
    return float(optimize.bisect(lambda x: x - fmap(x), 0.0, fmap.a2,
                                 xtol=tol, rtol=4 * np.finfo(float).eps,
                                 maxiter=10000))


def cobweb_data(fmap, x0, n):
    """Cobweb vertices (x0, 0), (x0, f(x0)), (f(x0), f(x0)), ... as an (2n+1, 2) array."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = [(float(x0), 0.0)]
    x = float(x0)
    for _ in range(n):
        y = float(fmap(x))
        pts.append((x, y))
        pts.append((y, y))
        x = y
    return np.array(pts)


def fringe_width(fmap, x0=0.0, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Two-sided displacement envelope 2 x* at the attracting fixed point."""
    trace = solve_fixed_point(fmap, x0, tol, max_iter)
    if not trace.converged or not trace.attracting:
        raise ValueError("no attracting fixed point found for this map")
    return 2.0 * trace.fixed_point


def transient_fringe_width(fmap, x0=TABLE1_SEED, row=6):
    """Twice the ``row``-th entry (1-based, seed = row 1) of the iteration column.

    This is the convention behind the quoted ~8 um fringe width, which doubles
    the 6th entry of the first Table I column.
    """
    if row < 1:
        raise ValueError("row must be >= 1")
    trace = iterate(fmap, x0, max(row - 1, 1))
    return 2.0 * trace.iterates[row - 1]

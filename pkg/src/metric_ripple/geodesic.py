"""Particle trajectories in a perturbation field.

Two routes are provided. ``closed_form_position`` is the first-order
solution x(t) = (I + Re(psi)/2) x0 + v0 t. ``integrate_deviation`` integrates
the proper-frame deviation equation

    d^2 x_j / dt^2 = 1/2 Re(d^2 psi_jk / dt^2) x_k = -1/2 omega^2 Re(psi_jk) x_k

with classical RK4, and serves as the oracle for the closed form.

``sampling`` selects where psi is read: ``"initial"`` freezes it at the
particle's starting z, ``"comoving"`` follows the unperturbed z0 + v_z t.
"""
from dataclasses import dataclass
import math

import numpy as np

from .gauge import Z_HAT, require_tt
from .metric import packet_scalar

SAMPLING_MODES = ("initial", "comoving")


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


def _vec3(v, name):
    arr = np.asarray(v, dtype=float).reshape(3)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


@dataclass(frozen=True)
class ParticleState:
    position: np.ndarray
    velocity: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "position", _frozen(_vec3(self.position, "position")))
        object.__setattr__(self, "velocity", _frozen(_vec3(self.velocity, "velocity")))
        if not math.isfinite(self.t):
            raise ValueError("t must be finite")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Uniformly sampled states; row i of ``positions`` is the state at ``t[i]``."""

    t: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    dt: float

    def __post_init__(self):
        for name in ("t", "positions", "velocities"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        if len(self.t) > 1:
            steps = np.diff(self.t)
            if np.any(steps <= 0):
                raise ValueError("trajectory times must be strictly increasing")
            if np.max(np.abs(steps - self.dt)) > 1e-12 * max(abs(self.dt), 1.0) + 1e-9 * abs(self.dt):
                raise ValueError("trajectory step is not uniform")

    def __len__(self):
        return len(self.t)

    def state(self, i):
        return ParticleState(self.positions[i], self.velocities[i], float(self.t[i]))

    def __iter__(self):
        return (self.state(i) for i in range(len(self)))


def _sample_z(z0, vz, t, sampling):
    if sampling == "initial":
        return np.full_like(np.asarray(t, dtype=float), z0)
    if sampling == "comoving":
        return z0 + vz * np.asarray(t, dtype=float)
    raise ValueError(f"sampling must be one of {SAMPLING_MODES}, got {sampling!r}")


def closed_form_position(p, x0, v0, t, sampling="initial", propagation=Z_HAT):
    """First-order geodesic-deviation solution.

    Returns ``x0 + 0.5 * Re(psi(t)) @ x0 + v0 * t``. Raises ``GaugeError``
    unless the packet amplitude is TT for ``propagation`` at tolerance 1e-12.
    """
    require_tt(p.amplitude, propagation, 1e-12)
    x0 = _vec3(x0, "x0")
    v0 = _vec3(v0, "v0")
    z = _sample_z(x0[2], v0[2], t, sampling)
    h = p.amplitude.real * packet_scalar(p, z, t).real
    return x0 + 0.5 * h @ x0 + v0 * t


def closed_form_velocity(p, x0, v0, t, sampling="initial", propagation=Z_HAT):
    """Time derivative of ``closed_form_position``."""
    require_tt(p.amplitude, propagation, 1e-12)
    x0 = _vec3(x0, "x0")
    v0 = _vec3(v0, "v0")
    z = _sample_z(x0[2], v0[2], t, sampling)
    s = packet_scalar(p, z, t)
    ds = -1j * p.omega * s
    if sampling == "comoving":
        dz = z - p.z_center
        ds = ds + v0[2] * s * (-p.k_prime * dz / (2.0 * p.sigma) + 1j * p.k_prime)
    return 0.5 * (p.amplitude.real * float(np.real(ds))) @ x0 + v0


def deviation_rhs(p, x0, v0, sampling="initial"):
    """Right-hand side f(t, y) of the deviation equation.

    The state is y = (xi, dxi/dt), the offset from the free reference motion
    x0 + v0 t. Integrating the offset instead of x keeps O(|A|^2) effects
    far above the rounding floor of |x0|.
    """
    if sampling not in SAMPLING_MODES:
        raise ValueError(f"sampling must be one of {SAMPLING_MODES}, got {sampling!r}")
    a = p.amplitude.real
    w2 = p.omega**2
    x0 = _vec3(x0, "x0")
    v0 = _vec3(v0, "v0")

    def rhs(t, y):
        z = x0[2] if sampling == "initial" else x0[2] + v0[2] * t
        h = float(packet_scalar(p, z, t).real)
        x = x0 + v0 * t + y[:3]
        acc = -0.5 * w2 * h * (a @ x)
        return np.concatenate((y[3:], acc))

    return rhs


def rk4_step(f, t, y, h):
    """One classical 4th-order Runge-Kutta step (h may be negative)."""
    k1 = f(t, y)
    k2 = f(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = f(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = f(t + h, y + h * k3)
    return y + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0


def _n_steps(t_end, dt):
    if not dt > 0:
        raise ValueError("dt must be > 0")
    if not t_end >= 0:
        raise ValueError("t_end must be >= 0")
    n = round(t_end / dt)
    # relative check: physical times here span ~1e-19 s to seconds
    if abs(n * dt - t_end) > 1e-9 * max(dt, t_end):
        raise ValueError("dt must divide t_end")
    return int(n)


def _integrate_offset(p, x0, v0, xi0, dxi0, n, dt, sampling):
    f = deviation_rhs(p, x0, v0, sampling)
    y = np.concatenate((xi0, dxi0))
    ys = np.empty((n + 1, 6))
    ys[0] = y
    for i in range(n):
        y = rk4_step(f, i * dt, y, dt)
        ys[i + 1] = y
    return np.arange(n + 1) * dt, ys


def integrate_deviation(p, x0, v0, t_end, dt, sampling="initial"):
    """Integrate the deviation equation with RK4 from state (x0, v0) at t = 0.

    Returns a ``Trajectory`` with ``round(t_end/dt) + 1`` samples.
    """
    n = _n_steps(t_end, dt)
    x0 = _vec3(x0, "x0")
    v0 = _vec3(v0, "v0")
    zero = np.zeros(3)
    ts, ys = _integrate_offset(p, x0, v0, zero, zero, n, dt, sampling)
    pos = x0 + ts[:, None] * v0 + ys[:, :3]
    vel = v0 + ys[:, 3:]
    return Trajectory(ts, pos, vel, dt)


def deviation_report(p, x0, v0, t_end, dt, sampling="initial"):
    """max |closed form - integrated| over the samples of one run.

    The integrator starts on the closed form's own t = 0 state, so the two
    routes differ only by the second-order terms the closed form drops.
    Both are compared as offsets from x0 + v0 t.
    """
    n = _n_steps(t_end, dt)
    x0 = _vec3(x0, "x0")
    v0 = _vec3(v0, "v0")
    require_tt(p.amplitude, Z_HAT, 1e-12)
    a = p.amplitude.real
    ax0 = a @ x0
    s0 = complex(packet_scalar(p, x0[2], 0.0))
    xi0 = 0.5 * s0.real * ax0
    dxi0 = closed_form_velocity(p, x0, v0, 0.0, sampling) - v0
    ts, ys = _integrate_offset(p, x0, v0, xi0, dxi0, n, dt, sampling)
    z = _sample_z(x0[2], v0[2], ts, sampling)
    closed = 0.5 * packet_scalar(p, z, ts).real[:, None] * ax0[None, :]
    return float(np.max(np.abs(closed - ys[:, :3])))

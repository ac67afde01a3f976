"""Moving delta-pulse through a free-particle transfer function.

The output envelope is the Gaussian integral

    I(alpha, u) = integral exp(-alpha k^2) exp(i k u) dk

with complex ``alpha = hbar * dt / (2 m i)``. The closed form is checked
against direct quadrature, and the de Broglie helpers convert between
wavelength, momentum and electron accelerating voltage.
"""
from dataclasses import dataclass
import math

import numpy as np

from .constants import CODATA

CONVENTIONS = ("standard", "paper")
DEFAULT_DT_INTERACTION = 1e-18


def alpha_of(m, dt, hbar=CODATA.hbar):
    """alpha = hbar dt / (2 m i) = -i hbar dt / (2 m)."""
    if not m > 0:
        raise ValueError("mass must be > 0")
    if not dt > 0:
        raise ValueError("interaction time must be > 0")
    return complex(0.0, -hbar * dt / (2.0 * m))


@dataclass(frozen=True)
class TransferParams:
    a: float = 1.0
    m: float = CODATA.electron_mass
    dt_interaction: float = DEFAULT_DT_INTERACTION
    hbar: float = CODATA.hbar

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError("m must be > 0")
        if not self.dt_interaction > 0:
            raise ValueError("dt_interaction must be > 0")

    @property
    def alpha(self):
        return alpha_of(self.m, self.dt_interaction, self.hbar)


@dataclass(frozen=True)
class PulseInput:
    v: float
    k_prime: float
    omega: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(q) for q in (self.v, self.k_prime, self.omega)):
            raise ValueError("pulse parameters must be finite")
        if not self.k_prime > 0:
            raise ValueError("k_prime must be > 0")

    @classmethod
    def free_electron(cls, lam, m=CODATA.electron_mass, hbar=CODATA.hbar):
        """Electron with de Broglie wavelength ``lam`` and omega = hbar k^2 / 2m."""
        k = 2 * math.pi / lam
        return cls(v=hbar * k / m, k_prime=k, omega=hbar * k * k / (2 * m))


def _check_alpha(alpha):
    alpha = complex(alpha)
    if alpha == 0:
        raise ValueError("alpha must be non-zero")
    if alpha.real < 0:
        raise ValueError("Re(alpha) < 0: the Gaussian integral diverges")
    return alpha


def kernel_prefactor(alpha, convention="standard"):
    """sqrt(pi/alpha) (standard) or 1/(2 sqrt(pi alpha)) (paper); principal roots."""
    alpha = _check_alpha(alpha)
    if convention == "standard":
        return np.sqrt(math.pi / alpha)
    if convention == "paper":
        return 1.0 / (2.0 * np.sqrt(math.pi * alpha))
    raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def gaussian_kernel_closed(alpha, u, convention="standard"):
    """Closed form of the Gaussian integral; vectorized in ``u``.

    Pure-imaginary ``alpha`` is the Fresnel limit Re(alpha) -> 0+.
    """
    pref = kernel_prefactor(alpha, convention)
    u = np.asarray(u, dtype=float)
    out = pref * np.exp(-u * u / (4.0 * complex(alpha)))
    return complex(out) if out.ndim == 0 else out


def gaussian_kernel_quadrature(alpha, u, epsilon=1e-15, k_max=None, n=None):
    """Trapezoid-rule value of integral exp(-(alpha + epsilon) k^2 + i k u) dk.

    The integral is truncated to [-k_max, k_max]; ``k_max`` must make the
    integrand fall below 1e-12 at the ends. Defaults pick ``k_max`` from the
    Gaussian decay and ``n`` from the aliasing error of the trapezoid rule.
    """
    alpha = complex(alpha)
    if not epsilon > 0:
        raise ValueError("epsilon must be > 0")
    beta = alpha + epsilon
    if beta.real <= 0:
        raise ValueError("Re(alpha) + epsilon must be > 0")
    decay_needed = math.log(1e12)
    if k_max is None:
        k_max = math.sqrt(1.05 * decay_needed / beta.real)
    if beta.real * k_max**2 <= decay_needed:
        raise ValueError("k_max too small: integrand not below 1e-12 at the ends")
    if n is None:
        # trapezoid aliasing error ~ exp(-(pi/h)^2 Re(1/beta)); push it below 1e-16
        h = math.pi * math.sqrt((1.0 / beta).real / 37.0)
        n = max(1001, int(math.ceil(2 * k_max / h)) + 1)
    if n < 1000:
        raise ValueError("n must be >= 1000")
    k = np.linspace(-k_max, k_max, n)
    f = np.exp(-beta * k * k + 1j * k * u)
    return complex(np.trapezoid(f, k))


def psi_out(x, t, pulse, params, convention="standard", regularization=0.0):
    """Output wave a * prefactor * exp(-(x - v t)^2 / 4 alpha) * exp(i k' x - i w t).

    ``regularization`` adds a real part to alpha (Re(alpha) > 0 gives a
    decaying Gaussian instead of the unit-modulus Fresnel envelope).
    """
    if regularization < 0:
        raise ValueError("regularization must be >= 0")
    alpha = params.alpha + regularization
    x = np.asarray(x, dtype=float)
    u = x - pulse.v * t
    env = gaussian_kernel_closed(alpha, u, convention)
    out = params.a * env * np.exp(1j * pulse.k_prime * x) * np.exp(-1j * pulse.omega * t)
    return complex(out) if np.ndim(out) == 0 else out


def de_broglie_wavelength(p, h=CODATA.h):
    if not p > 0:
        raise ValueError("momentum must be > 0")
    return h / p


def momentum_of(lam, h=CODATA.h):
    if not lam > 0:
        raise ValueError("wavelength must be > 0")
    return h / lam


def electron_momentum(voltage, relativistic=True, const=CODATA):
    """Momentum of an electron accelerated from rest through ``voltage``."""
    if not voltage > 0:
        raise ValueError("voltage must be > 0")
    m, e, c = const.electron_mass, const.electron_charge, const.c
    energy = e * voltage
    p2 = 2 * m * energy
    if relativistic:
        p2 *= 1 + energy / (2 * m * c * c)
    return math.sqrt(p2)


def electron_wavelength(voltage, relativistic=True, const=CODATA):
    return de_broglie_wavelength(electron_momentum(voltage, relativistic, const), const.h)


def accelerating_voltage_of(lam, relativistic=True, const=CODATA):
    """Voltage giving an electron de Broglie wavelength ``lam``."""
    p = momentum_of(lam, const.h)
    m, e, c = const.electron_mass, const.electron_charge, const.c
    if not relativistic:
        return p * p / (2 * m * e)
    # kinetic energy T with p^2 c^2 = T^2 + 2 T m c^2; stable form of sqrt(...) - 1
    q = (p / (m * c)) ** 2
    return m * c * c * q / (math.sqrt(1.0 + q) + 1.0) / e

"""Two-slit superposition of packet waves and the transverse screen displacement."""
from dataclasses import dataclass
import math
import warnings

import numpy as np

from .constants import C_LIGHT
from .metric import GaussianPacket, SymTensor3, evaluate_packet

# Table I geometry: 0.5 um slits, 350 mm to the screen, lambda = 5e-11 m.
TABLE1_D_SLITS = 0.5e-6
TABLE1_SCREEN = 0.35
TABLE1_WAVELENGTH = 5e-11
TABLE1_A12_SQUARED = 6e-6
DEFAULT_SIGMA = 1e-5


@dataclass(frozen=True)
class TwoSlitSetup:
    """Slit separation ``d``, slit-to-screen distance ``D``, wavelength ``lam``.

    The packet's wavenumber must equal 2*pi/lam.
    """

    d: float
    D: float
    lam: float
    packet: GaussianPacket

    def __post_init__(self):
        for name in ("d", "D", "lam"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        k = 2 * math.pi / self.lam
        if abs(self.packet.k_prime - k) > 1e-12 * k:
            raise ValueError("packet.k_prime must equal 2*pi/lam")
        if self.d / self.D > 0.01:
            warnings.warn(f"d/D = {self.d / self.D:.3g} is not small; "
                          "the path-difference approximation degrades",
                          stacklevel=2)

    @classmethod
    def table1(cls, a12=None, sigma=DEFAULT_SIGMA, omega=None, z_center=0.0,
               d=TABLE1_D_SLITS, D=TABLE1_SCREEN, lam=TABLE1_WAVELENGTH):
        """Table I geometry with a cross-polarized (A_12) packet.

        By default A_12 = sqrt(6e-6) so that A_12**2 = 6e-6 and the wave
        moves at the speed of light (omega = c k').
        """
        if a12 is None:
            a12 = math.sqrt(TABLE1_A12_SQUARED)
        k = 2 * math.pi / lam
        if omega is None:
            omega = C_LIGHT * k
        packet = GaussianPacket(SymTensor3.from_components(a12=a12), k, omega,
                                z_center, sigma)
        return cls(d, D, lam, packet)

    @property
    def k_prime(self):
        return self.packet.k_prime

    @property
    def fringe_spacing(self):
        """Spacing lam*D/d between maxima of cos(k' dz / 2)."""
        return self.lam * self.D / self.d


@dataclass(frozen=True)
class ScreenSample:
    x: float
    delta_z: float
    psi: SymTensor3
    displacement: float


def path_difference(x, setup):
    """Extra path x*d/D of the far slit at screen coordinate ``x``."""
    return x * setup.d / setup.D


def slit_wave(setup, which, z, t, delta_z=0.0):
    """Wave from slit ``"A"`` or ``"B"``; slit B is slit A shifted by z -> z + delta_z.

    The shift enters both envelope and carrier.
    """
    if which == "A":
        return evaluate_packet(setup.packet, z, t)
    if which == "B":
        return evaluate_packet(setup.packet, z + delta_z, t)
    raise ValueError(f"which must be 'A' or 'B', got {which!r}")


def superpose(fields):
    fields = list(fields)
    if not fields:
        raise ValueError("need at least one field to superpose")
    total = np.zeros((3, 3), dtype=complex)
    for f in fields:
        total = total + f.entries
    return SymTensor3(total)


def pattern_closed_form(setup, z, t, x):
    """Merged two-slit field 2 A env(z) exp(i k'(z + dz/2) - i w t) cos(k' dz/2).

    ``dz`` is the path difference at screen coordinate ``x``. Both slit
    envelopes are taken at the same centre; this is exact only when the
    envelope is switched off (sigma = inf).
    """
    p = setup.packet
    dz = path_difference(x, setup)
    k = p.k_prime
    phase = np.exp(1j * k * (z + 0.5 * dz)) * np.exp(-1j * p.omega * t)
    scalar = 2.0 * p.envelope(z) * phase * math.cos(0.5 * k * dz)
    return p.amplitude * complex(scalar)


def _check_polarization(setup):
    a = setup.packet.amplitude.entries
    if np.any(a[2, :] != 0):
        raise ValueError("displacement_x needs A_31 = A_32 = A_33 = 0")


def displacement_x(setup, y0, x, z=None):
    """Transverse displacement amplitude at screen coordinate ``x``.

    x_disp = 1/2 * y0 * |A'_12| * cos(k' dz / 2) with |A'_12| = 2 |A_12| env(z),
    i.e. A_12**2 * env * cos(k' dz / 2) when ``y0 == A_12``. ``z`` defaults to the
    envelope centre. Accepts array ``x``.
    """
    _check_polarization(setup)
    p = setup.packet
    if z is None:
        z = p.z_center
    a12 = abs(p.amplitude.entries[0, 1])
    dz = path_difference(np.asarray(x, dtype=float), setup)
    out = y0 * a12 * p.envelope(z) * np.cos(0.5 * p.k_prime * dz)
    return float(out) if np.ndim(out) == 0 else out


def screen_profile(setup, x_min, x_max, n, y0=None, z=None, t=0.0):
    """Uniform screen scan of path difference, merged field and displacement.

    ``y0`` defaults to A_12 (the Table I convention).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not x_min < x_max:
        raise ValueError("need x_min < x_max")
    _check_polarization(setup)
    p = setup.packet
    if y0 is None:
        y0 = abs(p.amplitude.entries[0, 1])
    if z is None:
        z = p.z_center
    xs = np.linspace(x_min, x_max, n)
    disp = displacement_x(setup, y0, xs, z)
    return [ScreenSample(float(x), float(path_difference(x, setup)),
                         pattern_closed_form(setup, z, t, x), float(dv))
            for x, dv in zip(xs, disp)]


def envelope_mismatch_bound(setup, z, x):
    """Rough relative size of the envelope shift the merged form neglects.

    Taylor bound k' |dz| (|z - z'| + |dz|) / (2 sigma) on |env(z + dz)/env(z) - 1|.
    """
    p = setup.packet
    dz = abs(path_difference(x, setup))
    return p.k_prime * dz * (abs(z - p.z_center) + dz) / (2.0 * p.sigma)


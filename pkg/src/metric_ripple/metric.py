"""Tensor/packet types, the Gaussian perturbation field and g = eta + psi.

Conventions: signature (-,+,+,+); the packet propagates along +z; spatial
indices 1..3 map to array indices 0..2.
"""
from dataclasses import dataclass
import math

import numpy as np


def _frozen(arr):
    arr = np.array(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SymTensor3:
    """3x3 complex symmetric tensor (amplitudes A_jk or field values psi_jk)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.shape != (3, 3):
            raise ValueError(f"expected a 3x3 array, got shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise ValueError("tensor is not symmetric")
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def zeros(cls):
        return cls(np.zeros((3, 3), dtype=complex))

    @classmethod
    def from_components(cls, **comps):
        """Build from keyword entries like ``a11=1e-6, a12=2e-6``.

        Only the upper triangle needs to be given; ``a21`` is accepted as an
        alias of ``a12`` (and so on).
        """
        arr = np.zeros((3, 3), dtype=complex)
        for key, val in comps.items():
            if len(key) != 3 or key[0] != "a" or not key[1:].isdigit():
                raise ValueError(f"bad component name {key!r}")
            j, k = int(key[1]) - 1, int(key[2]) - 1
            if not (0 <= j < 3 and 0 <= k < 3):
                raise ValueError(f"bad component name {key!r}")
            arr[j, k] = arr[k, j] = val
        return cls(arr)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __add__(self, other):
        if not isinstance(other, SymTensor3):
            return NotImplemented
        return SymTensor3(self.entries + other.entries)

    def __sub__(self, other):
        if not isinstance(other, SymTensor3):
            return NotImplemented
        return SymTensor3(self.entries - other.entries)

    def __neg__(self):
        return SymTensor3(-self.entries)

    def __mul__(self, scalar):
        if isinstance(scalar, SymTensor3):
            return NotImplemented
        return SymTensor3(self.entries * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymTensor3):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    __hash__ = None

    @property
    def real(self):
        return self.entries.real.copy()

    def is_real(self):
        return not np.any(self.entries.imag)

    def trace(self):
        return complex(np.trace(self.entries))

    def max_abs(self):
        return float(np.max(np.abs(self.entries)))


@dataclass(frozen=True, eq=False)
class Metric4:
    """Real symmetric 4x4 metric, index 0 is time."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=float)
        if arr.shape != (4, 4):
            raise ValueError(f"expected a 4x4 array, got shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise ValueError("metric is not symmetric")
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def minkowski(cls):
        return cls(np.diag([-1.0, 1.0, 1.0, 1.0]))

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        if not isinstance(other, Metric4):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    __hash__ = None


@dataclass(frozen=True)
class GaussianPacket:
    """Gaussian-enveloped plane-wave perturbation travelling along +z.

    Parameters
    ----------
    amplitude : SymTensor3
        Polarization amplitudes A_jk (real).
    k_prime : float
        Carrier wavenumber [1/m].
    omega : float
        Angular frequency [rad/s].
    z_center : float
        Envelope centre z' [m].
    sigma : float
        Envelope parameter [m]; the exponent is k'(z - z')**2 / (4 sigma).
        ``np.inf`` switches the envelope off (pure plane wave).
    """

    amplitude: SymTensor3
    k_prime: float
    omega: float = 0.0
    z_center: float = 0.0
    sigma: float = math.inf

    def __post_init__(self):
        if not isinstance(self.amplitude, SymTensor3):
            object.__setattr__(self, "amplitude", SymTensor3(self.amplitude))
        if not self.k_prime > 0:
            raise ValueError("k_prime must be > 0")
        if not self.sigma > 0:
            raise ValueError("sigma must be > 0")
        if not self.omega >= 0:
            raise ValueError("omega must be >= 0")
        if not self.amplitude.is_real():
            raise ValueError("packet amplitude must be real")

    @property
    def envelope_half_width(self):
        """1/e half-width of the envelope, 2*sqrt(sigma/k')."""
        return 2.0 * math.sqrt(self.sigma / self.k_prime)

    @property
    def period(self):
        return 2 * math.pi / self.omega if self.omega > 0 else math.inf

    def envelope(self, z):
        dz = np.asarray(z, dtype=float) - self.z_center
        return np.exp(-self.k_prime * dz**2 / (4.0 * self.sigma))

    def carrier(self, z, t):
        z = np.asarray(z, dtype=float)
        t = np.asarray(t, dtype=float)
        return np.exp(1j * self.k_prime * z) * np.exp(-1j * self.omega * t)

    def with_amplitude(self, amplitude):
        return GaussianPacket(amplitude, self.k_prime, self.omega,
                              self.z_center, self.sigma)


def packet_scalar(p, z, t):
    """Complex scalar profile envelope(z) * exp(i k' z - i omega t); vectorized."""
    return p.envelope(z) * p.carrier(z, t)


def evaluate_packet(p, z, t):
    """Perturbation field psi_jk(z, t) of a Gaussian packet."""
    return p.amplitude * complex(packet_scalar(p, z, t))


def perturbed_metric(eta, psi):
    """Return g = eta + Re(psi) with psi filling the spatial block.

    Raises ``ValueError`` if any |psi_jk| >= 1, where linearization is
    meaningless.
    """
    if psi.max_abs() >= 1.0:
        raise ValueError("perturbation entries must satisfy |psi_jk| < 1")
    g = np.array(eta.entries, dtype=float)
    g[1:, 1:] += psi.entries.real
    return Metric4(g)

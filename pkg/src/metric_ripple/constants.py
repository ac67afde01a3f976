"""Physical constants (CODATA values via scipy.constants)."""
from dataclasses import dataclass
import math

from scipy import constants as _sc


@dataclass(frozen=True)
class PhysConst:
    hbar: float = _sc.hbar
    h: float = _sc.h
    c: float = _sc.c
    electron_mass: float = _sc.m_e
    electron_charge: float = _sc.e

    def __post_init__(self):
        for name in ("hbar", "h", "c", "electron_mass", "electron_charge"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")
        if abs(self.h - 2 * math.pi * self.hbar) > 1e-12 * self.h:
            raise ValueError("h and hbar are inconsistent (h != 2*pi*hbar)")


CODATA = PhysConst()

HBAR = CODATA.hbar
PLANCK = CODATA.h
C_LIGHT = CODATA.c
M_ELECTRON = CODATA.electron_mass
E_CHARGE = CODATA.electron_charge

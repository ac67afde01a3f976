"""
A delta pulse through the free-particle kernel
==============================================

The spreading envelope is a complex Gaussian integral. Check the closed
form against quadrature, then look at the electron wavelengths involved.
"""
import numpy as np

from metric_ripple import (PulseInput, TransferParams, accelerating_voltage_of,
                           electron_wavelength, gaussian_kernel_closed,
                           gaussian_kernel_quadrature, psi_out)

for alpha, u in [(1.0, 2.0), (0.5, 0.0), (2 - 3j, 1.5)]:
    a = gaussian_kernel_closed(alpha, u)
    b = gaussian_kernel_quadrature(alpha, u)
    print(alpha, u, a, abs(a - b) / abs(a))

# the two prefactor conventions differ by a factor 2 pi
print(gaussian_kernel_closed(1.0, 0.0, "standard") / gaussian_kernel_closed(1.0, 0.0, "paper"))

params = TransferParams()
print("alpha:", params.alpha)
pulse = PulseInput.free_electron(5e-11)
x = np.linspace(-1e-9, 1e-9, 5)
print(np.abs(psi_out(x, 0.0, pulse, params)))
print(np.abs(psi_out(x, 0.0, pulse, params, regularization=1e-20)))

# 50 kV electrons have a much shorter wavelength than 5e-11 m
print("lambda(50 kV):", electron_wavelength(5e4))
print("voltage for 5e-11 m:", accelerating_voltage_of(5e-11))

"""
Test particles in a passing ripple
==================================

The first-order closed form for a particle's position is compared against
an RK4 integration of the geodesic deviation equation. The mismatch is
second order in the amplitude.
"""
import math

import numpy as np

from metric_ripple import GaussianPacket, SymTensor3, closed_form_position, deviation_report
from metric_ripple.geodesic import integrate_deviation

k = 2 * math.pi / 5e-11
x0 = np.array([0.0, 6e-6, 0.0])
v0 = np.zeros(3)

packet = GaussianPacket(SymTensor3.from_components(a12=1e-6), k, 299792458.0 * k, sigma=1e-5)
T = packet.period
traj = integrate_deviation(packet, x0, v0, T, T / 1000)
print("samples:", len(traj.t))
print("closed form at t = T/4:", closed_form_position(packet, x0, v0, T / 4))
print("RK4 at t = T/4:        ", traj.positions[250])

# error vs amplitude: slope 2 on a log-log plot
amps = np.array([1e-7, 1e-6, 1e-5])
errs = []
for a in amps:
    p = packet.with_amplitude(SymTensor3.from_components(a12=a))
    errs.append(deviation_report(p, x0, v0, T, T / 1000) / np.linalg.norm(x0))
print("relative errors:", np.array(errs))
print("log-log slope:", np.polyfit(np.log(amps), np.log(errs), 1)[0])

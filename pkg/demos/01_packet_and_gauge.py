"""
A Gaussian metric ripple in TT gauge
====================================

Build a cross-polarized packet travelling along z, check that it is
transverse and traceless, and look at the curvature it carries.
"""
import math

import numpy as np

from metric_ripple import (GaussianPacket, SymTensor3, check_tt, curvature_j0k0,
                           evaluate_packet, packet_scalar, perturbed_metric, tt_project)
from metric_ripple.metric import Metric4

lam = 5e-11
k = 2 * math.pi / lam
c = 299792458.0
packet = GaussianPacket(SymTensor3.from_components(a12=math.sqrt(6e-6)), k, c * k,
                        z_center=0.0, sigma=1e-5)
print("envelope half width [m]:", packet.envelope_half_width)

# the field along z at t = 0: a carrier under a Gaussian hump
z = np.linspace(-3e-6, 3e-6, 7)
print(np.round(np.abs(packet_scalar(packet, z, 0.0)), 4))

# TT gauge: A k = 0 and tr A = 0
print(check_tt(packet.amplitude))

# a general symmetric tensor is not TT, but its projection is
m = np.arange(9.0).reshape(3, 3)
A = SymTensor3(m + m.T)
print("raw:      ", check_tt(A).passed)
print("projected:", check_tt(tt_project(A)).passed)

# full metric g = eta + Re(psi) at one event, and the curvature R_j0k0
psi = evaluate_packet(packet, 0.0, 0.0)
print(perturbed_metric(Metric4.minkowski(), psi).entries.real)
print("R_j0k0[0,1] [1/s^2]:", curvature_j0k0(packet, 0.0, 0.0).entries[0, 1])

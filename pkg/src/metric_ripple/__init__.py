"""metric_ripple: a metric-perturbation toy model of two-slit fringe formation.

Modules
-------
metric        tensor/packet types, Gaussian perturbation field, g = eta + psi
gauge         TT-gauge checks, TT projector, R_j0k0 curvature
geodesic      first-order trajectories and an RK4 deviation-equation oracle
interference  two-slit superposition, screen displacement profile
fringe        cosine fringe map, fixed point, cobweb data, fringe width
pulse         delta-pulse transfer kernel, quadrature oracle, de Broglie tools
checks        bundled oracle checks
cli           ``metric-ripple`` command
"""
from .constants import CODATA, PhysConst
from .metric import (GaussianPacket, Metric4, SymTensor3, evaluate_packet,
                     packet_scalar, perturbed_metric)
from .gauge import (FourVector, GaugeError, GaugeReport, check_tt, curvature_j0k0,
                    tt_project)
from .geodesic import (ParticleState, Trajectory, closed_form_position,
                       deviation_report, integrate_deviation)
from .interference import (ScreenSample, TwoSlitSetup, displacement_x, path_difference,
                           pattern_closed_form, screen_profile, slit_wave, superpose)
from .fringe import (FringeMap, IterationTrace, cobweb_data, fixed_point_bisection,
                     fringe_width, iterate, solve_fixed_point, table1_map,
                     transient_fringe_width)
from .pulse import (PulseInput, TransferParams, accelerating_voltage_of, alpha_of,
                    de_broglie_wavelength, electron_wavelength, gaussian_kernel_closed,
                    gaussian_kernel_quadrature, momentum_of, psi_out)

__version__ = "0.1.0"

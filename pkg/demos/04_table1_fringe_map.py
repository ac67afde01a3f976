"""
The cosine fringe map
=====================

Iterate x_{n+1} = a2 cos(c x_n), find its fixed point, and see how the
choice of slit separation and of pi changes the numbers.
"""
import math

import numpy as np

from metric_ripple import (cobweb_data, fixed_point_bisection, fringe_width, iterate,
                           solve_fixed_point, table1_map, transient_fringe_width)

fmap = table1_map()
print(f"a2 = {fmap.a2:.1e} m, c = {fmap.c:.6e} 1/m")
for n, x in enumerate(iterate(fmap, 5.41e-6, 14).iterates):
    print(f"{n:2d}  {x:.2e}")

trace = solve_fixed_point(fmap, 5.41e-6)
print("fixed point:", trace.fixed_point, "slope:", trace.slope)
print("bisection:  ", fixed_point_bisection(fmap))
print("fringe width 2x*:", fringe_width(fmap))
print("2 * row 6:       ", transient_fringe_width(fmap))

# with full-precision pi the column drifts off the rounded values
exact = table1_map(pi_value=math.pi)
xs = np.array(iterate(exact, 5.41e-6, 14).iterates)
print("exact pi, fixed point:", solve_fixed_point(exact, 5.41e-6).fixed_point)
print("exact pi, row 2:", f"{xs[1]:.3e}")

# d = 0.5e-11 makes the cosine argument tiny, so x* -> a2
lit = table1_map(literal_d=True)
print("literal d fixed point:", solve_fixed_point(lit, 5.41e-6).fixed_point)

# cobweb vertices, ready for plt.plot(pts[:, 0], pts[:, 1])
pts = cobweb_data(fmap, 5.41e-6, 5)
print(pts[:5])

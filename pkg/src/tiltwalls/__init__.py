"""tiltwalls: exact numerical stability walls on Picard-rank-1 threefolds.

The package computes, classifies, traces, and enumerates the numerical walls
of two-parameter tilt stability (slope nu) and three-parameter stability
(slope lambda) for rational Chern characters, entirely over exact rational
arithmetic, with a CLI that emits JSON dossiers, CSV samples, and SVG
figures.
"""

from .chern import (ChernCharacter, HalfPlanePoint, SPoint, big_delta,
                    ch_ab, ch_beta, delta, dualize, euler_char_p3,
                    proportional, q_full, q_quartic, q_tilt, twist_beta)
from .exactpoly import (IsolatedRoot, RationalPoly, cubic_discriminant,
                        real_roots, refine)
from .geometry import (INFINITY, GammaBranch, Region, ThetaBranch,
                       gamma_alpha_sq, gamma_beta_poly, gamma_discriminant,
                       gamma_theta_intersections, lambda_bar_numerator,
                       lambda_slope, nu_slope, region_of, rho, tau)
from .candidates import (SearchBox, Toggles, check_pseudo_wall,
                         enumerate_nu_candidates, enumerate_pseudo_walls,
                         solve_u3_on_point)
from .walls import (DegenerateNuWall, NuWall, WallClass, WallKind,
                    classify_singularities, classify_wall, critical_points,
                    horizontal_points, lambda_f, lambda_section_in_a, nu_wall,
                    surface_gradient, trace_wall, unbounded_asymptote,
                    wall_gamma_crossings, wall_theta_crossings,
                    walls_intersect)

__version__ = "0.1.0"

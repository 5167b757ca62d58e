"""SL(2,C) trace calculus and a machine-verified component catalog for the
Turk's head knot 8_18.

The package reconstructs matrix quadruples from 11 trace coordinates,
checks the Wirtinger relators of the knot group, and exposes samplers plus
membership residuals for the ten irreducible character-variety components,
including the parabolic census and the excellent-component quartic.
"""

from .catalog import (COMPONENTS, ROTATION_PAIR, CensusReport,
                      ComponentSample, enumerate_parabolic, excellent_quartic,
                      explore_solve, membership_residual, sample_component,
                      special_points)
from .mat2 import Mat2, has_common_eigenvector, is_irreducible_pair
from .numfield import Poly, solve_poly, solve_quadratic
from .reconstruct import (Quadruple, extend_to_quadruple, realize_character,
                          realize_pair, realize_triple)
from .tracealg import (SCoords, TraceVector, det_Sdiamond, rotate, s_from_t,
                       t_from_s, trace_equation_residuals, trace_vector_of,
                       typeI_residuals, typeII_residuals)
from .wirtinger import (factors_through_fig8, is_representation,
                        lemma31_check, relators)

__version__ = "0.1.0"

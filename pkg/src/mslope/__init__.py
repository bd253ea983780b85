"""Exact boundary-slope bounds for Montesinos knots from positive/negative crossing counts."""
from .rational import (Fraction, INFINITY, make_fraction, standard_continued_fraction,
                       evaluate_continued_fraction, farey_parents)
from .montesinos import (MontesinosExpression, validate, parse_expression, is_knot,
                         mirror, to_restricted_expression, tangle_rotation_move)
from .edgepath import slope_bounds, SlopeBoundsReport

__version__ = "0.1.0"

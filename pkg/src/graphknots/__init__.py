"""Exact colored Jones polynomials of graph knots and Strong Slope checks."""
from .cjones import JonesCache, eps, jones, jones_cable, jones_sum, jones_torus, jones_unknot
from .degreefit import QuasiPoly, dplus_sequence, fit_quasipoly, jones_slopes, sign_profile
from .knotexpr import Cable, Sum, Torus, U, Unknot, format_expr, parse
from .qlaurent import LaurentPoly

__version__ = "0.1.0"

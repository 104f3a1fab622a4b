"""Exact and numeric tools around the Lagutinski determinant and the AGM family.

The symbolic side works over Q with :class:`fractions.Fraction` scalars:
bivariate polynomials, planar derivations, Lagutinski matrices and the
search for rational first integrals. The numeric side holds the mean
iterations, complete elliptic integrals, gamma/beta, Laplace transform pairs
and the adaptive quadrature used to cross-check the closed forms.
"""
from .derivation import Derivation, RationalFunction, apply, is_integral
from .lagutinski import (
    IntegralReport,
    bareiss_det,
    build_matrix,
    cofactor_det,
    decide_integral,
    derivation_from_integral,
    detL,
    find_rational_integral,
)
from .means import agm, elliptic_arc, elliptic_e, elliptic_k, ellipse_circumference, ghm, magm
from .poly import ONE, X, Y, ZERO, Polynomial, monomial_at, monomial_index
from .quadrature import QuadratureResult, integrate, integrate_to_infinity
from .special import beta, gamma, inverse_laplace_transform, laplace_transform

__version__ = "0.1.0"

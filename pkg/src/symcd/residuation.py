"""The linear action of residuation on the rank-2 divisor-class space.

Residuation sends a complete series |L| of degree 2g-2-d to the unique member
of |K - L|; on divisor classes it acts by

    theta |-> theta_hat,    theta - x |-> X_hat

where (theta_hat, X_hat) is the corresponding basis on the target moduli
space.  Only this induced linear map carries finite data, so only it is
modeled; for d = g-1 the map is a self-map of C_(g-1) and the two bases
coincide, giving an honest involution of the (theta, x)-plane.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import as_rational
from .errors import PreconditionError

__all__ = [
    "residuation_pullback",
    "residuation_inverse_pullback",
    "residuation_involution_matrix",
    "apply_matrix",
]

Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def residuation_pullback(a: int | Fraction, b: int | Fraction) -> tuple[Fraction, Fraction]:
    """Image of a*theta + b*x in the (theta_hat, X_hat) basis: (a + b, -b)."""
    a, b = as_rational(a), as_rational(b)
    return a + b, -b


def residuation_inverse_pullback(a: int | Fraction, b: int | Fraction) -> tuple[Fraction, Fraction]:
    """Image of a*X_hat + b*theta_hat in the (theta, x) basis.

    Returns the coefficient pair of (a + b)*theta - a*x.
    """
    a, b = as_rational(a), as_rational(b)
    return a + b, -a


def residuation_involution_matrix(g: int) -> Matrix2:
    """The residuation self-map of the (theta, x)-plane of C_(g-1).

    Sends theta to theta and x to theta - x; squares to the identity and has
    determinant -1.  Columns are images of the basis vectors, acting on
    coefficient pairs (theta_coefficient, x_coefficient).
    """
    if g < 3:
        raise PreconditionError(f"the involution needs g >= 3 (got {g})")
    one = Fraction(1)
    return ((one, one), (Fraction(0), -one))


def apply_matrix(matrix: Matrix2, vector: tuple[int | Fraction, int | Fraction]) -> tuple[Fraction, Fraction]:
    """Matrix-vector product over exact rationals."""
    v0, v1 = (as_rational(v) for v in vector)
    return (matrix[0][0] * v0 + matrix[0][1] * v1, matrix[1][0] * v0 + matrix[1][1] * v1)

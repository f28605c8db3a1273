from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symcd.errors import PreconditionError
from symcd.residuation import (
    apply_matrix,
    residuation_inverse_pullback,
    residuation_involution_matrix,
    residuation_pullback,
)


def test_pullback_on_basis():
    assert residuation_pullback(1, 0) == (1, 0)  # theta |-> theta_hat
    assert residuation_pullback(1, -1) == (0, 1)  # theta - x |-> X_hat
    assert residuation_pullback(0, 1) == (1, -1)  # x = theta - (theta - x)


def test_inverse_pullback_on_basis():
    assert residuation_inverse_pullback(1, 0) == (1, -1)  # X_hat |-> theta - x
    assert residuation_inverse_pullback(0, 1) == (1, 0)  # theta_hat |-> theta


@given(st.fractions(), st.fractions())
def test_pullbacks_are_mutually_inverse(a, b):
    theta_hat, x_hat = residuation_pullback(a, b)
    # inverse takes (X_hat coefficient, theta_hat coefficient)
    assert residuation_inverse_pullback(x_hat, theta_hat) == (a, b)
    u, v = residuation_inverse_pullback(a, b)
    back = residuation_pullback(u, v)
    assert (back[1], back[0]) == (a, b)


def test_involution_squares_to_identity():
    m = residuation_involution_matrix(6)
    squared = tuple(apply_matrix(m, apply_matrix(m, column)) for column in ((1, 0), (0, 1)))
    assert squared == ((1, 0), (0, 1))


def test_involution_determinant_is_minus_one():
    m = residuation_involution_matrix(5)
    assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == -1


def test_involution_action():
    m = residuation_involution_matrix(4)
    t = Fraction(2, 7)
    # theta - t*x  |->  (1-t)*theta + t*x
    assert apply_matrix(m, (1, -t)) == (1 - t, t)
    # theta - x |-> x
    assert apply_matrix(m, (1, -1)) == (0, 1)


def test_involution_needs_genus_three():
    with pytest.raises(PreconditionError):
        residuation_involution_matrix(2)

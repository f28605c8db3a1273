"""Constructors for the named cycle classes on symmetric powers of a curve.

Each constructor returns the numerical class of a concrete geometric locus:

* ``subordinate_class``        -- divisors subordinate to a linear series
                                  (degeneracy-locus formula, after
                                  Arbarello-Cornalba-Griffiths-Harris VIII.3);
* ``small_diagonal_class``     -- divisors of the form d*p;
* ``bipartition_diagonal_class`` -- divisors of the form (g-d+1)*p + d*q on
                                  C_(g+1), in two variants (see below), with an
                                  independent coefficient-extraction route;
* ``ramification_divisor_class`` -- the ramification divisor of the Gauss map,
                                  swept by divisors subordinate to
                                  K(-(g-d+1)p), together with the test-curve
                                  linear system that determines it;
* ``pencil_residual_divisor_class`` -- for genus 2k-1, the divisor on C_k swept
                                  by loci subordinate to residuals of pencils
                                  of degree k+1;
* ``hyperelliptic_pencil_locus_class`` -- on a hyperelliptic curve, the locus
                                  C^1_d of divisors moving in a pencil.

Everything is exact rational arithmetic; the few double-route computations
(closed form versus brute-force extraction, closed form versus solved linear
system) are deliberately kept independent so that they can cross-check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    BivariateSeries,
    factorial,
    gen_binomial,
    inv_factorial,
    linear_power_coefficient,
)
from .cycles import CycleClass, DivisorClass, divisor_class, evaluate_top, multiply
from .errors import PreconditionError

__all__ = [
    "subordinate_class",
    "small_diagonal_class",
    "bipartition_diagonal_class",
    "bipartition_diagonal_extraction",
    "ramification_divisor_class",
    "solve_test_curve_system",
    "TestCurveSolution",
    "pencil_residual_divisor_class",
    "pencil_residual_sums",
    "hyperelliptic_pencil_locus_class",
    "subordinate_pencil_intersections",
    "binomial_convolution_identity",
    "convolution_residual",
]


def subordinate_class(g: int, d: int, n: int, r: int) -> CycleClass:
    """Class of the locus of degree-d divisors subordinate to a linear series.

    For a series of degree n and (projective) dimension r with n >= d >= r >= 0,
    the locus ``{D in C_d : V cap H^0(L(-D)) != 0}`` has codimension d - r and
    fundamental class

        sum_{k=0}^{d-r}  C(n-g-r, k) * x^k * theta^(d-r-k) / (d-r-k)!

    The upper binomial index n - g - r is frequently negative (e.g. -1 for the
    residual series used throughout), which is why ``gen_binomial`` supports it.
    """
    if not (n >= d >= r >= 0):
        raise PreconditionError(
            f"subordinate locus needs n >= d >= r >= 0 (got n={n}, d={d}, r={r})"
        )
    codim = d - r
    coeffs = tuple(
        Fraction(gen_binomial(n - g - r, k)) * inv_factorial(codim - k)
        for k in range(codim + 1)
    )
    return CycleClass(g, d, coeffs)


def small_diagonal_class(g: int, d: int) -> CycleClass:
    """Class of the small diagonal {d*p : p in C} inside C_d.

    Codimension d - 1, value d * x^(d-2) * (((d-1)g + 1)x - (d-1)theta).
    """
    if d < 2:
        raise PreconditionError(f"the small diagonal needs d >= 2 (got {d})")
    coeffs = [Fraction(0)] * d
    coeffs[d - 1] = Fraction(d * ((d - 1) * g + 1))
    coeffs[d - 2] = Fraction(-d * (d - 1))
    return CycleClass(g, d, tuple(coeffs))


def _bipartition_multiplicity(g: int, d: int) -> Fraction:
    # The parametrization (p, q) |-> (g-d+1)p + dq is 2:1 onto its image
    # exactly when the two parts coincide, i.e. d = (g+1)/2.
    return Fraction(1, 2) if 2 * d == g + 1 else Fraction(1)


def _check_bipartition_range(g: int, d: int) -> None:
    if g < 3 or not 2 <= d <= g - 1:
        raise PreconditionError(
            f"two-part diagonal needs g >= 3 and 2 <= d <= g-1 (got g={g}, d={d})"
        )


def bipartition_diagonal_class(g: int, d: int, variant: str = "proof") -> CycleClass:
    """Closed-form class of the two-part diagonal {(g-d+1)p + dq} in C_(g+1).

    The class is

        (1 - delta/2) * d(g-d+1) * x^(g-3) * (A x^2 + B x*theta + C theta^2)

    with delta the Kronecker delta at d = (g+1)/2 and

        A = (d-1)g^3 - (d^2-2)g^2 + (d^2-d-1)g + 2
        B = (2-2d)g^2 + (2d^2-3)g - (2d^2-2d-1)
        C = (d-1)(g-d)

    Two published versions of the x*theta coefficient are in circulation; they
    differ by d - 1.  The default ``variant="proof"`` value above is the one
    confirmed by the independent coefficient extraction
    (:func:`bipartition_diagonal_extraction`); ``variant="statement"`` builds
    the other one, with B replaced by (2-2d)g^2 + (2d^2-3)g - (2d^2-d-2), and
    is kept only so the discrepancy can be demonstrated.
    """
    _check_bipartition_range(g, d)
    if variant not in ("proof", "statement"):
        raise PreconditionError(f"variant must be 'proof' or 'statement' (got {variant!r})")
    a_coeff = (d - 1) * g**3 - (d * d - 2) * g**2 + (d * d - d - 1) * g + 2
    if variant == "proof":
        b_coeff = (2 - 2 * d) * g**2 + (2 * d * d - 3) * g - (2 * d * d - 2 * d - 1)
    else:
        b_coeff = (2 - 2 * d) * g**2 + (2 * d * d - 3) * g - (2 * d * d - d - 2)
    c_coeff = (d - 1) * (g - d)
    scale = _bipartition_multiplicity(g, d) * d * (g - d + 1)
    coeffs = [Fraction(0)] * g
    coeffs[g - 1] = scale * a_coeff
    coeffs[g - 2] = scale * b_coeff
    coeffs[g - 3] = scale * c_coeff
    return CycleClass(g, g + 1, tuple(coeffs))


def bipartition_diagonal_extraction(g: int, d: int) -> CycleClass:
    """Two-part diagonal class by brute-force coefficient extraction.

    Pushing the fundamental class of C x C forward along
    (p, q) |-> (g-d+1)p + dq expresses the coefficient of x^(g-1-a)*theta^a as

        sum_{b=0}^{a} (-1)^(a+b)/(b!(a-b)!) *
            [t1*t2] (1 + (g-d+1)t1 + d*t2)^(2-g+b) * (1 + (g-d+1)^2 t1 + d^2 t2)^(g-b)

    all times the same 2:1 multiplicity correction as the closed form.  This
    route shares no algebra with :func:`bipartition_diagonal_class` and serves
    as its oracle.
    """
    _check_bipartition_range(g, d)
    base_linear = BivariateSeries.linear(1, g - d + 1, d)
    base_square = BivariateSeries.linear(1, (g - d + 1) ** 2, d**2)
    mixed = [
        (base_linear ** (2 - g + beta) * base_square ** (g - beta)).coefficient(1, 1)
        for beta in range(g)
    ]
    scale = _bipartition_multiplicity(g, d)
    coeffs = [Fraction(0)] * g
    for alpha in range(g):
        total = Fraction(0)
        for beta in range(alpha + 1):
            total += (
                Fraction((-1) ** (alpha + beta), factorial(beta) * factorial(alpha - beta))
                * mixed[beta]
            )
        coeffs[g - 1 - alpha] = scale * total
    return CycleClass(g, g + 1, tuple(coeffs))


def _check_ramification_range(g: int, d: int) -> None:
    if g < 4 or not 2 <= d <= g - 1:
        raise PreconditionError(
            f"ramification divisor needs g >= 4 and 2 <= d <= g-1 (got g={g}, d={d})"
        )


def ramification_divisor_class(g: int, d: int) -> DivisorClass:
    """Closed-form class a*theta - b*x of the Gauss-map ramification divisor on C_d.

        a = (g-d+1)(g^2 - dg + (d-2)),   b = (g-d+1)(g^2 - (d-1)g - 2)

    The slope b/a equals 1 + (g-d)/(g^2 - dg + (d-2)), the proven-effective
    bound for the cone of C_d.
    """
    _check_ramification_range(g, d)
    a = (g - d + 1) * (g * g - d * g + d - 2)
    b = (g - d + 1) * (g * g - (d - 1) * g - 2)
    return divisor_class(g, d, a, b)


@dataclass(frozen=True)
class TestCurveSolution:
    """Outcome of the two-test-curve computation of the ramification divisor.

    ``x_curve_intersection`` is the intersection with the curve of divisors
    p + q_1 + ... + q_(d-1) (class x^(d-1)); ``diagonal_intersection`` is the
    raw intersection with the small-diagonal curve.  The solved class satisfies
    a*g - b = x_curve_intersection and a*d*g - b = diagonal_intersection / d.
    """

    divisor: DivisorClass
    x_curve_intersection: Fraction
    diagonal_intersection: Fraction


def solve_test_curve_system(g: int, d: int) -> TestCurveSolution:
    """Recompute the ramification divisor class from first principles.

    The intersection with the moving-point curve is evaluated on C_(g-d+1) as

        (g-2) * [small diagonal] . [subordinate to a series of degree 2g-d-1
                                    and dimension g-d]

    and the intersection with the small-diagonal curve on C_(g+1) as

        (1 + delta) * [two-part diagonal] . [subordinate to a series of degree
                                             2g-2 and dimension g-1]

    (delta the Kronecker delta at d = (g+1)/2).  The direct evaluation of the
    diagonal intersection against a*theta - b*x gives d*(a*d*g - b), hence the
    division by d before solving the 2x2 system; the system is never singular
    since its determinant is g(d-1) != 0 for d >= 2.
    """
    _check_ramification_range(g, d)
    small_power = g - d + 1
    chi_side = (g - 2) * evaluate_top(
        multiply(
            small_diagonal_class(g, small_power),
            subordinate_class(g, small_power, 2 * g - d - 1, g - d),
        )
    )
    delta = 1 if 2 * d == g + 1 else 0
    diagonal_side = (1 + delta) * evaluate_top(
        multiply(
            bipartition_diagonal_class(g, d),
            subordinate_class(g, g + 1, 2 * g - 2, g - 1),
        )
    )
    a = (diagonal_side / d - chi_side) / (g * (d - 1))
    b = a * g - chi_side
    return TestCurveSolution(divisor_class(g, d, a, b), chi_side, diagonal_side)


def pencil_residual_sums(k: int) -> tuple[int, int]:
    """The theta- and x-coefficient sums of the pencil-residual divisor on C_k.

    For genus 2k-1, pushing C^(k-2)_(3k-5) down to C_k gives a divisor whose
    class is (1/(k-1)) * (A*theta + B*x) with

        A = sum_{l=0}^{k-2} (-1)^l (l+1) C(2k-4-l, k-2) C(2k-2, l+3)
        B = sum_{l=0}^{k-2} (-1)^l l(l+1) C(2k-4-l, k-2) C(2k-1, l+3)

    B is intrinsically negative; both sums are returned verbatim, signs intact.
    """
    if k < 3:
        raise PreconditionError(f"pencil-residual divisor needs k >= 3 (got {k})")
    a_sum = sum(
        (-1) ** l * (l + 1) * gen_binomial(2 * k - 4 - l, k - 2) * gen_binomial(2 * k - 2, l + 3)
        for l in range(k - 1)
    )
    b_sum = sum(
        (-1) ** l * l * (l + 1) * gen_binomial(2 * k - 4 - l, k - 2) * gen_binomial(2 * k - 1, l + 3)
        for l in range(k - 1)
    )
    return a_sum, b_sum


def pencil_residual_divisor_class(k: int) -> DivisorClass:
    """Class of the divisor on C_k (genus 2k-1) swept by residuals of pencils.

    Proportional to theta - (2 - 1/k)x; at k = 3 it is 3*theta - 5*x, which
    spans a boundary ray of the effective cone of C_3 in genus 5.
    """
    a_sum, b_sum = pencil_residual_sums(k)
    return DivisorClass(
        2 * k - 1, k, (Fraction(a_sum, k - 1), Fraction(b_sum, k - 1))
    )


def hyperelliptic_pencil_locus_class(g: int, d: int) -> DivisorClass:
    """Class of C^1_d = {D : dim|D| >= 1} on a hyperelliptic curve of genus g.

    C^1_d coincides with the locus subordinate to the (d-1)-st power of the
    hyperelliptic pencil, a series of degree 2(d-1) and dimension d-1, so its
    class comes straight from :func:`subordinate_class`; it simplifies to
    theta - (g-d+1)x.
    """
    if not 2 <= d <= g:
        raise PreconditionError(
            f"hyperelliptic pencil locus needs 2 <= d <= g (got g={g}, d={d})"
        )
    locus = subordinate_class(g, d, 2 * (d - 1), d - 1)
    return DivisorClass(g, d, locus.coeffs)


def subordinate_pencil_intersections(k: int) -> tuple[Fraction, Fraction]:
    """Intersections of the pencil-subordinate locus on C_k, genus 2k-1.

    For a pencil of degree k+1, the curve of subordinate divisors meets theta
    and x in

        (2k-1) * sum_j (-1)^j C(k-2+j, j) C(2k-2, k-1-j)   and
                 sum_j (-1)^j C(k-2+j, j) C(2k-1, k-1-j)

    which collapse to 2k-1 and k.  The raw alternating sums are computed here;
    the collapsed values (and the evaluate_top route) live in the test suite.
    """
    if k < 2:
        raise PreconditionError(f"pencil intersections need k >= 2 (got {k})")
    theta_sum = sum(
        (-1) ** j * gen_binomial(k - 2 + j, j) * gen_binomial(2 * k - 2, k - 1 - j)
        for j in range(k)
    )
    x_sum = sum(
        (-1) ** j * gen_binomial(k - 2 + j, j) * gen_binomial(2 * k - 1, k - 1 - j)
        for j in range(k)
    )
    return Fraction((2 * k - 1) * theta_sum), Fraction(x_sum)


def binomial_convolution_identity(m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the convolution identity linking the two pencil-residual sums.

    For m >= 1,

        (2m+3) * sum_{l=0}^m (-1)^l (l+1) C(2m-l, m) C(2m+2, l+3)
      = -(m+2) * sum_{l=0}^m (-1)^l l(l+1) C(2m-l, m) C(2m+3, l+3)

    Returns (lhs, rhs); equality is what makes the pencil-residual divisor
    proportional to theta - (2 - 1/k)x at m = k - 2.
    """
    if m < 1:
        raise PreconditionError(f"the identity needs m >= 1 (got {m})")
    lhs = (2 * m + 3) * sum(
        (-1) ** l * (l + 1) * gen_binomial(2 * m - l, m) * gen_binomial(2 * m + 2, l + 3)
        for l in range(m + 1)
    )
    rhs = -(m + 2) * sum(
        (-1) ** l * l * (l + 1) * gen_binomial(2 * m - l, m) * gen_binomial(2 * m + 3, l + 3)
        for l in range(m + 1)
    )
    return Fraction(lhs), Fraction(rhs)


def convolution_residual(m: int) -> Fraction:
    """Coefficient of t^m in (2m - 2t)(1 + t)^m; identically zero for m >= 1.

    This is the generating-function form of the convolution identity: the
    difference of the two sides is proportional to this coefficient.
    """
    if m < 1:
        raise PreconditionError(f"the residual needs m >= 1 (got {m})")
    return linear_power_coefficient(2 * m, -2, m, m)

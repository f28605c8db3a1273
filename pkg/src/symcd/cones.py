"""Cone boundaries and volume functions for divisors on C_d.

The effective cone of C_d lives in the plane spanned by theta and x.  One
boundary ray is always the half-diagonal class -theta + (g+d-1)x (Kouvidakis).
The other side is settled exactly in three situations:

* hyperelliptic curves, 2 <= d <= g: the ray of theta - (g-d+1)x, the class of
  the pencil locus C^1_d contracted by the Abel map;
* general nonhyperelliptic curves, d = g-1: the ray of the Gauss-map
  ramification divisor, slope 1 + 1/(2g-3);
* general curves of genus 5, d = 3: the pencil-residual ray theta - (5/3)x.

Elsewhere only a bracket is known: an inner (proven effective) ray, taken as
the best of the ramification slope, theta - 2x for 2d <= g (Kouvidakis), and
theta - (2 - 1/k)x at (g, d) = (2k-1, k); and an outer ray theta - (g-d+1)x
obtained by degenerating to the hyperelliptic cone.

The two volume formulas are likewise restricted to their proven parameter
ranges, and evaluation outside them raises :class:`OutOfProvenDomainError`
rather than extrapolating.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import as_rational, factorial, gen_binomial
from .cycles import CycleClass
from .errors import OutOfProvenDomainError, PreconditionError

__all__ = [
    "CurveType",
    "CurveContext",
    "Ray",
    "ConeStatus",
    "Membership",
    "Cone2D",
    "NefFacts",
    "effective_slope_bound",
    "effective_cone",
    "nef_facts",
    "volume_general",
    "volume_hyperelliptic",
    "volume_integrality",
]

DIAGONAL_RAY_PROVENANCE = "half-diagonal class -theta + (g+d-1)x spans an effective boundary ray (Kouvidakis)"
HYPERELLIPTIC_RAY_PROVENANCE = (
    "theta - (g-d+1)x is the class of the pencil locus C^1_d, contracted by the Abel map"
)
RAMIFICATION_RAY_PROVENANCE = (
    "Gauss-map ramification divisor: theta - (1 + 1/(2g-3))x spans the boundary on C_(g-1)"
)
PENCIL_RESIDUAL_RAY_PROVENANCE = (
    "pencil-residual divisor: theta - (5/3)x spans the boundary of C_3 in genus 5"
)
RAMIFICATION_BOUND_PROVENANCE = "inner bound: ramification divisor makes theta - r*x effective"
KOUVIDAKIS_BOUND_PROVENANCE = "inner bound: theta - 2x is effective for 3 <= d <= g/2 (Kouvidakis)"
PENCIL_RESIDUAL_BOUND_PROVENANCE = (
    "inner bound: pencil-residual divisor makes theta - (2 - 1/k)x effective at d = (g+1)/2"
)
OUTER_BOUND_PROVENANCE = (
    "outer bound: degeneration to a hyperelliptic curve caps the slope at g-d+1"
)
DIAGONAL_NEF_PROVENANCE = (
    "-theta + dg*x is nef and big with augmented base locus the small diagonal (Pacienza)"
)
THETA_BOUNDARY_PROVENANCE = (
    "theta spans a common boundary ray of the nef and movable cones when the Abel map is a divisorial contraction"
)
AMPLENESS_PROVENANCE = (
    "theta - x is ample whenever no degree-d divisor moves in a pencil (d below the gonality)"
)


class CurveType(enum.Enum):
    """Which general curve the cone data refers to."""

    GENERAL = "general"
    HYPERELLIPTIC = "hyperelliptic"


@dataclass(frozen=True)
class CurveContext:
    genus: int
    d: int
    curve_type: CurveType

    def __post_init__(self):
        if self.genus < 2:
            raise PreconditionError(f"genus must be at least 2 (got {self.genus})")
        if self.d < 2:
            raise PreconditionError(f"symmetric power index must be at least 2 (got {self.d})")


@dataclass(frozen=True)
class Ray:
    """Primitive integer direction u*theta + v*x; rays are half-lines, so the
    overall sign is meaningful and never normalized away."""

    theta: int
    x: int

    def __post_init__(self):
        if not isinstance(self.theta, int) or not isinstance(self.x, int):
            raise PreconditionError("ray coefficients must be integers")
        if self.theta == 0 and self.x == 0:
            raise PreconditionError("the zero vector spans no ray")
        g = math.gcd(self.theta, self.x)
        if g != 1:
            object.__setattr__(self, "theta", self.theta // g)
            object.__setattr__(self, "x", self.x // g)

    @classmethod
    def from_rationals(cls, theta: int | Fraction, x: int | Fraction) -> "Ray":
        theta, x = as_rational(theta), as_rational(x)
        scale = theta.denominator * x.denominator // math.gcd(theta.denominator, x.denominator)
        return cls(int(theta * scale), int(x * scale))

    @classmethod
    def from_class(cls, divisor: CycleClass) -> "Ray":
        if divisor.codim != 1:
            raise PreconditionError("only divisor classes span rays in the plane")
        return cls.from_rationals(divisor.coeffs[0], divisor.coeffs[1])

    def __str__(self) -> str:
        terms = []
        for coeff, name in ((self.theta, "theta"), (self.x, "x")):
            if coeff == 0:
                continue
            body = name if abs(coeff) == 1 else f"{abs(coeff)}*{name}"
            terms.append((coeff < 0, body))
        rendered = ""
        for index, (negative, body) in enumerate(terms):
            if index == 0:
                rendered = ("-" if negative else "") + body
            else:
                rendered += (" - " if negative else " + ") + body
        return rendered


class ConeStatus(enum.Enum):
    EXACT = "exact"
    BRACKET = "inner-and-outer-bracket"


class Membership(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"
    UNDETERMINED = "undetermined"


def _decompose(upper: Ray, lower: Ray, vec: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    # Solve vec = alpha*upper + beta*lower by Cramer's rule.
    det = Fraction(upper.theta * lower.x - upper.x * lower.theta)
    alpha = (vec[0] * lower.x - vec[1] * lower.theta) / det
    beta = (Fraction(upper.theta) * vec[1] - Fraction(upper.x) * vec[0]) / det
    return alpha, beta


def _exact_membership(upper: Ray, lower: Ray, vec: tuple[Fraction, Fraction]) -> Membership:
    alpha, beta = _decompose(upper, lower, vec)
    if alpha > 0 and beta > 0:
        return Membership.INSIDE
    if alpha < 0 or beta < 0:
        return Membership.OUTSIDE
    return Membership.BOUNDARY


@dataclass(frozen=True)
class Cone2D:
    """A 2-dimensional cone in the (theta, x)-plane.

    ``upper`` is always exact (the half-diagonal side).  For ``EXACT`` status
    ``lower`` is the second boundary ray and ``lower_outer`` is None; for
    ``BRACKET`` status ``lower`` is the proven-effective inner ray and
    ``lower_outer`` the outer bound, and membership between them is reported
    as undetermined.
    """

    context: CurveContext
    upper: Ray
    lower: Ray
    status: ConeStatus
    provenance: tuple[str, ...]
    lower_outer: Ray | None = None

    def __post_init__(self):
        if self.upper.theta * self.lower.x == self.upper.x * self.lower.theta:
            raise PreconditionError("boundary rays of a 2-dimensional cone cannot be proportional")
        if (self.status is ConeStatus.BRACKET) != (self.lower_outer is not None):
            raise PreconditionError("bracket cones carry an outer ray; exact cones do not")

    def membership(self, divisor: CycleClass) -> Membership:
        """Locate a divisor class relative to the cone by exact sign tests."""
        if divisor.codim != 1:
            raise PreconditionError("membership is defined for divisor classes only")
        if divisor.genus != self.context.genus or divisor.d != self.context.d:
            raise PreconditionError(
                f"class on C_{divisor.d} (g={divisor.genus}) tested against the cone of "
                f"C_{self.context.d} (g={self.context.genus})"
            )
        vec = (divisor.coeffs[0], divisor.coeffs[1])
        inner = _exact_membership(self.upper, self.lower, vec)
        if self.status is ConeStatus.EXACT:
            return inner
        if inner is Membership.INSIDE:
            return Membership.INSIDE
        if inner is Membership.BOUNDARY:
            _, beta = _decompose(self.upper, self.lower, vec)
            # On the upper ray (or at the apex) the cone is settled; on the
            # inner ray only effectivity is known, not extremality.
            return Membership.BOUNDARY if beta == 0 else Membership.UNDETERMINED
        outer = _exact_membership(self.upper, self.lower_outer, vec)
        if outer is Membership.OUTSIDE:
            return Membership.OUTSIDE
        return Membership.UNDETERMINED


def effective_slope_bound(g: int, d: int) -> Fraction:
    """The proven-effective slope r = 1 + (g-d)/(g^2 - dg + (d-2)).

    theta - r*x is the direction of the Gauss-map ramification divisor; at
    d = g-1 the bound becomes 1 + 1/(2g-3) and is sharp.
    """
    if g < 4 or not 2 <= d <= g - 1:
        raise PreconditionError(
            f"slope bound needs g >= 4 and 2 <= d <= g-1 (got g={g}, d={d})"
        )
    return 1 + Fraction(g - d, g * g - d * g + d - 2)


def effective_cone(ctx: CurveContext) -> Cone2D:
    """Effective-cone data for C_d, exact where proven and bracketed elsewhere."""
    g, d = ctx.genus, ctx.d
    upper = Ray(-1, g + d - 1)
    if ctx.curve_type is CurveType.HYPERELLIPTIC:
        if not 2 <= d <= g:
            raise PreconditionError(
                f"hyperelliptic cone needs 2 <= d <= g (got g={g}, d={d})"
            )
        return Cone2D(
            ctx,
            upper,
            Ray(1, -(g - d + 1)),
            ConeStatus.EXACT,
            (DIAGONAL_RAY_PROVENANCE, HYPERELLIPTIC_RAY_PROVENANCE),
        )
    if g < 4 or not 2 <= d <= g - 1:
        raise PreconditionError(
            f"nonhyperelliptic cone needs g >= 4 and 2 <= d <= g-1 (got g={g}, d={d})"
        )
    if d == g - 1:
        slope = effective_slope_bound(g, d)
        return Cone2D(
            ctx,
            upper,
            Ray.from_rationals(1, -slope),
            ConeStatus.EXACT,
            (DIAGONAL_RAY_PROVENANCE, RAMIFICATION_RAY_PROVENANCE),
        )
    if g == 5 and d == 3:
        return Cone2D(
            ctx,
            upper,
            Ray(3, -5),
            ConeStatus.EXACT,
            (DIAGONAL_RAY_PROVENANCE, PENCIL_RESIDUAL_RAY_PROVENANCE),
        )
    candidates = [(effective_slope_bound(g, d), RAMIFICATION_BOUND_PROVENANCE)]
    if 3 <= d and 2 * d <= g:
        candidates.append((Fraction(2), KOUVIDAKIS_BOUND_PROVENANCE))
    if g == 2 * d - 1 and d >= 3:
        candidates.append((2 - Fraction(1, d), PENCIL_RESIDUAL_BOUND_PROVENANCE))
    inner_slope, inner_provenance = max(candidates, key=lambda item: item[0])
    return Cone2D(
        ctx,
        upper,
        Ray.from_rationals(1, -inner_slope),
        ConeStatus.BRACKET,
        (DIAGONAL_RAY_PROVENANCE, inner_provenance, OUTER_BOUND_PROVENANCE),
        lower_outer=Ray(1, -(g - d + 1)),
    )


@dataclass(frozen=True)
class NefFacts:
    """Nef/movable cone facts known for C_d.

    ``diagonal_nef_ray`` (-theta + dg*x, for d >= 3) bounds the nef cone on the
    diagonal side for any curve.  ``theta_boundary_ray`` is set for
    hyperelliptic curves, where theta spans a common boundary ray of the nef
    and movable cones.  ``theta_minus_x_ample`` records whether theta - x is
    ample, which holds exactly when d is below the gonality.
    """

    context: CurveContext
    diagonal_nef_ray: Ray | None
    theta_boundary_ray: Ray | None
    gonality: int
    theta_minus_x_ample: bool
    provenance: tuple[str, ...]


def nef_facts(ctx: CurveContext) -> NefFacts:
    g, d = ctx.genus, ctx.d
    provenance: list[str] = []
    diagonal_ray = None
    if d >= 3:
        diagonal_ray = Ray(-1, d * g)
        provenance.append(DIAGONAL_NEF_PROVENANCE)
    theta_ray = None
    if ctx.curve_type is CurveType.HYPERELLIPTIC:
        if not 2 <= d <= g:
            raise PreconditionError(
                f"hyperelliptic nef data needs 2 <= d <= g (got g={g}, d={d})"
            )
        gonality = 2
        theta_ray = Ray(1, 0)
        provenance.append(THETA_BOUNDARY_PROVENANCE)
    else:
        # A general curve of genus g has gonality ceil(g/2) + 1.
        gonality = (g + 1) // 2 + 1
    ample = d < gonality
    provenance.append(AMPLENESS_PROVENANCE)
    return NefFacts(ctx, diagonal_ray, theta_ray, gonality, ample, tuple(provenance))


def _general_volume_limit(g: int) -> Fraction:
    return 1 + Fraction(1, g * g - g - 1)


def volume_general(g: int, t: int | Fraction) -> Fraction:
    """Volume of theta - t*x on C_(g-1) for a general nonhyperelliptic curve.

        vol = sum_{k=0}^{g-1} C(g-1, k) * g!/(k+1)! * t^k (1-t)^(g-1-k)

    proven for 0 <= t <= 1 + 1/(g^2-g-1): residuation carries theta - t*x to
    (1-t)theta + t*x, which stays nef on that interval, so the volume is its
    top self-intersection.  Outside the interval the formula is not known to
    hold and evaluation is refused.
    """
    if g < 4:
        raise PreconditionError(f"the volume formula needs g >= 4 (got {g})")
    t = as_rational(t)
    limit = _general_volume_limit(g)
    if not 0 <= t <= limit:
        raise OutOfProvenDomainError(
            f"t={t} is outside the proven interval [0, {limit}] for genus {g}"
        )
    return sum(
        gen_binomial(g - 1, k)
        * Fraction(factorial(g), factorial(k + 1))
        * t**k
        * (1 - t) ** (g - 1 - k)
        for k in range(g)
    )


def volume_hyperelliptic(g: int, d: int, t: int | Fraction) -> Fraction:
    """Volume of theta - t*x on C_d for a general hyperelliptic curve.

        vol = g!/(g-d)! * (1 - t/(g-d+1))^d        for 0 <= t <= g-d+1

    by the Zariski decomposition with positive part proportional to theta;
    the volume vanishes exactly at the endpoint t = g-d+1.
    """
    if not 2 <= d <= g:
        raise PreconditionError(f"hyperelliptic volume needs 2 <= d <= g (got g={g}, d={d})")
    t = as_rational(t)
    limit = g - d + 1
    if not 0 <= t <= limit:
        raise OutOfProvenDomainError(
            f"t={t} is outside the proven interval [0, {limit}] for (g, d)=({g}, {d})"
        )
    return Fraction(factorial(g), factorial(g - d)) * (1 - Fraction(t, limit)) ** d


def volume_integrality(g: int) -> tuple[Fraction, bool]:
    """The hyperelliptic volume g!/2^(g-1) of theta - x on C_(g-1), and whether
    it is an integer.

    By Legendre's formula the 2-adic valuation of g! is g minus the binary
    digit sum of g, so the value is an integer (necessarily odd) precisely when
    g is a power of 2.
    """
    if g < 2:
        raise PreconditionError(f"integrality check needs g >= 2 (got {g})")
    value = Fraction(factorial(g), 2 ** (g - 1))
    return value, value.denominator == 1

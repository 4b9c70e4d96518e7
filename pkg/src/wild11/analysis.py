"""Interpretation of a Frobenius characteristic polynomial on V.

Three exact invariants are extracted from the degree-20 polynomial mu_p:

* the unit-normalized polynomial mu~(T) = mu_p(p T) / p^20, whose roots all
  have absolute value 1;
* an upper bound for the Picard number: 2 (fiber and zero-section classes)
  plus the number of roots of mu_p of the form p * (root of unity), counted
  with multiplicity through cyclotomic divisibility of mu~;
* the formal-Brauer height, read off the p-adic Newton polygon: with s_min
  the smallest root valuation, height is 1/(1 - s_min), and s_min = 1 means
  infinite height (Artin-supersingular).

The Picard bound is exactly that, a bound; equality would follow from the
Tate conjecture for elliptic K3 surfaces, which this code never assumes.
Likewise, the finer eigenspace-dimension argument restricting the Picard
number of these families to {2, 12, 22} is not recomputed here; only the
root-of-unity count enters.

Everything that gates pass/fail is exact rational arithmetic.  The one
floating-point computation, the advisory check that the roots of mu~ lie
on the unit circle, is reported but never used as a gate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycNum
from .equivariant import CharPolyResult, expand_eigenspace_product
from .errors import InconsistencyError
from .polynomials import (
    IntPoly,
    NewtonPolygon,
    RatPoly,
    cyclotomic_poly,
    divides_with_multiplicity,
    euler_phi,
    newton_polygon,
    palindrome_sign,
)

V_DIMENSION = 20
B2 = 22  # second Betti number of a K3 surface

INFINITE_HEIGHT = math.inf

# k with euler_phi(k) <= 20 all lie below 67; scan a safe superset.
_CYCLOTOMIC_RANGE = range(1, 101)

UNIT_CIRCLE_TOLERANCE = 1e-9


def normalize(mu: IntPoly, p: int) -> RatPoly:
    """mu~(T) = mu(p T) / p^20; requires mu monic of degree 20."""
    if mu.degree != V_DIMENSION or not mu.is_monic():
        raise ValueError(f"expected a monic degree-{V_DIMENSION} polynomial, got {mu!r}")
    return RatPoly([Fraction(c * p**j, p**V_DIMENSION) for j, c in enumerate(mu.coeffs)])


def denormalize(mu_tilde: RatPoly, p: int) -> IntPoly:
    """Inverse of :func:`normalize`: p^20 * mu~(T / p)."""
    if mu_tilde.degree != V_DIMENSION:
        raise ValueError(f"expected degree {V_DIMENSION}, got {mu_tilde.degree}")
    coeffs = [c * p ** (V_DIMENSION - j) for j, c in enumerate(mu_tilde.coeffs)]
    out = RatPoly(coeffs).to_int()
    if out is None:
        raise ValueError("denormalization did not yield integer coefficients")
    return out


def picard_upper_bound(mu: IntPoly, p: int) -> int:
    """2 + (number of zeroes of mu of the shape p * root of unity).

    Zeroes are counted with multiplicity via cyclotomic divisibility of mu~.
    """
    mu_tilde = normalize(mu, p)
    count = 0
    for k in _CYCLOTOMIC_RANGE:
        phi = euler_phi(k)
        if phi > V_DIMENSION:
            continue
        m = divides_with_multiplicity(cyclotomic_poly(k).to_rat(), mu_tilde)
        count += m * phi
    return 2 + count


def height_from_newton(mu: IntPoly, p: int) -> int | float:
    """Formal-Brauer height from the p-adic Newton polygon of mu.

    Returns an integer in [1, 10], or INFINITE_HEIGHT when the smallest root
    valuation is 1 (the supersingular case)."""
    if mu.degree != V_DIMENSION:
        raise ValueError(f"expected degree {V_DIMENSION}, got {mu.degree}")
    polygon = newton_polygon(mu, p)
    s_min = polygon.min_valuation()
    if s_min == 1:
        return INFINITE_HEIGHT
    h = 1 / (1 - Fraction(s_min))
    if h.denominator != 1 or not 1 <= h <= 10:
        raise InconsistencyError(
            f"minimal slope {s_min} gives height {h}, outside {{1, ..., 10, infinity}}"
        )
    return int(h)


def _unit_circle_check(mu_tilde: RatPoly) -> bool:
    """Advisory floating-point check: all roots of mu~ on |z| = 1."""
    import numpy as np

    coeffs = [float(c) for c in reversed(mu_tilde.coeffs)]
    roots = np.roots(coeffs)
    return bool(np.all(np.abs(np.abs(roots) - 1.0) < UNIT_CIRCLE_TOLERANCE))


def structural_checks(result: CharPolyResult, kind: str, p: int) -> dict[str, bool | None]:
    """Named boolean verdicts; reported, never thrown.

    gamma_parity is None for models without the extra order-4 symmetry.
    """
    mu = result.mu
    mu_tilde = normalize(mu, p)

    checks: dict[str, bool | None] = {}
    checks["functional_equation"] = palindrome_sign(mu_tilde) in (1, -1)

    if kind == "gamma":
        even = all(c == 0 for j, c in enumerate(mu.coeffs) if j % 2 == 1)
        parity = even
        if even:
            # mu_p(T) = nu(T^2); the level-p^2 polynomial must equal nu(T)^2
            nu = IntPoly(mu.coeffs[0::2])
            level2_pairs = [(a2, b * b) for (_, b), a2 in zip(result.per_eigenspace, result.traces_p2.a)]
            try:
                mu_level2 = expand_eigenspace_product(level2_pairs)
            except InconsistencyError:
                parity = False
            else:
                parity = mu_level2 == nu * nu
        checks["gamma_parity"] = parity
    else:
        checks["gamma_parity"] = None

    recomputed: IntPoly | None
    try:
        recomputed = expand_eigenspace_product(result.per_eigenspace)
    except InconsistencyError:
        recomputed = None
    checks["integral_coefficients"] = recomputed == mu

    det = CycNum((1,))
    for _, b in result.per_eigenspace:
        det = det * b
    det_value = det.as_rational()
    checks["determinant"] = det_value is not None and abs(det_value) == Fraction(p) ** V_DIMENSION

    checks["unit_circle"] = _unit_circle_check(mu_tilde)
    return checks


@dataclass(frozen=True)
class AnalysisReport:
    """Exact invariants of one surface: mu~, Picard bounds, height, checks."""

    mu_tilde: RatPoly
    picard_upper: int
    picard_lower: int
    height: int | float
    checks: dict[str, bool | None]
    newton: NewtonPolygon

    def __post_init__(self):
        if not 2 <= self.picard_upper <= B2:
            raise InconsistencyError(f"Picard bound {self.picard_upper} outside [2, {B2}]")
        if self.picard_lower > self.picard_upper:
            raise InconsistencyError(
                f"Picard bounds inverted: {self.picard_lower} > {self.picard_upper}"
            )
        if self.height != INFINITE_HEIGHT and self.picard_upper > B2 - 2 * self.height:
            raise InconsistencyError(
                f"Picard bound {self.picard_upper} inconsistent with height {self.height}"
            )


def analyze_charpoly(result: CharPolyResult, kind: str) -> AnalysisReport:
    """Run the full interpretation pipeline on an assembled mu_p."""
    p = result.p
    return AnalysisReport(
        mu_tilde=normalize(result.mu, p),
        picard_upper=picard_upper_bound(result.mu, p),
        picard_lower=2,
        height=height_from_newton(result.mu, p),
        checks=structural_checks(result, kind, p),
        newton=newton_polygon(result.mu, p),
    )

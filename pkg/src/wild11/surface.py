"""Weierstrass models of the three elliptic K3 families and exact point counts.

The families, all fibered over the t-line:

* epsilon kind:  y^2 = x^3 + e*x^2 + t^11 - t
* gamma kind:    y^2 = x^3 + g*x  + t^11 - t
* uniform kind:  y^2 + x*y = x^3 + t^11

Models carry a second chart at s = 1/t with x = X/s^4, y = Y/s^6 and the
equation rescaled by s^12, the K3 normalization; the coefficient transform
is a_i(t) -> s^(2i) * a_i(1/s), which stays polynomial exactly because of
the K3 degree bounds deg a_i <= 2i.

Point counting is the independent oracle for everything downstream, so it
is deliberately naive: enumerate x, add 1 + chi(cubic in x) points per
fiber (odd characteristic; the substitution y -> y - (a1*x + a3)/2 removes
the crossed terms first).  Counts are exact integers, and identical no
matter how the enumeration is partitioned.

Counting a Weierstrass model only counts the smooth K3 correctly when all
singular fibers are irreducible (nodal or cuspidal cubics); surface_count
verifies that from the discriminant and refuses anything worse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapabilityError, ReducibleFiberError
from .ffield import FieldElement, FieldSpec
from .fppoly import FpPoly, factor

KINDS = ("epsilon", "gamma", "uniform")

# degree bounds deg a_i <= 2i that keep the fibration K3 (and the s-chart polynomial)
_DEGREE_BOUNDS = {"a1": 2, "a2": 4, "a3": 6, "a4": 8, "a6": 12}


class _AtInfinity:
    """Sentinel for the place t = infinity (s = 0 in the second chart)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _AtInfinity()


@dataclass(frozen=True)
class WeierstrassModel:
    p: int
    kind: str
    param: int | None
    a1: FpPoly
    a2: FpPoly
    a3: FpPoly
    a4: FpPoly
    a6: FpPoly
    infinity_chart: tuple[FpPoly, FpPoly, FpPoly, FpPoly, FpPoly]

    def __post_init__(self):
        for name, bound in _DEGREE_BOUNDS.items():
            poly: FpPoly = getattr(self, name)
            if poly.degree > bound:
                raise ValueError(f"deg {name} = {poly.degree} exceeds the K3 bound {bound}")

    def coefficients(self, chart: str = "affine") -> tuple[FpPoly, FpPoly, FpPoly, FpPoly, FpPoly]:
        if chart == "affine":
            return (self.a1, self.a2, self.a3, self.a4, self.a6)
        if chart == "infinity":
            return self.infinity_chart
        raise ValueError(f"unknown chart {chart!r}")


@dataclass(frozen=True)
class FiberPlace:
    """A closed point of the t-line where the discriminant vanishes.

    `location` is an int residue for a rational point, an irreducible FpPoly
    for a closed point of higher degree, or INFINITY.  `vc4` is None when c4
    vanishes identically (the j = 0 families).
    """

    location: object
    degree: int
    vdelta: int
    vc4: int | None

    def location_str(self) -> str:
        if self.location is INFINITY:
            return "infinity"
        if isinstance(self.location, int):
            return f"t={self.location}"
        from .polynomials import poly_str

        return poly_str(self.location.coeffs, "t")


def make_model(kind: str, param: int | None, p: int) -> WeierstrassModel:
    """Build one of the three families over F_p; param is reduced mod p."""
    from .ffield import is_prime

    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    zero = FpPoly(p)
    one = FpPoly.constant(p, 1)
    # t^11 - t and t^11
    t11_minus_t = FpPoly(p, (0, -1) + (0,) * 9 + (1,))
    t11 = FpPoly.monomial(p, 11)
    if kind == "uniform":
        param = None
        a1, a2, a3, a4, a6 = one, zero, zero, zero, t11
    else:
        if param is None:
            raise ValueError(f"kind {kind!r} requires a parameter in F_{p}")
        param = param % p
        if kind == "epsilon":
            a1, a2, a3, a4, a6 = zero, FpPoly.constant(p, param), zero, zero, t11_minus_t
        else:
            a1, a2, a3, a4, a6 = zero, zero, zero, FpPoly.constant(p, param), t11_minus_t
    chart = tuple(poly.reverse(2 * i) for poly, i in ((a1, 1), (a2, 2), (a3, 3), (a4, 4), (a6, 6)))
    return WeierstrassModel(
        p=p, kind=kind, param=param, a1=a1, a2=a2, a3=a3, a4=a4, a6=a6, infinity_chart=chart
    )


def _c4_delta_from(a1: FpPoly, a2: FpPoly, a3: FpPoly, a4: FpPoly, a6: FpPoly):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4
    c4 = b2 * b2 - 24 * b4
    delta = -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6)
    return c4, delta


def c4_delta(model: WeierstrassModel) -> tuple[FpPoly, FpPoly]:
    """Standard covariants c4 and Delta of the affine chart, in F_p[t]."""
    return _c4_delta_from(*model.coefficients("affine"))


def c4_delta_infinity(model: WeierstrassModel) -> tuple[FpPoly, FpPoly]:
    """c4 and Delta of the s = 1/t chart, in F_p[s]."""
    return _c4_delta_from(*model.coefficients("infinity"))


def _valuation_at_zero(poly: FpPoly) -> int:
    for i, c in enumerate(poly.coeffs):
        if c:
            return i
    raise ValueError("valuation at zero of the zero polynomial")


def singular_places(model: WeierstrassModel) -> list[FiberPlace]:
    """All places of P^1 where Delta vanishes, with (v(Delta), v(c4)) data.

    Closed points of degree > 1 appear once, carrying their degree."""
    c4, delta = c4_delta(model)
    if not delta:
        raise ValueError("discriminant vanishes identically; the model is not elliptic")
    places = []
    c4_inf, delta_inf = c4_delta_infinity(model)
    v_inf = _valuation_at_zero(delta_inf)
    if v_inf > 0:
        vc4_inf = _valuation_at_zero(c4_inf) if c4_inf else None
        places.append(FiberPlace(INFINITY, 1, v_inf, vc4_inf))
    for g, mult in factor(delta):
        vc4 = c4.multiplicity_of(g) if c4 else None
        location: object = (-g.coeffs[0]) % model.p if g.degree == 1 else g
        places.append(FiberPlace(location, g.degree, mult, vc4))
    return places


def _is_irreducible_fiber(place: FiberPlace) -> bool:
    # v(Delta) = 1: nodal cubic; v(Delta) = 2 with additive reduction: cuspidal cubic
    if place.vdelta == 1:
        return True
    return place.vdelta == 2 and (place.vc4 is None or place.vc4 >= 1)


def _completed_cubic(model: WeierstrassModel, chart: str) -> tuple[FpPoly, FpPoly, FpPoly]:
    """(A2, A4, A6) with y^2 = x^3 + A2 x^2 + A4 x + A6 after removing a1, a3 (odd p)."""
    p = model.p
    a1, a2, a3, a4, a6 = model.coefficients(chart)
    inv2 = pow(2, p - 2, p)
    inv4 = inv2 * inv2 % p
    A2 = a2 + a1 * a1 * inv4
    A4 = a4 + a1 * a3 * inv2
    A6 = a6 + a3 * a3 * inv4
    return A2, A4, A6


@lru_cache(maxsize=None)
def _cubic_linear_part(spec: FieldSpec, a2c: tuple, a4c: tuple) -> tuple:
    """x^3 + a2*x^2 + a4*x for every x, as coordinate tuples in index order."""
    mul, add = spec.mul, spec.add
    use_a2 = any(a2c)
    use_a4 = any(a4c)
    out = []
    for i in range(spec.q):
        x = spec.coords_at(i)
        x2 = mul(x, x)
        w = mul(x2, x)
        if use_a2:
            w = add(w, mul(a2c, x2))
        if use_a4:
            w = add(w, mul(a4c, x))
        out.append(w)
    return tuple(out)


@lru_cache(maxsize=None)
def _count_cubic_points(spec: FieldSpec, a2c: tuple, a4c: tuple, a6c: tuple) -> int:
    """Projective points of y^2 = x^3 + a2 x^2 + a4 x + a6 over F_q, odd q."""
    chi = spec.chi_table()
    add, index_of = spec.add, spec.index_of
    total = 0
    for w in _cubic_linear_part(spec, a2c, a4c):
        total += chi[index_of(add(w, a6c))]
    return 1 + spec.q + total


def _count_fiber_char2(spec: FieldSpec, coeffs: tuple[FieldElement, ...]) -> int:
    if spec.q > 1 << 10:
        raise CapabilityError("brute-force characteristic-2 counting capped at q = 1024")
    a1, a2, a3, a4, a6 = coeffs
    count = 1
    for x in spec.elements():
        rhs = ((x + a2) * x + a4) * x + a6
        for y in spec.elements():
            if (y + a1 * x + a3) * y == rhs:
                count += 1
    return count


def fiber_count(model: WeierstrassModel, t0, spec: FieldSpec) -> int:
    """Projective F_q-points of the (possibly singular) Weierstrass cubic at t0.

    t0 is a FieldElement of `spec`, or INFINITY for the fiber at s = 0."""
    if spec.p != model.p:
        raise ValueError(f"field characteristic {spec.p} differs from model characteristic {model.p}")
    if t0 is INFINITY:
        chart = "infinity"
        t0 = spec.zero()
    else:
        if not isinstance(t0, FieldElement) or t0.spec != spec:
            raise ValueError("t0 must be a FieldElement of the given field (or INFINITY)")
        chart = "affine"
    if model.p == 2:
        coeffs = tuple(c.evaluate(t0) for c in model.coefficients(chart))
        return _count_fiber_char2(spec, coeffs)
    A2, A4, A6 = _completed_cubic(model, chart)
    return _count_cubic_points(
        spec, A2.evaluate(t0).coords, A4.evaluate(t0).coords, A6.evaluate(t0).coords
    )


def surface_count(model: WeierstrassModel, spec: FieldSpec) -> int:
    """#X(F_q): sum of fiber counts over P^1(F_q).

    Valid as the point count of the smooth K3 only when every singular fiber
    is irreducible; refuses with ReducibleFiberError otherwise."""
    if spec.p != model.p:
        raise ValueError(f"field characteristic {spec.p} differs from model characteristic {model.p}")
    if model.p == 2:
        raise CapabilityError("surface counting requires odd characteristic")
    for place in singular_places(model):
        if not _is_irreducible_fiber(place):
            raise ReducibleFiberError(
                f"fiber at {place.location_str()} has v(Delta)={place.vdelta}, "
                f"v(c4)={place.vc4}; the Weierstrass count would miss components"
            )
    total = fiber_count(model, INFINITY, spec)
    for t0 in spec.elements():
        total += fiber_count(model, t0, spec)
    return total

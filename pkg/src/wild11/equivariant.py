"""Equivariant fixed-point counting and the Frobenius characteristic polynomial.

The order-11 automorphism t -> t + 1 of the epsilon/gamma families commutes
with Frobenius, which makes the twisted fixed loci Fix(phi^n . Frob_q)
computable entirely over F_q, for q = p or p^2 with p = 11:

* The zero section and the fiber at infinity contribute 2q + 1 points to
  every fixed locus (q + 1 each, overlapping in one point).
* An affine point needs x, y in F_q; the curve equation then pins down
  c = t^p - t = y^2 - x^3 - e*x^2 (resp. - g*x) in F_q, and each of the
  p fibers above the roots of t^p - t = c contains one fixed point of the
  same twist n, where n = -Tr_{F_q/F_p}(c) mod 11 (a fixed point satisfies
  t^q + n = t, and t^q - t equals the trace of c).

So each pair (x, y) in F_q^2 adds exactly 11 to exactly one of the eleven
buckets.  Lefschetz then turns bucket sizes into integer traces,
tr_n = Fix_n - 1 - q^2, and the inverse DFT over Q(zeta_11) recovers the
per-eigenspace traces a_i(q).

With both field levels in hand, each eigenspace V_i carries Frobenius
eigenvalues alpha, beta with alpha + beta = a_i(p) and alpha^2 + beta^2 =
a_i(p^2), so its characteristic polynomial is T^2 - a_i(p) T + b_i with
b_i = (a_i(p)^2 - a_i(p^2)) / 2, a division that must be exact in Z[zeta].
The product over the ten eigenspaces must collapse to a degree-20
polynomial with plain integer coefficients; both conditions are enforced
as hard gates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, EigenTraces
from .errors import CapabilityError, InconsistencyError
from .ffield import FieldSpec
from .polynomials import IntPoly
from .surface import WeierstrassModel

AUTOMORPHISM_ORDER = 11


@dataclass(frozen=True)
class FixTally:
    """Sizes of the eleven twisted fixed loci over F_q.

    Plain data on purpose: the bucket invariants are guaranteed by
    fixed_locus_tally but deliberately not re-enforced here, so corrupted
    tallies can be constructed to exercise the downstream consistency gates.
    """

    q: int
    fix: tuple[int, ...]

    def __post_init__(self):
        if len(self.fix) != AUTOMORPHISM_ORDER:
            raise ValueError(f"expected {AUTOMORPHISM_ORDER} buckets, got {len(self.fix)}")


def fixed_locus_tally(model: WeierstrassModel, spec: FieldSpec) -> FixTally:
    """Distribute all (x, y) in F_q^2 over the eleven twisted fixed loci."""
    if model.kind not in ("epsilon", "gamma"):
        raise CapabilityError(
            f"{model.kind!r} model has no order-11 translation automorphism in this chart"
        )
    if model.p != AUTOMORPHISM_ORDER:
        raise CapabilityError(
            f"the translation t -> t+1 has order 11 only in characteristic 11, not {model.p}"
        )
    if spec.p != model.p:
        raise ValueError("field does not extend the model's prime field")
    if spec.r > 2:
        raise CapabilityError(f"tally supports q = p and q = p^2 only, got r = {spec.r}")
    q = spec.q
    buckets = [2 * q + 1] * AUTOMORPHISM_ORDER
    neg_trace = spec.neg_trace_table()
    mul, add, sub, smul, index_of = spec.mul, spec.add, spec.sub, spec.smul, spec.index_of
    coords = [spec.coords_at(i) for i in range(q)]
    y_squares = [mul(c, c) for c in coords]
    param = model.param or 0
    use_x_square = model.kind == "epsilon"
    for x in coords:
        x2 = mul(x, x)
        w = mul(x2, x)
        if param:
            w = add(w, smul(param, x2 if use_x_square else x))
        for ysq in y_squares:
            c = sub(ysq, w)
            buckets[neg_trace[index_of(c)]] += AUTOMORPHISM_ORDER
    return FixTally(q=q, fix=tuple(buckets))


def traces_from_tally(tally: FixTally) -> list[int]:
    """Lefschetz: tr_n = Fix_n - 1 - q^2."""
    shift = 1 + tally.q**2
    return [f - shift for f in tally.fix]


@dataclass(frozen=True)
class CharPolyResult:
    """Characteristic polynomial of Frobenius on the 20-dimensional part V.

    `mu` is the degree-20 integer polynomial, `mu_full` its degree-22
    completion (T - p)^2 * mu for the whole second cohomology, and
    `per_eigenspace` holds the quadratic data (a_i(p), b_i) per eigenspace.
    The eigenspace traces at both field levels are kept for the structural
    checks.

    Per-eigenspace data is canonical only up to the choice of which
    primitive 11th root of unity is "zeta": a different choice permutes the
    eigenspace indices and leaves mu itself unchanged.
    """

    p: int
    mu: IntPoly
    mu_full: IntPoly
    per_eigenspace: tuple[tuple[CycNum, CycNum], ...]
    traces_p: EigenTraces
    traces_p2: EigenTraces


def _exact_half(x: CycNum, what: str) -> CycNum:
    if not x.is_integral():
        raise InconsistencyError(f"{what} is not integral: {x!r}")
    if any(c % 2 for c in x.coords):
        raise InconsistencyError(f"{what} is not divisible by 2 in Z[zeta]: {x!r}")
    return CycNum(tuple(c // 2 for c in x.coords))


def expand_eigenspace_product(pairs) -> IntPoly:
    """Expand prod_i (T^2 - a_i T + b_i) over Q(zeta) and demand Z coefficients."""
    poly: list[CycNum] = [CycNum((1,))]
    for a, b in pairs:
        new = [CycNum() for _ in range(len(poly) + 2)]
        for i, c in enumerate(poly):
            new[i] = new[i] + c * b
            new[i + 1] = new[i + 1] + c * (-a)
            new[i + 2] = new[i + 2] + c
        poly = new
    coeffs = []
    for j, c in enumerate(poly):
        value = c.as_rational()
        if value is None:
            raise InconsistencyError(f"coefficient of T^{j} is irrational: {c!r}")
        if value.denominator != 1:
            raise InconsistencyError(f"coefficient of T^{j} is not an integer: {value}")
        coeffs.append(int(value))
    return IntPoly(coeffs)


def assemble_charpoly(E_p: EigenTraces, E_p2: EigenTraces, p: int) -> CharPolyResult:
    """Combine eigenspace traces at q = p and q = p^2 into the full mu_p."""
    if E_p.q != p:
        raise ValueError(f"first trace set is over q = {E_p.q}, expected {p}")
    if E_p2.q != p * p:
        raise ValueError(f"second trace set is over q = {E_p2.q}, expected {p * p}")
    pairs = []
    for i, (a, a_sq) in enumerate(zip(E_p.a, E_p2.a), start=1):
        b = _exact_half(a * a - a_sq, f"2 * det contribution on eigenspace {i}")
        pairs.append((a, b))
    mu = expand_eigenspace_product(pairs)
    mu_full = mu * IntPoly((p * p, -2 * p, 1))
    return CharPolyResult(
        p=p,
        mu=mu,
        mu_full=mu_full,
        per_eigenspace=tuple(pairs),
        traces_p=E_p,
        traces_p2=E_p2,
    )

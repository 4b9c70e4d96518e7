from fractions import Fraction

import pytest

from wild11 import (
    CycNum,
    EigenTraces,
    INFINITE_HEIGHT,
    InconsistencyError,
    IntPoly,
    RatPoly,
    analyze_charpoly,
    denormalize,
    height_from_newton,
    normalize,
    picard_upper_bound,
    structural_checks,
)
from wild11.equivariant import CharPolyResult
from reference_values import (
    MU_TILDE_EPSILON_SQUARE,
    MU_TILDE_GAMMA_SQUARE,
    NONSQUARES_MOD_11,
    SQUARES_MOD_11,
)


def _power(base: IntPoly, n: int) -> IntPoly:
    out = IntPoly([1])
    for _ in range(n):
        out = out * base
    return out


def test_normalize_trivial():
    p = 11
    mu = _power(IntPoly([p * p, 0, 1]), 10)  # (T^2 + p^2)^10
    assert normalize(mu, p) == RatPoly(_power(IntPoly([1, 0, 1]), 10).coeffs)


def test_normalize_requires_monic_degree_20():
    with pytest.raises(ValueError):
        normalize(IntPoly([1, 0, 1]), 11)
    with pytest.raises(ValueError):
        normalize(IntPoly([0] * 20 + [2]), 11)


def test_normalize_denormalize_round_trip(pipeline):
    *_, result = pipeline("epsilon", 4)
    assert denormalize(normalize(result.mu, 11), 11) == result.mu


def test_normalize_hits_expected_rows(analyzed):
    assert analyzed("epsilon", 1).mu_tilde.coeffs == tuple(
        Fraction(c) for c in MU_TILDE_EPSILON_SQUARE
    )
    assert analyzed("gamma", 1).mu_tilde.coeffs == tuple(
        Fraction(c) for c in MU_TILDE_GAMMA_SQUARE
    )


def test_picard_bound_trivial_supersingular_shape():
    p = 11
    mu = _power(IntPoly([p * p, 0, 1]), 10)
    assert picard_upper_bound(mu, p) == 22  # Phi_4 divides mu~ ten times


def test_picard_bound_on_computed_surfaces(analyzed):
    for eps in range(1, 11):
        assert analyzed("epsilon", eps).picard_upper == 2
    for gamma in range(1, 11):
        assert analyzed("gamma", gamma).picard_upper == 2
    assert analyzed("epsilon", 0).picard_upper == 22


def test_height_examples(analyzed):
    assert analyzed("epsilon", 1).height == 10
    assert analyzed("gamma", 2).height == 10
    assert analyzed("epsilon", 0).height == INFINITE_HEIGHT


def test_height_ordinary_case():
    p = 11
    mu = IntPoly([p, -1, 1]) * _power(IntPoly([p * p, 0, 1]), 9)
    assert height_from_newton(mu, p) == 1  # a p-adic unit root


def test_height_rejects_non_integral_value():
    p = 11
    mu = _power(IntPoly([p * p, 0, 0, 0, 0, 1]), 4)  # slopes 2/5 -> "height" 5/3
    with pytest.raises(InconsistencyError):
        height_from_newton(mu, p)


def test_newton_slopes_on_surfaces(analyzed):
    report = analyzed("epsilon", 5)
    assert report.newton.slopes == ((Fraction(9, 10), 10), (Fraction(11, 10), 10))
    degenerate = analyzed("epsilon", 0)
    assert degenerate.newton.slopes == ((Fraction(1), 20),)


def test_structural_checks_gamma(pipeline):
    *_, result = pipeline("gamma", 1)
    checks = structural_checks(result, "gamma", 11)
    assert checks == {
        "functional_equation": True,
        "gamma_parity": True,
        "integral_coefficients": True,
        "determinant": True,
        "unit_circle": True,
    }


def test_structural_checks_epsilon(pipeline):
    *_, result = pipeline("epsilon", 1)
    checks = structural_checks(result, "epsilon", 11)
    assert checks["gamma_parity"] is None
    assert all(checks[k] for k in ("functional_equation", "integral_coefficients", "determinant", "unit_circle"))


def test_structural_checks_negative_control():
    # hand-built result whose eigenspace determinants multiply to 1, not p^20
    p = 11
    zero, one = CycNum(), CycNum((1,))
    pairs = tuple((zero, one) for _ in range(10))
    mu = _power(IntPoly([1, 0, 1]), 10)  # (T^2 + 1)^10, consistent with the pairs
    fake = CharPolyResult(
        p=p,
        mu=mu,
        mu_full=mu * IntPoly([p * p, -2 * p, 1]),
        per_eigenspace=pairs,
        traces_p=EigenTraces(q=p, a=(zero,) * 10),
        traces_p2=EigenTraces(q=p * p, a=(CycNum((-2,)),) * 10),
    )
    checks = structural_checks(fake, "epsilon", p)
    assert checks["determinant"] is False
    assert checks["integral_coefficients"] is True  # the product really is mu


def test_gamma_parity_fails_on_epsilon_polynomial(pipeline):
    # the epsilon-family polynomial has odd terms, so the parity check,
    # if it were applied, must come out false
    *_, result = pipeline("epsilon", 1)
    checks = structural_checks(result, "gamma", 11)
    assert checks["gamma_parity"] is False


def test_unit_circle_advisory_negative():
    from wild11.analysis import _unit_circle_check

    p = 11
    off = IntPoly([1, 1]) * IntPoly([p * p * p, 1]) * _power(IntPoly([p * p, 0, 1]), 9)
    # roots -1 and -p^3: after normalization one root has modulus p^2 != 1
    assert _unit_circle_check(normalize(off, p)) is False


def test_analyze_charpoly_bundle(pipeline):
    *_, result = pipeline("gamma", 6)
    report = analyze_charpoly(result, "gamma")
    assert report.picard_lower == 2
    assert report.picard_upper == 2
    assert report.height == 10
    assert report.mu_tilde.coeffs[0] == 1


@pytest.mark.parametrize("kind,params", [("epsilon", SQUARES_MOD_11), ("gamma", NONSQUARES_MOD_11)])
def test_class_function_property(analyzed, kind, params):
    reports = [analyzed(kind, v) for v in params]
    reference = reports[0].mu_tilde
    assert all(r.mu_tilde == reference for r in reports)

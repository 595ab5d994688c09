import pytest

from biconfluent.HeunParameters import HeunParameters
from biconfluent.Polynomial import Polynomial
from biconfluent.Recurrence import (
    FULL_VARIABLES,
    Variant,
    q_polynomial,
    q_polynomial_coefficients,
    recurrence_coeffs,
    termination_value,
)

q, delta, epsilon, alpha = (Polynomial.variable(v, FULL_VARIABLES) for v in FULL_VARIABLES)


def test__q_polynomial__low_orders() -> None:
    assert q_polynomial(0) == q
    assert q_polynomial(1) == q * q - delta * q + alpha
    assert q_polynomial(2) == (
        q * q * q - delta * q * q * 3 + (delta * delta + epsilon + alpha * 2) * q * 2 - alpha * delta * 4
    )
    assert q_polynomial(3) == (
        q * q * q * q
        - q * q * q * delta * 6
        + q * q * (alpha * 10 + delta * delta * 11 + epsilon * 10)
        - q * delta * (alpha * 5 + delta * delta + epsilon * 3) * 6
        + alpha * (alpha + delta * delta * 2 + epsilon * 2) * 9
    )


def test__q_polynomial__degree_grows_with_the_order() -> None:
    for N in range(8):
        assert q_polynomial(N).degree("q") == N + 1
        assert q_polynomial(N).coefficient((N + 1, 0, 0, 0)) == 1


def test__q_polynomial__zero_is_a_root_for_even_orders_without_quartic_term() -> None:
    for N in (0, 2, 4, 6, 8):
        poly = q_polynomial(N)
        assert all(exponents[1] > 0 for exponents in poly.terms if exponents[0] == 0)
    assert any(exponents[1] == 0 for exponents in q_polynomial(1).terms if exponents[0] == 0)


def test__q_polynomial__hermite_polynomial_branch() -> None:
    assert str(q_polynomial(0, Variant.NU0_ZERO)) == "q"
    assert str(q_polynomial(1, Variant.NU0_ZERO)) == "q^2 - q*delta + epsilon*gamma"
    with pytest.raises(ValueError):
        q_polynomial(-1)


def test__q_polynomial_coefficients__numeric_substitution() -> None:
    hp = HeunParameters(gamma=-2.0, delta=0.5, epsilon=-4.0, alpha=1.5, q=0.0)
    assert q_polynomial_coefficients(2, hp) == pytest.approx([-3.0, 2.0 * (0.25 - 4.0 + 3.0), -1.5, 1.0])


def test__recurrence_coeffs__special_cases() -> None:
    hp = HeunParameters(gamma=-2.0, delta=0.5, epsilon=-4.0, alpha=1.5, q=0.3)
    for variant in Variant:
        r, _, _ = recurrence_coeffs(hp, variant, 0, 1)
        assert r == 0.0

    reduced = HeunParameters(gamma=-3.0, delta=0.0, epsilon=-4.0, alpha=1.5, q=0.0)
    for n in range(6):
        _, q_n, _ = recurrence_coeffs(reduced, Variant.NU0_FULL, n, 1)
        assert q_n == 0.0

    terminating = HeunParameters(gamma=0.7, delta=0.5, epsilon=-4.0, alpha=12.0, q=0.3)
    _, _, p_n = recurrence_coeffs(terminating, Variant.NU0_ZERO, 3, 1)
    assert p_n == 0.0


def test__recurrence_coeffs__full_branch_values() -> None:
    hp = HeunParameters(gamma=-1.0, delta=2.0, epsilon=-8.0, alpha=4.0, q=0.5)
    r, q_n, p = recurrence_coeffs(hp, Variant.NU0_FULL, 2, -1)
    assert r == pytest.approx(2 * (-4.0 + 1.0 * -8.0) / 2.0)
    assert q_n == pytest.approx(0.5 + 2.0)
    assert p == pytest.approx(-8.0 / 4.0)


def test__recurrence_coeffs__errors() -> None:
    hp = HeunParameters(gamma=-1.0, delta=2.0, epsilon=8.0, alpha=4.0, q=0.5)
    with pytest.raises(HeunParameters.PositiveEpsilon):
        recurrence_coeffs(hp, Variant.NU0_FULL, 1, 1)
    with pytest.raises(ValueError):
        recurrence_coeffs(hp.with_q(0.0), Variant.NU0_FULL, -1, 1)


def test__termination_value__vanishes_at_roots() -> None:
    hp = HeunParameters(gamma=-1.0, delta=3.0, epsilon=-2.0, alpha=2.0, q=0.0)
    for root in (1.0, 2.0):
        value, scale = termination_value(hp.with_q(root), 1)
        assert abs(value) <= 1e-14 * scale
    value, scale = termination_value(hp.with_q(1.5), 1)
    assert value == pytest.approx(1.5**2 - 3.0 * 1.5 + 2.0)
    assert abs(value) > 1e-3 * scale

import math
from fractions import Fraction

import numpy as np
import pytest

from biconfluent.ContiguousSolution import EXACT_VARIABLES, ContiguousSolution, reduce_to_contiguous
from biconfluent.HermiteExpansion import HermiteExpansion, expansion_coefficients
from biconfluent.HeunParameters import HeunParameters
from biconfluent.Polynomial import Polynomial
from biconfluent.Recurrence import Variant, q_polynomial_coefficients
from biconfluent.SpecialFunctions import DEFAULT


def _real_roots(N: int, hp: HeunParameters) -> list[float]:
    roots = np.polynomial.polynomial.polyroots(q_polynomial_coefficients(N, hp))
    return sorted(float(r.real) for r in roots if abs(r.imag) <= 1e-12 * max(1.0, abs(r)))


def test__ContiguousSolution__first_order_form() -> None:
    for sign_s0 in (1, -1):
        hp = HeunParameters(gamma=-1.0, delta=0.7, epsilon=-6.0, alpha=2.5, q=1.9)
        contig = ContiguousSolution.from_parameters(hp, 1, sign_s0)
        s0 = hp.s0(sign_s0)
        assert contig.p0.coef == pytest.approx([-s0 * (hp.q - hp.delta)], rel=1e-12)
        assert contig.p1.coef == pytest.approx([hp.alpha], rel=1e-12)
        assert contig.index == pytest.approx(2.5 / 6.0)


def test__ContiguousSolution__second_order_form() -> None:
    for sign_s0 in (1, -1):
        hp = HeunParameters(gamma=-2.0, delta=-1.1, epsilon=-3.0, alpha=0.8, q=0.35)
        q, delta, epsilon, alpha = hp.q, hp.delta, hp.epsilon, hp.alpha
        contig = ContiguousSolution.from_parameters(hp, 2, sign_s0)
        s0 = hp.s0(sign_s0)
        assert contig.p0.degree() == 0
        assert contig.p1.degree() == 1
        assert contig.p0.coef == pytest.approx([-s0 * (q * q - 3 * q * delta + 2 * delta**2 + 2 * epsilon)], rel=1e-12)
        assert contig.p1.coef == pytest.approx([2 * alpha * (q - delta), 2 * alpha * epsilon], rel=1e-12)


def test__ContiguousSolution__third_order_form() -> None:
    hp = HeunParameters(gamma=-3.0, delta=0.4, epsilon=-5.0, alpha=1.7, q=-0.6)
    q, delta, epsilon, alpha = hp.q, hp.delta, hp.epsilon, hp.alpha
    contig = ContiguousSolution.from_parameters(hp, 3)
    s0 = hp.s0(1)
    quadratic = q * q - 3 * q * delta + 2 * delta**2
    expected_p0 = [
        -s0 * ((q - 3 * delta) * (quadratic + 10 * epsilon + alpha) + 12 * epsilon * delta),
        6 * s0 * epsilon * alpha,
    ]
    expected_p1 = [
        3 * alpha * (quadratic + 4 * epsilon + alpha),
        6 * alpha * (q - delta) * epsilon,
        6 * alpha * epsilon**2,
    ]
    assert contig.p0.degree() == 1
    assert contig.p1.degree() == 2
    assert contig.p0.coef == pytest.approx(expected_p0, rel=1e-12)
    assert contig.p1.coef == pytest.approx(expected_p1, rel=1e-12)


def test__ContiguousSolution__zero_order_is_a_single_hermite_function() -> None:
    hp = HeunParameters(gamma=0.0, delta=0.5, epsilon=-2.0, alpha=0.3, q=0.0)
    contig = reduce_to_contiguous(expansion_coefficients(hp, 0))
    assert list(contig.p0.coef) == [1.0]
    assert list(contig.p1.coef) == [0.0]
    assert contig.expansion_factor == 1.0
    assert contig.u(0.7) == DEFAULT.hermite_nu(hp.mu, hp.s0(1) * (0.7 + hp.xi_shift))


def test__ContiguousSolution__rejects_wrong_level() -> None:
    hp = HeunParameters(gamma=-1.5, delta=0.0, epsilon=-2.0, alpha=0.3, q=0.0)
    with pytest.raises(HermiteExpansion.LevelMismatch):
        ContiguousSolution.from_parameters(hp, 1)


def test__ContiguousSolution__builds_at_a_degenerate_pivot() -> None:
    hp = HeunParameters(gamma=-1.0, delta=0.9, epsilon=-2.0, alpha=0.0, q=0.0)
    with pytest.raises(HermiteExpansion.DegeneratePivot):
        expansion_coefficients(hp, 1)
    contig = ContiguousSolution.from_parameters(hp, 1)
    assert contig.p0.coef == pytest.approx([hp.s0(1) * hp.delta])
    assert contig.p1.coef == pytest.approx([0.0])


@pytest.mark.parametrize("N", [1, 2, 3])
def test__reduce_to_contiguous__agrees_with_direct_summation(N: int) -> None:
    base = HeunParameters(gamma=-float(N), delta=1.3, epsilon=-16.0, alpha=-5.3, q=0.0)
    roots = _real_roots(N, base)
    assert roots
    for q in roots:
        exp = expansion_coefficients(base.with_q(q), N)
        contig = reduce_to_contiguous(exp)
        assert contig.expansion_factor is not None
        for z in np.linspace(0.0, 5.0, 11):
            xi = exp.xi(z)
            terms = [c * DEFAULT.hermite_nu(exp.nu0 + n, xi) for n, c in enumerate(exp.coeffs)]
            pair = [
                float(contig.p0(z)) * DEFAULT.hermite_nu(contig.index, xi),
                float(contig.p1(z)) * DEFAULT.hermite_nu(contig.index - 1.0, xi),
            ]
            pair_scale = abs(contig.expansion_factor) * math.fsum(abs(p) for p in pair)
            scale = max(math.fsum(abs(t) for t in terms), pair_scale)
            assert abs(exp.u(z) - contig.expansion_factor * contig.u(z)) <= 1e-9 * scale


def test__reduce_to_contiguous__rejects_hermite_polynomial_branch() -> None:
    hp = HeunParameters(gamma=0.7, delta=1.0, epsilon=-4.0, alpha=0.0, q=0.0)
    exp = expansion_coefficients(hp, 0, variant=Variant.NU0_ZERO)
    with pytest.raises(ValueError):
        reduce_to_contiguous(exp)


def test__ContiguousSolution__exact_low_order_polynomials() -> None:
    q, delta, epsilon, alpha = Fraction(0.35), Fraction(-1.1), Fraction(-3.0), Fraction(0.8)
    for sign_s0 in (1, -1):
        first = ContiguousSolution.from_parameters(HeunParameters(-1.0, -1.1, -3.0, 0.8, 0.35), 1, sign_s0)
        assert first.exact == (
            Polynomial.of(EXACT_VARIABLES, {(0, 1): -(q - delta)}),
            Polynomial.constant(alpha, EXACT_VARIABLES),
        )
        second = ContiguousSolution.from_parameters(HeunParameters(-2.0, -1.1, -3.0, 0.8, 0.35), 2, sign_s0)
        assert second.exact == (
            Polynomial.of(EXACT_VARIABLES, {(0, 1): -(q * q - 3 * q * delta + 2 * delta**2 + 2 * epsilon)}),
            Polynomial.of(EXACT_VARIABLES, {(0, 0): 2 * alpha * (q - delta), (1, 0): 2 * alpha * epsilon}),
        )

import pytest

from biconfluent.HermiteExpansion import HermiteExpansion, SeriesPrefix, expansion_coefficients
from biconfluent.HeunParameters import HeunParameters
from biconfluent.Recurrence import Variant, recurrence_coeffs
from biconfluent.SpecialFunctions import DEFAULT


def test__expansion_coefficients__zero_order() -> None:
    hp = HeunParameters(gamma=0.0, delta=0.4, epsilon=-6.0, alpha=1.2, q=0.0)
    exp = expansion_coefficients(hp, 0)
    assert exp.coeffs == (1.0,)
    assert exp.nu0 == pytest.approx(0.2)
    assert exp.u(1.1) == DEFAULT.hermite_nu(exp.nu0, hp.s0(1) * (1.1 + hp.xi_shift))


def test__expansion_coefficients__first_order() -> None:
    hp = HeunParameters(gamma=-1.0, delta=3.0, epsilon=-2.0, alpha=2.0, q=2.0)
    exp = expansion_coefficients(hp, 1, sign_s0=-1)
    r1, _, _ = recurrence_coeffs(hp, Variant.NU0_FULL, 1, -1)
    _, q0, _ = recurrence_coeffs(hp, Variant.NU0_FULL, 0, -1)
    assert exp.coeffs[1] == pytest.approx(-q0 / r1)
    assert exp.xi_scale == -1.0
    assert exp.nu0 == pytest.approx(0.0)


def test__expansion_coefficients__terminates_at_every_root() -> None:
    hp = HeunParameters(gamma=-1.0, delta=3.0, epsilon=-2.0, alpha=2.0, q=0.0)
    for root in (1.0, 2.0):
        exp = expansion_coefficients(hp.with_q(root), 1)
        bound = 1e-8 * max(abs(c) for c in exp.coeffs)
        assert all(abs(c) <= bound for c in exp.continuation())


def test__expansion_coefficients__errors() -> None:
    hp = HeunParameters(gamma=-1.0, delta=3.0, epsilon=-2.0, alpha=2.0, q=1.5)
    with pytest.raises(HermiteExpansion.NonRoot) as excinfo:
        expansion_coefficients(hp, 1)
    assert excinfo.value.q == 1.5
    with pytest.raises(HermiteExpansion.LevelMismatch):
        expansion_coefficients(hp.with_q(1.0), 2)
    with pytest.raises(HermiteExpansion.DegeneratePivot) as pivot:
        expansion_coefficients(HeunParameters(gamma=-2.0, delta=0.0, epsilon=-4.0, alpha=4.0, q=0.0), 2)
    assert pivot.value.n == 1
    with pytest.raises(ValueError):
        expansion_coefficients(hp, -1)


def test__expansion_coefficients__hermite_polynomial_branch() -> None:
    # alpha = -N epsilon with N = 1; q^2 - q delta + gamma epsilon = 0 has the roots 3 and -2.
    hp = HeunParameters(gamma=1.5, delta=1.0, epsilon=-4.0, alpha=4.0, q=3.0)
    exp = expansion_coefficients(hp, 1, variant=Variant.NU0_ZERO)
    assert exp.nu0 == 0.0
    assert all(abs(c) <= 1e-12 for c in exp.continuation())
    xi = exp.xi(0.8)
    assert exp.u(0.8) == pytest.approx(1.0 + exp.coeffs[1] * 2.0 * xi, rel=1e-13)


def test__HermiteExpansion__power_series_prefix__leading_coefficient_is_the_origin_value() -> None:
    hp = HeunParameters(gamma=-1.0, delta=3.0, epsilon=-2.0, alpha=2.0, q=2.0)
    exp = expansion_coefficients(hp, 1)
    prefix = exp.power_series_prefix(3)
    assert prefix.coefficients[0] == pytest.approx(exp.u(0.0), rel=1e-12)
    assert prefix.vanishing_order() == 0


def test__HermiteExpansion__power_series_prefix__vanishes_below_the_order() -> None:
    # delta = q = 0 and alpha = -3 epsilon make u proportional to z^3.
    hp = HeunParameters(gamma=-2.0, delta=0.0, epsilon=-2.0, alpha=6.0, q=0.0)
    exp = expansion_coefficients(hp, 2)
    prefix = exp.power_series_prefix(5)
    assert prefix.vanishing_order() == 3
    assert prefix.truncated()[:3] == (0.0, 0.0, 0.0)
    assert abs(prefix.coefficients[4]) <= 1e-9 * prefix.scales[4]
    z = 0.3
    assert exp.u(z) == pytest.approx(prefix.coefficients[3] * z**3, rel=1e-9)


def test__SeriesPrefix__vanishing_order() -> None:
    prefix = SeriesPrefix(coefficients=(1e-14, 0.0, 2.0), scales=(1.0, 1.0, 2.0))
    assert prefix.vanishing_order() == 2
    assert prefix.truncated() == (0.0, 0.0, 2.0)

    exp = expansion_coefficients(HeunParameters(gamma=0.0, delta=0.4, epsilon=-6.0, alpha=1.2, q=0.0), 0)
    with pytest.raises(ValueError):
        exp.power_series_prefix(-1)

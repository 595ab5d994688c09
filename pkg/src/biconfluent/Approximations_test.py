import math

import pytest

from biconfluent.Approximations import AIRY_COEFFICIENT, Approximations
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.OriginConditions import origin_condition_n1

approx = Approximations()


def test__Approximations__approx_n0_is_exact_at_the_origin() -> None:
    for n in range(1, 8):
        assert approx.approx_n0(0.0, n) == 1.0 - 4.0 * n
    with pytest.raises(Approximations.DomainError):
        approx.approx_n0(0.0, 0)


def test__Approximations__negative_energy_curves() -> None:
    assert approx.approx_n1_neg(-4.0, 1) == 14.0
    assert approx.approx_n1_neg(-3.0, 2) == 5.0


def test__Approximations__positive_energy_curves_limits() -> None:
    for n in range(1, 6):
        start = -math.sqrt(2.0 * n - approx.a)
        assert approx.delta_correction(start, n) == pytest.approx(0.0, abs=1e-14)
        assert approx.approx_n1_pos(start, n) == pytest.approx(0.0, abs=1e-12)
        far = -60.0
        assert approx.delta_correction(far, n) == pytest.approx(2.0 - approx.a)
        assert approx.approx_n1_pos(far, n) == pytest.approx(far * far - 2.0 * (n - 1), abs=1e-9)


def test__Approximations__airy_region_condition() -> None:
    assert AIRY_COEFFICIENT == pytest.approx(0.0907, abs=5e-4)
    for n in range(1, 6):
        root = -math.sqrt(2.0 * n - 1.0 / 3.0)
        leading = approx.airy_region_condition(root) - approx.airy_correction(root)
        assert leading == pytest.approx(0.0, abs=1e-12)
        assert abs(approx.airy_correction(root)) == pytest.approx(AIRY_COEFFICIENT / abs(root) ** (4.0 / 3.0))
    with pytest.raises(Approximations.DomainError):
        approx.airy_region_condition(-0.5)
    with pytest.raises(Approximations.DomainError):
        approx.airy_correction(2.0)


def test__Approximations__airy_region_condition_brackets_the_origin_condition_roots() -> None:
    for n in (2, 3, 4):
        root = -math.sqrt(2.0 * n - 1.0 / 3.0)
        lower, upper = root - 0.3, root + 0.3
        assert approx.airy_region_condition(lower) * approx.airy_region_condition(upper) < 0
        residuals = [origin_condition_n1(DimensionlessPair(x, 0.0), 1) for x in (lower, upper)]
        assert residuals[0] * residuals[1] < 0


def test__Approximations__seed() -> None:
    assert approx.seed(0, 2, 0.0) == -7.0
    assert approx.seed(1, 1, -4.0, -1) == 14.0
    assert approx.seed(1, 1, -4.0, 1) == approx.approx_n1_pos(-4.0, 1)
    with pytest.raises(ValueError):
        approx.seed(1, 1, -4.0)
    with pytest.raises(ValueError):
        approx.seed(2, 1, -4.0, 1)

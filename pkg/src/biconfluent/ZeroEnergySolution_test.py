import numpy as np
import pytest

from biconfluent.HermiteExpansion import expansion_coefficients
from biconfluent.HeunParameters import HeunParameters
from biconfluent.SpecialFunctions import SpecialFunctions
from biconfluent.ZeroEnergySolution import zero_energy_reduced


def test__zero_energy_reduced__regular_solution_at_the_origin() -> None:
    hp = HeunParameters(gamma=0.37, delta=0.0, epsilon=-2.0, alpha=1.1, q=0.0)
    assert zero_energy_reduced(hp, 0.0) == 1.0


@pytest.mark.parametrize("N", [0, 2, 4])
def test__zero_energy_reduced__proportional_to_the_hermite_expansion(N: int) -> None:
    # alpha/(2 epsilon) > 0 keeps U free of zeros.
    hp = HeunParameters(gamma=-float(N), delta=0.0, epsilon=-1.0, alpha=-0.37, q=0.0)
    exp = expansion_coefficients(hp, N)
    ratios = [exp.u(z) / zero_energy_reduced(hp, z, 0.0, 1.0) for z in np.linspace(0.2, 3.0, 15)]
    assert max(ratios) - min(ratios) <= 1e-8 * abs(ratios[0])


def test__zero_energy_reduced__solves_the_equation_for_any_gamma() -> None:
    hp = HeunParameters(gamma=0.37, delta=0.0, epsilon=-2.0, alpha=1.1, q=0.0)
    h = 1e-3

    def u(z: float) -> float:
        return zero_energy_reduced(hp, z, 0.7, -0.3)

    for z in np.linspace(0.3, 2.5, 12):
        values = [u(z + k * h) for k in (-2, -1, 0, 1, 2)]
        first = (values[0] - 8.0 * values[1] + 8.0 * values[3] - values[4]) / (12.0 * h)
        second = (-values[0] + 16.0 * values[1] - 30.0 * values[2] + 16.0 * values[3] - values[4]) / (12.0 * h * h)
        terms = [z * second, (hp.gamma + hp.epsilon * z * z) * first, hp.alpha * z * values[2]]
        assert abs(sum(terms)) <= 1e-6 * max(abs(t) for t in terms)


def test__zero_energy_reduced__errors() -> None:
    with pytest.raises(ValueError):
        zero_energy_reduced(HeunParameters(gamma=0.0, delta=0.5, epsilon=-2.0, alpha=1.0, q=0.0), 1.0)
    with pytest.raises(HeunParameters.PositiveEpsilon):
        zero_energy_reduced(HeunParameters(gamma=0.0, delta=0.0, epsilon=2.0, alpha=1.0, q=0.0), 1.0)
    pole = HeunParameters(gamma=-3.0, delta=0.0, epsilon=-2.0, alpha=1.0, q=0.0)
    with pytest.raises(SpecialFunctions.PoleError):
        zero_energy_reduced(pole, 1.0)
    assert zero_energy_reduced(pole, 1.0, 0.0, 1.0) != 0.0

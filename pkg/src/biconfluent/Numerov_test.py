import math

import numpy as np
import pytest

from biconfluent.Numerov import Numerov, numerov_integrate, ode_residual, shoot_eigenvalue
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.RadialGrid import RadialGrid

# -psi'' + r^2 psi = E psi with psi(0) = 0 has the odd oscillator levels 3, 7, 11, ...
OSCILLATOR = Potential(v2=1.0)
CONSTS = PhysicalConstants()


def test__shoot_eigenvalue__odd_oscillator_levels() -> None:
    grid = RadialGrid(r_max=8.0, step=0.005)
    for expected in (3.0, 7.0, 11.0):
        energy = shoot_eigenvalue(OSCILLATOR, CONSTS, (expected - 1.0, expected + 1.0), grid)
        assert energy == pytest.approx(expected, abs=1e-6)


def test__shoot_eigenvalue__fourth_order_convergence() -> None:
    errors = []
    for step in (0.05, 0.025):
        grid = RadialGrid(r_max=8.0, step=step)
        errors.append(abs(shoot_eigenvalue(OSCILLATOR, CONSTS, (2.0, 4.0), grid, xtol=1e-14) - 3.0))
    assert 12.0 <= errors[0] / errors[1] <= 20.0


def test__shoot_eigenvalue__no_sign_change() -> None:
    with pytest.raises(Numerov.NoSignChange) as excinfo:
        shoot_eigenvalue(OSCILLATOR, CONSTS, (3.5, 6.5), RadialGrid(r_max=8.0, step=0.01))
    assert excinfo.value.bracket == (3.5, 6.5)


def test__numerov_integrate__node_count_counts_the_levels_below() -> None:
    grid = RadialGrid(r_max=8.0, step=0.01)
    for energy, nodes in ((2.0, 0), (5.0, 1), (9.0, 2), (13.0, 3)):
        assert numerov_integrate(OSCILLATOR, CONSTS, energy, grid).node_count == nodes


def test__numerov_integrate__rescales_growing_solutions() -> None:
    solution = numerov_integrate(OSCILLATOR, CONSTS, -50.0, RadialGrid(r_max=30.0, step=0.01))
    assert solution.log10_scale > 0
    assert np.all(np.isfinite(solution.psi))
    assert solution.node_count == 0
    assert solution.log_derivative > 0


def test__numerov_integrate__errors() -> None:
    with pytest.raises(Numerov.NotDecaying):
        numerov_integrate(OSCILLATOR, CONSTS, 100.0, RadialGrid(r_max=8.0, step=0.01))
    with pytest.raises(ValueError):
        numerov_integrate(Potential(v_m2=0.75, v2=1.0), CONSTS, 1.0, RadialGrid(r_max=8.0, step=0.01), left_power=2.0)


def test__Numerov__left_power_and_series() -> None:
    pot = Potential(v_m2=0.75, v2=1.0)
    assert Numerov().left_power(pot, CONSTS) == 1.5
    r = np.array([1e-3, 1e-2])
    values = Numerov().series(OSCILLATOR, CONSTS, 3.0, r)
    assert values == pytest.approx(r * np.exp(-0.5 * r * r), rel=1e-14)


def test__ode_residual__exact_and_wrong_energies() -> None:
    def ground(r: float) -> float:
        return r * math.exp(-0.5 * r * r)

    grid = RadialGrid(r_min=0.1, r_max=3.0, step=0.02)
    assert ode_residual(ground, OSCILLATOR, CONSTS, 3.0, grid, stencil_step=1e-3) <= 1e-8
    assert ode_residual(ground, OSCILLATOR, CONSTS, 3.1, grid, stencil_step=1e-3) > 1e-3
    assert ode_residual(ground, OSCILLATOR, CONSTS, 3.0, RadialGrid(r_min=0.1, r_max=3.0, step=0.005)) <= 1e-7
    with pytest.raises(ValueError):
        ode_residual(ground, OSCILLATOR, CONSTS, 3.0, RadialGrid(r_min=0.001, r_max=3.0, step=0.02), stencil_step=1e-3)


def test__RadialGrid__decaying() -> None:
    grid = RadialGrid.decaying(Potential(v6=1.0))
    z = 0.25 * grid.r_max**2
    assert -4.0 * z * z == pytest.approx(-30.0)
    assert len(grid) in (4000, 4001)
    with pytest.raises(ValueError):
        RadialGrid(r_min=1.0, r_max=0.5, step=0.001)
    with pytest.raises(ValueError):
        RadialGrid(r_max=1.0, step=0.1)

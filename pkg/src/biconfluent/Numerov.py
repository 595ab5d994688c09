from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import numpy.typing as npt
import scipy.optimize

from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.RadialGrid import RadialGrid

__all__ = ["Numerov", "NumerovSolution", "numerov_integrate", "shoot_eigenvalue", "ode_residual"]

logger = logging.getLogger(__name__)

#: Magnitude above which the integrated solution is rescaled.
RESCALE_THRESHOLD = 1e100


@dataclass(frozen=True)
class NumerovSolution:
    """
    A solution of `psi'' = k (V - E) psi` on a #RadialGrid, regular at the origin.

    :param log10_scale: The samples are the solution divided by `10**log10_scale`.
    :param mismatch: `(psi' - L psi) / |(psi, psi')|` at `r_max` with the decay rate `L = -(k (V - E))^(1/2)`. It
        changes sign at the bound-state energies.
    """

    r: npt.NDArray[np.float64]
    psi: npt.NDArray[np.float64]
    node_count: int
    log_derivative: float
    mismatch: float
    log10_scale: float


@dataclass(frozen=True)
class Numerov:
    """
    Fourth order integration of the radial equation outwards from a Frobenius series start.

    :param series_terms: Number of even powers of the Frobenius series `r^p sum_j c_j r^j`.
    :param start_tolerance: Grid points are taken from the series while `h^2 |k (V - E)| / 12` exceeds this value.
    """

    class Error(Exception):
        pass

    @dataclass
    class NoSignChange(Error):
        bracket: tuple[float, float]

        def __str__(self) -> str:
            return f"the decay mismatch does not change sign over the energy bracket {self.bracket!r}"

    @dataclass
    class NotDecaying(Error):
        energy: float
        r_max: float

        def __str__(self) -> str:
            return f"E={self.energy!r} is above the potential at r_max={self.r_max!r}"

    series_terms: int = 60
    start_tolerance: float = 1e-3

    def left_power(self, pot: Potential, consts: PhysicalConstants) -> float:
        """
        The regular exponent `p = 1/2 + (1/4 + k V_{-2})^(1/2)` of `psi ~ r^p` at the origin.
        """

        return 0.5 + math.sqrt(0.25 + consts.k * pot.v_m2)

    def series(
        self,
        pot: Potential,
        consts: PhysicalConstants,
        energy: float,
        r: npt.NDArray[np.float64],
        left_power: float | None = None,
    ) -> npt.NDArray[np.float64]:
        k = consts.k
        p = self.left_power(pot, consts) if left_power is None else left_power
        if abs(p * (p - 1.0) - k * pot.v_m2) > 1e-9 * max(1.0, abs(k * pot.v_m2)):
            raise ValueError(f"r^{p} is not a Frobenius exponent of the centrifugal term {pot.v_m2!r}")
        couplings = {2: k * (pot.v0 - energy), 4: k * pot.v2, 6: k * pot.v4, 8: k * pot.v6}
        coeffs = [1.0]
        for j in range(2, 2 * self.series_terms + 1, 2):
            total = sum(g * coeffs[(j - d) // 2] for d, g in couplings.items() if j - d >= 0)
            coeffs.append(total / (j * (2.0 * p + j - 1.0)))
        r2 = r * r
        values = np.zeros_like(r)
        for c in reversed(coeffs):
            values = values * r2 + c
        return np.power(r, p) * values

    def integrate(
        self,
        pot: Potential,
        consts: PhysicalConstants,
        energy: float,
        grid: RadialGrid,
        left_power: float | None = None,
    ) -> NumerovSolution:
        r = grid.points()
        h = grid.step
        f = 1.0 + h * h / 12.0 * consts.k * (energy - pot(r))
        psi = np.zeros_like(r)

        # Series start up to the first point where the Numerov weights are well conditioned.
        start = 1
        while start < len(r) - 1 and max(abs(1.0 - f[start - 1]), abs(1.0 - f[start])) > self.start_tolerance:
            start += 1
        psi[: start + 1] = self.series(pot, consts, energy, r[: start + 1], left_power)

        log10_scale = 0.0
        for i in range(start, len(r) - 1):
            psi[i + 1] = ((12.0 - 10.0 * f[i]) * psi[i] - f[i - 1] * psi[i - 1]) / f[i + 1]
            if abs(psi[i + 1]) > RESCALE_THRESHOLD:
                psi[: i + 2] /= RESCALE_THRESHOLD
                log10_scale += math.log10(RESCALE_THRESHOLD)
                logger.debug("rescaled the Numerov solution at r=%s", r[i + 1])

        signs = np.sign(psi[psi != 0.0])
        node_count = int(np.count_nonzero(signs[1:] != signs[:-1]))

        derivative = (3.0 * psi[-1] - 4.0 * psi[-2] + psi[-3]) / (2.0 * h)
        excess = consts.k * (pot(float(r[-1])) - energy)
        if excess <= 0:
            raise self.NotDecaying(energy, float(r[-1]))
        decay = -math.sqrt(excess)
        norm = math.hypot(psi[-1], derivative)
        mismatch = (derivative - decay * psi[-1]) / norm if norm > 0 else 0.0
        log_derivative = derivative / psi[-1] if psi[-1] != 0 else math.copysign(math.inf, derivative)
        return NumerovSolution(r, psi, node_count, float(log_derivative), float(mismatch), log10_scale)

    def shoot(
        self,
        pot: Potential,
        consts: PhysicalConstants,
        bracket: tuple[float, float],
        grid: RadialGrid,
        left_power: float | None = None,
        xtol: float = 1e-12,
    ) -> float:
        """
        The bound-state energy inside *bracket*, where the decay mismatch at `r_max` changes sign.

        :raise Numerov.NoSignChange: If the mismatch has the same sign at both ends of *bracket*.
        """

        def mismatch(energy: float) -> float:
            return self.integrate(pot, consts, energy, grid, left_power).mismatch

        low, high = bracket
        m_low, m_high = mismatch(low), mismatch(high)
        if m_low == 0.0:
            return low
        if m_high == 0.0:
            return high
        if m_low * m_high > 0:
            raise self.NoSignChange(bracket)
        energy = float(scipy.optimize.brentq(mismatch, low, high, xtol=xtol, rtol=4 * np.finfo(float).eps))
        logger.debug("shooting found E=%s in %r", energy, bracket)
        return energy


DEFAULT_NUMEROV = Numerov()


def numerov_integrate(
    pot: Potential,
    consts: PhysicalConstants,
    energy: float,
    grid: RadialGrid,
    left_power: float | None = None,
) -> NumerovSolution:
    return DEFAULT_NUMEROV.integrate(pot, consts, energy, grid, left_power)


def shoot_eigenvalue(
    pot: Potential,
    consts: PhysicalConstants,
    bracket: tuple[float, float],
    grid: RadialGrid,
    left_power: float | None = None,
    xtol: float = 1e-12,
) -> float:
    return DEFAULT_NUMEROV.shoot(pot, consts, bracket, grid, left_power, xtol)


def ode_residual(
    psi: Callable[[float], float],
    pot: Potential,
    consts: PhysicalConstants,
    energy: float,
    grid: RadialGrid,
    stencil_step: float | None = None,
) -> float:
    """
    Returns `max |psi'' + k (E - V) psi| / max |psi''|` over the grid, with `psi''` from the five point stencil. By
    default the stencil uses the grid step on the interior points; with *stencil_step* it is centred on every grid
    point instead.
    """

    r = grid.points()
    if stencil_step is None:
        h = grid.step
        values = np.array([psi(float(x)) for x in r])
        centre = values[2:-2]
        second = (-values[4:] + 16.0 * values[3:-1] - 30.0 * centre + 16.0 * values[1:-3] - values[:-4]) / (12 * h * h)
        r = r[2:-2]
    else:
        h = stencil_step
        if r[0] - 2 * h <= 0:
            raise ValueError(f"the stencil step {h!r} reaches beyond the origin from r={r[0]!r}")
        shifted = {k: np.array([psi(float(x + k * h)) for x in r]) for k in (-2, -1, 0, 1, 2)}
        centre = shifted[0]
        second = (-shifted[2] + 16.0 * shifted[1] - 30.0 * centre + 16.0 * shifted[-1] - shifted[-2]) / (12 * h * h)
    residual = second + consts.k * (energy - pot(r)) * centre
    scale = float(np.max(np.abs(second)))
    if scale == 0:
        return 0.0 if not np.any(residual) else math.inf
    return float(np.max(np.abs(residual)) / scale)

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np
import scipy.optimize

from biconfluent.Approximations import Approximations
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.OriginConditions import origin_condition_n0, origin_condition_n1
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["CurveTrace", "CurveTracer", "trace_curve"]

logger = logging.getLogger(__name__)

#: Distance from the trivial root `w = xi0^2` kept by negative-energy curves of the first level.
TRIVIAL_ROOT_MARGIN = 1e-6


@dataclass(frozen=True)
class CurveTrace:
    """
    The points of one bound-state curve in the `(xi0, w)` plane, in ascending `xi0`.

    :param failures: Grid values of `xi0` where no root could be bracketed.
    :param outside: Grid values of `xi0` where the curve leaves the `w >= 0` region of the first level.
    """

    level_N: int
    branch_n: int
    energy_sign: int | None
    points: tuple[DimensionlessPair, ...]
    failures: tuple[float, ...] = ()
    outside: tuple[float, ...] = ()

    def xi0s(self) -> np.ndarray:
        return np.array([p.xi0 for p in self.points])

    def ws(self) -> np.ndarray:
        return np.array([p.w for p in self.points])

    def w_at(self, xi0: float) -> float | None:
        for point in self.points:
            if point.xi0 == xi0:
                return point.w
        return None


@dataclass(frozen=True)
class CurveTracer:
    """
    Traces bound-state curves by root finding in `w` at every grid value of `xi0`. Each root is bracketed around a
    seed: the closed-form approximation at `xi0` plus the offset `w - approximation` of the previous roots,
    extrapolated linearly. Brackets of the given half widths are tried first, then an outward scan. Roots farther
    than *max_offset* from the seed are never accepted, which keeps a trace on its own branch where neighbouring
    branches are close.

    A first-level point whose seed lies within *max_offset* of `w = 0` and has no root is reported as outside
    rather than as a failure: the curve ends on the `w = 0` line there.

    :param half_widths: Half widths of the symmetric brackets tried around the seed.
    :param scan_step: Step of the outward scan when no symmetric bracket changes sign.
    :param max_scan_steps: Number of scan steps in each direction.
    :param max_offset: Largest accepted distance in `w` between a root and its seed.
    :param xtol: Absolute tolerance of the root in `w`.
    """

    half_widths: tuple[float, ...] = (0.125, 0.5, 1.0)
    scan_step: float = 0.25
    max_scan_steps: int = 80
    max_offset: float = 1.0
    xtol: float = 1e-12
    approximations: Approximations = field(default_factory=Approximations)
    fn: SpecialFunctions = DEFAULT

    def __post_init__(self) -> None:
        if not self.half_widths or min(self.half_widths) <= 0:
            raise ValueError(f"CurveTracer.half_widths must be positive, got {self.half_widths!r}")
        if not self.scan_step > 0:
            raise ValueError(f"CurveTracer.scan_step must be positive, got {self.scan_step!r}")
        if not self.max_offset > 0:
            raise ValueError(f"CurveTracer.max_offset must be positive, got {self.max_offset!r}")

    def residual(self, level_N: int, energy_sign: int | None) -> Callable[[float, float], float]:
        """
        The origin condition of *level_N* as a function of `(xi0, w)`.
        """

        if level_N == 0:
            return lambda xi0, w: origin_condition_n0(DimensionlessPair(xi0, w), self.fn)
        if level_N == 1 and energy_sign is not None and energy_sign in (1, -1):
            sign = energy_sign
            return lambda xi0, w: origin_condition_n1(DimensionlessPair(xi0, w), sign, self.fn)
        raise ValueError(f"curves are traced on levels 0 and 1 only, got level {level_N!r} / sign {energy_sign!r}")

    def trace(
        self,
        level_N: int,
        branch_n: int,
        xi0_grid: Sequence[float],
        energy_sign: int | None = None,
    ) -> CurveTrace:
        if branch_n < 1:
            raise ValueError(f"branches are counted from 1, got {branch_n!r}")
        grid = [float(x) for x in xi0_grid]
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("the xi0 grid must be strictly increasing")
        if level_N == 0:
            energy_sign = None
        residual = self.residual(level_N, energy_sign)

        roots: dict[float, float] = {}
        failures: list[float] = []
        outside: list[float] = []
        for path in self._paths(level_N, grid):
            offsets: list[float] = []
            for xi0 in path:
                if xi0 in failures or xi0 in outside:
                    continue
                approx = self.approximations.seed(level_N, branch_n, xi0, energy_sign)
                if xi0 in roots:
                    offsets.append(roots[xi0] - approx)
                    continue
                limits = (-math.inf, math.inf)
                if level_N == 1:
                    if approx < 0:
                        outside.append(xi0)
                        offsets.clear()
                        continue
                    upper = xi0 * xi0 - (TRIVIAL_ROOT_MARGIN if energy_sign == -1 else 0.0)
                    limits = (0.0, upper)
                seed = approx + self._extrapolate(offsets)
                w = self._solve(lambda w: residual(xi0, w), seed, limits)
                if w is None:
                    offsets.clear()
                    if level_N == 1 and seed < self.max_offset:
                        logger.debug("level 1 branch %d ends on w = 0 near xi0=%s", branch_n, xi0)
                        outside.append(xi0)
                    else:
                        logger.warning("no root for level %d branch %d at xi0=%s", level_N, branch_n, xi0)
                        failures.append(xi0)
                    continue
                roots[xi0] = w
                offsets.append(w - approx)

        points = tuple(DimensionlessPair(xi0, roots[xi0]) for xi0 in sorted(roots))
        logger.debug("traced %d points of level %d branch %d", len(points), level_N, branch_n)
        return CurveTrace(level_N, branch_n, energy_sign, points, tuple(sorted(failures)), tuple(sorted(outside)))

    @staticmethod
    def _paths(level_N: int, grid: list[float]) -> list[list[float]]:
        """
        Ground-level curves are traced outwards from the grid point closest to `xi0 = 0`, where the approximation is
        exact. First-level curves are traced from the most negative `xi0` to the right.
        """

        if level_N != 0 or not grid:
            return [grid]
        start = min(range(len(grid)), key=lambda i: abs(grid[i]))
        return [grid[start:], grid[start::-1]]

    @staticmethod
    def _extrapolate(offsets: list[float]) -> float:
        if len(offsets) >= 2:
            return 2.0 * offsets[-1] - offsets[-2]
        return offsets[-1] if offsets else 0.0

    def _brackets(self, seed: float, limits: tuple[float, float]) -> Iterator[tuple[float, float]]:
        low, high = limits
        for width in self.half_widths:
            a, b = max(seed - width, low), min(seed + width, high)
            if a < b:
                yield a, b
        for k in range(1, self.max_scan_steps + 1):
            for a, b in (
                (seed + (k - 1) * self.scan_step, seed + k * self.scan_step),
                (seed - k * self.scan_step, seed - (k - 1) * self.scan_step),
            ):
                a, b = max(a, low), min(b, high)
                if a < b:
                    yield a, b

    def _solve(self, f: Callable[[float], float], seed: float, limits: tuple[float, float]) -> float | None:
        window = (max(limits[0], seed - self.max_offset), min(limits[1], seed + self.max_offset))
        if window[0] >= window[1]:
            return None
        seed = min(max(seed, window[0]), window[1])
        values: dict[float, float] = {}

        def evaluate(w: float) -> float:
            if w not in values:
                values[w] = f(w)
            return values[w]

        for a, b in self._brackets(seed, window):
            try:
                fa, fb = evaluate(a), evaluate(b)
                if fa == 0.0:
                    return a
                if fb == 0.0:
                    return b
                if fa * fb < 0:
                    return float(scipy.optimize.brentq(f, a, b, xtol=self.xtol, rtol=4 * np.finfo(float).eps))
            except SpecialFunctions.Error as exc:
                logger.debug("residual evaluation failed in [%s, %s]: %s", a, b, exc)
        return None


def trace_curve(
    level_N: int,
    branch_n: int,
    xi0_grid: Sequence[float],
    energy_sign: int | None = None,
    tracer: CurveTracer | None = None,
) -> CurveTrace:
    """
    Trace branch *branch_n* of the bound-state curves of *level_N* (0 or 1) over *xi0_grid*. On the first level,
    *energy_sign* selects the curves of negative (-1) or positive (+1) `E - V0`.
    """

    return (tracer or CurveTracer()).trace(level_N, branch_n, xi0_grid, energy_sign)

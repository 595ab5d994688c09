from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from biconfluent.BranchChoice import BranchChoice
from biconfluent.HeunParameters import map_potential
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential

__all__ = ["RadialGrid"]

#: Exponent of the prefactor `exp(a1 z + a2 z^2)` at which #RadialGrid.decaying() places the right end.
DECAY_EXPONENT = -30.0


@dataclass(frozen=True, kw_only=True)
class RadialGrid:
    """
    Equidistant radial points `r_min, r_min + step, ...` up to `r_max`.

    >>> float(RadialGrid(r_min=0.5, r_max=1.5, step=0.01).points()[-1])
    1.5
    """

    r_min: float = 1e-4
    r_max: float
    step: float

    def __post_init__(self) -> None:
        if not 0 < self.r_min < self.r_max:
            raise ValueError(f"RadialGrid requires 0 < r_min < r_max, got {self.r_min!r}, {self.r_max!r}")
        if not 0 < self.step <= (self.r_max - self.r_min) / 100:
            raise ValueError(f"RadialGrid.step must be in (0, (r_max - r_min)/100], got {self.step!r}")

    def __len__(self) -> int:
        return int(math.floor((self.r_max - self.r_min) / self.step + 1e-9)) + 1

    def points(self) -> npt.NDArray[np.float64]:
        return self.r_min + self.step * np.arange(len(self))

    @classmethod
    def decaying(
        cls,
        pot: Potential,
        consts: PhysicalConstants | None = None,
        step: float | None = None,
        r_min: float = 1e-4,
    ) -> RadialGrid:
        """
        A grid whose right end is where the exponent `a1 z + a2 z^2` of the bound-state prefactor reaches -30. The
        default step divides the range into 4000 intervals.
        """

        _, exponents = map_potential(pot, 0.0, consts, BranchChoice.BOUND_STATE)
        a1, a2 = exponents.a1, exponents.a2
        z = (-a1 - math.sqrt(a1 * a1 + 4.0 * a2 * DECAY_EXPONENT)) / (2.0 * a2)
        r_max = 2.0 * math.sqrt(z)
        return cls(r_min=r_min, r_max=r_max, step=step or (r_max - r_min) / 4000)

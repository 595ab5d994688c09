from __future__ import annotations

import math
from dataclasses import dataclass

from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential

__all__ = ["DimensionlessPair"]


@dataclass(frozen=True)
class DimensionlessPair:
    """
    The quartic strength `xi0 = V4 / (2 (2 hbar^2 V6^3/m)^(1/4))` and the harmonic strength
    `w = V2 / (2 hbar^2 V6/m)^(1/2)` of a sextic oscillator. With `k = 2m/hbar^2`, `xi0` is the value `s0 delta/epsilon`
    of the Hermite argument at the origin.

    >>> DimensionlessPair.from_potential(Potential(v2=2.0, v4=0.0, v6=1.0), PhysicalConstants())
    DimensionlessPair(xi0=0.0, w=1.0)
    """

    xi0: float
    w: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.xi0) and math.isfinite(self.w)):
            raise ValueError(f"DimensionlessPair requires finite values, got ({self.xi0!r}, {self.w!r})")

    @classmethod
    def from_potential(cls, pot: Potential, consts: PhysicalConstants | None = None) -> DimensionlessPair:
        if not pot.v6 > 0:
            raise ValueError(f"the dimensionless pair requires v6 > 0, got {pot.v6!r}")
        k = (consts or PhysicalConstants()).k
        xi0 = pot.v4 * k**0.25 / (2.0 * math.sqrt(2.0) * pot.v6**0.75)
        w = pot.v2 * math.sqrt(k) / (2.0 * math.sqrt(pot.v6))
        return cls(xi0, w)

    def to_potential(
        self,
        level_N: int,
        consts: PhysicalConstants | None = None,
        v6: float = 1.0,
        v0: float = 0.0,
    ) -> Potential:
        """
        The potential with this pair and the centrifugal coefficient of hierarchy level *level_N*.
        """

        if not v6 > 0:
            raise ValueError(f"v6 must be positive, got {v6!r}")
        consts = consts or PhysicalConstants()
        v4 = 2.0 * self.xi0 * (2.0 * consts.hbar**2 * v6**3 / consts.mass) ** 0.25
        v2 = self.w * math.sqrt(2.0 * consts.hbar**2 * v6 / consts.mass)
        return Potential(v_m2=consts.level_v_m2(level_N), v0=v0, v2=v2, v4=v4, v6=v6)

    def hermite_index(self, level_N: int) -> float:
        """
        The index `-alpha/epsilon = (xi0^2 - w - 1 + N)/2` of the contiguous Hermite functions on level *level_N*.
        """

        return 0.5 * (self.xi0 * self.xi0 - self.w - 1.0 + level_N)

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["PhysicalConstants"]


@dataclass(frozen=True)
class PhysicalConstants:
    """
    Reduced Planck constant and particle mass. The defaults `hbar=1`, `mass=1/2` make `2m/hbar^2 = 1`.
    """

    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self) -> None:
        if not self.hbar > 0:
            raise ValueError(f"PhysicalConstants.hbar must be positive, got {self.hbar!r}")
        if not self.mass > 0:
            raise ValueError(f"PhysicalConstants.mass must be positive, got {self.mass!r}")

    @property
    def k(self) -> float:
        """The factor `2m/hbar^2` in front of `E - V(r)` in the radial equation."""

        return 2.0 * self.mass / self.hbar**2

    def level_v_m2(self, level_N: int) -> float:
        """
        Centrifugal coefficient `hbar^2 (2N+1)(2N+3) / (8m)` for which the bound-state branch has `gamma = -N`.
        """

        if level_N < 0:
            raise ValueError(f"level must be non-negative, got {level_N!r}")
        return self.hbar**2 * (2 * level_N + 1) * (2 * level_N + 3) / (8.0 * self.mass)

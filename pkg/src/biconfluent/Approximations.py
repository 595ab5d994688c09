from __future__ import annotations

import math
from dataclasses import dataclass

import scipy.special

__all__ = ["Approximations", "AIRY_COEFFICIENT"]

#: `Gamma(7/6) / (4 pi^(1/2) 3^(1/3))`, roughly 0.0907.
AIRY_COEFFICIENT = float(scipy.special.gamma(7.0 / 6.0)) / (4.0 * math.sqrt(math.pi) * 3.0 ** (1.0 / 3.0))


@dataclass(frozen=True)
class Approximations:
    """
    Closed-form approximations of the bound-state curves in the `(xi0, w)` plane. Branches are counted from
    `n = 1`.

    :param a: The offset of the positive-energy curves of the first level.

    >>> Approximations().approx_n0(0.0, 2)
    -7.0
    >>> Approximations().approx_n1_neg(-4.0, 1)
    14.0
    """

    class Error(Exception):
        pass

    @dataclass
    class DomainError(Error):
        message: str

        def __str__(self) -> str:
            return self.message

    a: float = 1.0 / 3.0

    def approx_n0(self, xi0: float, n: int) -> float:
        """
        Branch *n* of the ground level, from the cosine approximation of the Hermite function in its oscillatory
        region. Exact at `xi0 = 0`, where `w = 1 - 4n`.
        """

        pi2 = math.pi * math.pi
        inner = (12.0 - pi2) / (3.0 * pi2) * xi0 * xi0 - (1.0 - 4.0 * n)
        if inner < 0:
            raise self.DomainError(f"approx_n0 is undefined at xi0={xi0!r}, n={n!r}")
        return (1.0 - 4.0 * n) + xi0 * xi0 * (pi2 - 8.0) / pi2 - xi0 * (4.0 / math.pi) * math.sqrt(inner)

    def approx_n1_neg(self, xi0: float, n: int) -> float:
        return xi0 * xi0 - 2.0 * n

    def delta_correction(self, xi0: float, n: int) -> float:
        """
        The correction that grows from zero at `xi0 = -(2n - a)^(1/2)` to `2 - a` for `xi0 -> -inf`.
        """

        return (2.0 - self.a) * math.tanh(-math.sqrt(2.0) * (xi0 + math.sqrt(2.0 * n - self.a)))

    def approx_n1_pos(self, xi0: float, n: int) -> float:
        return xi0 * xi0 - 2.0 * n + self.a + self.delta_correction(xi0, n)

    def airy_correction(self, xi0: float) -> float:
        """
        The second term of #airy_region_condition(), of size `0.09/|xi0|^(4/3)`.
        """

        self._check_airy_region(xi0)
        phase = math.pi * (0.5 * xi0 * xi0 + 1.0 / 6.0)
        return AIRY_COEFFICIENT / (xi0 * xi0) ** (2.0 / 3.0) * math.cos(phase)

    def airy_region_condition(self, xi0: float) -> float:
        """
        Approximation of `H_{xi0^2/2}(xi0) - xi0 H_{xi0^2/2-1}(xi0) = 0` in the transition region of the Hermite
        function. The leading sine vanishes at `xi0 = -(2n - 1/3)^(1/2)`.
        """

        self._check_airy_region(xi0)
        return math.sin(math.pi * (0.5 * xi0 * xi0 + 1.0 / 6.0)) + self.airy_correction(xi0)

    def seed(self, level_N: int, n: int, xi0: float, energy_sign: int | None = None) -> float:
        """
        The approximation of branch *n* that matches *level_N* and *energy_sign*.
        """

        if level_N == 0:
            return self.approx_n0(xi0, n)
        if level_N == 1 and energy_sign in (1, -1):
            return self.approx_n1_neg(xi0, n) if energy_sign == -1 else self.approx_n1_pos(xi0, n)
        raise ValueError(f"no approximation for level {level_N!r} with energy sign {energy_sign!r}")

    @staticmethod
    def _check_airy_region(xi0: float) -> None:
        if not xi0 < -1.0:
            raise Approximations.DomainError(f"the transition region approximation requires xi0 < -1, got {xi0!r}")

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from biconfluent.BranchChoice import BranchChoice
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential

__all__ = ["HeunParameters", "PrefactorExponents", "map_potential", "q_of_energy"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeunParameters:
    """
    Parameters of the bi-confluent Heun equation

        u'' + (gamma/z + delta + epsilon z) u' + (alpha - q/z) u = 0

    that the radial equation of a #Potential is mapped to by `z = r^2/4`.
    """

    class Error(Exception):
        pass

    @dataclass
    class ZeroSextic(Error):
        def __str__(self) -> str:
            return "the sextic coefficient v6 must not be zero"

    @dataclass
    class NonConfining(Error):
        v6: float

        def __str__(self) -> str:
            return f"a negative sextic coefficient (v6={self.v6!r}) has no real parameter map"

    @dataclass
    class NegativeDiscriminant(Error):
        discriminant: float

        def __str__(self) -> str:
            return f"1 + 8 m v_m2 / hbar^2 = {self.discriminant!r} is negative"

    @dataclass
    class PositiveEpsilon(Error):
        epsilon: float

        def __str__(self) -> str:
            return f"the Hermite-function expansion requires epsilon < 0, got {self.epsilon!r}"

    gamma: float
    delta: float
    epsilon: float
    alpha: float
    q: float

    def __post_init__(self) -> None:
        if self.epsilon == 0:
            raise ValueError("HeunParameters.epsilon must not be zero")

    def s0(self, sign_s0: int) -> float:
        """
        The scale `sign_s0 * (-epsilon/2)^(1/2)` of the Hermite argument `xi = s0 (z + delta/epsilon)`.
        """

        if self.epsilon > 0:
            raise self.PositiveEpsilon(self.epsilon)
        return sign_s0 * math.sqrt(-0.5 * self.epsilon)

    @property
    def xi_shift(self) -> float:
        return self.delta / self.epsilon

    @property
    def mu(self) -> float:
        """The Hermite index `-alpha/epsilon` of the contiguous form."""

        return -self.alpha / self.epsilon

    def with_q(self, q: float) -> HeunParameters:
        return HeunParameters(self.gamma, self.delta, self.epsilon, self.alpha, q)

    def is_close(self, other: HeunParameters, rel: float = 1e-9) -> bool:
        fields = ("gamma", "delta", "epsilon", "alpha", "q")
        scale = max(1.0, *(abs(getattr(self, f)) for f in fields))
        return all(abs(getattr(self, f) - getattr(other, f)) <= rel * scale for f in fields)


@dataclass(frozen=True)
class PrefactorExponents:
    """
    Exponents of the prefactor in `psi(r) = z^a0 exp(a1 z + a2 z^2) u(z)`.
    """

    a0: float
    a1: float
    a2: float

    @classmethod
    def of(cls, hp: HeunParameters) -> PrefactorExponents:
        return cls((2.0 * hp.gamma - 1.0) / 4.0, hp.delta / 2.0, hp.epsilon / 4.0)

    def log_prefactor(self, z: float) -> float:
        return self.a0 * math.log(z) + self.a1 * z + self.a2 * z * z


def map_potential(
    pot: Potential,
    energy: float,
    consts: PhysicalConstants | None = None,
    branch: BranchChoice = BranchChoice.BOUND_STATE,
) -> tuple[HeunParameters, PrefactorExponents]:
    """
    Map the radial equation of *pot* at the given *energy* to the bi-confluent Heun equation.

    :raise HeunParameters.ZeroSextic: If `pot.v6` is zero.
    :raise HeunParameters.NonConfining: If `pot.v6` is negative.
    :raise HeunParameters.NegativeDiscriminant: If the centrifugal term is too attractive for a real `gamma`.
    """

    consts = consts or PhysicalConstants()
    k = consts.k
    if pot.v6 == 0:
        raise HeunParameters.ZeroSextic()
    if pot.v6 < 0:
        raise HeunParameters.NonConfining(pot.v6)
    discriminant = 1.0 + 4.0 * k * pot.v_m2
    if discriminant < 0:
        raise HeunParameters.NegativeDiscriminant(discriminant)

    gamma = 1.0 + branch.sign_gamma * 0.5 * math.sqrt(discriminant)
    epsilon = branch.sign_epsilon * 16.0 * math.sqrt(k * pot.v6)
    delta = 32.0 * k * pot.v4 / epsilon
    alpha = -4.0 * k * pot.v2 + delta * delta / 4.0 + (gamma + 1.0) * epsilon / 2.0
    slope, intercept = q_of_energy(pot, consts, gamma, delta)
    hp = HeunParameters(gamma, delta, epsilon, alpha, slope * energy + intercept)
    return hp, PrefactorExponents.of(hp)


def q_of_energy(pot: Potential, consts: PhysicalConstants, gamma: float, delta: float) -> tuple[float, float]:
    """
    The affine map `E -> q = slope * E + intercept` of the accessory parameter.

    >>> q_of_energy(Potential(v0=0.0, v6=1.0), PhysicalConstants(hbar=1.0, mass=1.0), -1.0, 2.0)
    (-2.0, 1.0)
    """

    k = consts.k
    return -k, k * pot.v0 - gamma * delta / 2.0

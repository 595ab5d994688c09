from __future__ import annotations

from dataclasses import dataclass

from biconfluent.BranchChoice import BranchChoice
from biconfluent.HeunParameters import HeunParameters
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential

__all__ = ["QES_UNITS", "QesParams", "qes_potential", "qes_to_heun"]

#: The quasi-exactly solvable family is written with `hbar = 1` and `m = 1/2`.
QES_UNITS = PhysicalConstants(hbar=1.0, mass=0.5)


@dataclass(frozen=True)
class QesParams:
    """
    Parameters of the quasi-exactly solvable sextic oscillator whose lowest `M + 1` states are

        psi(r) = r^(2s - 1/2) exp(-a r^4/4 - b r^2/2) P_M(r^2)

    with a polynomial `P_M` of degree *M*.

    >>> QesParams(a=1.0, b=0.0, s=1.0, M=0).potential()
    Potential(v_m2=0.75, v0=0.0, v2=-6.0, v4=0.0, v6=1.0)
    """

    a: float
    b: float
    s: float
    M: int

    def __post_init__(self) -> None:
        if not self.a > 0:
            raise ValueError(f"QesParams.a must be positive for a normalizable state, got {self.a!r}")
        if not self.s > 0.25:
            raise ValueError(f"QesParams.s must exceed 1/4 for psi(0) = 0, got {self.s!r}")
        if not isinstance(self.M, int) or self.M < 0:
            raise ValueError(f"QesParams.M must be a non-negative integer, got {self.M!r}")

    @property
    def left_power(self) -> float:
        """The power `2s - 1/2` of `r` at the origin."""

        return 2.0 * self.s - 0.5

    def potential(self) -> Potential:
        p = self.left_power
        return Potential(
            v_m2=p * (p - 1.0),
            v0=0.0,
            v2=self.b * self.b - 4.0 * self.a * (self.s + self.M + 0.5),
            v4=2.0 * self.a * self.b,
            v6=self.a * self.a,
        )

    def matching_branch(self) -> BranchChoice:
        """
        The branch with `gamma = 2s` and negative `epsilon`, on which the closed-form states are the terminated
        Hermite-polynomial expansions of order *M* (`-alpha/epsilon = M`).
        """

        return BranchChoice(sign_gamma=1 if self.s >= 0.5 else -1, sign_epsilon=-1)

    def heun_parameters(self, signs: BranchChoice, energy: float = 0.0) -> HeunParameters:
        """
        The bi-confluent Heun parameters of the QES potential at *energy*, written in terms of `a, b, s, M`. They
        agree with what #map_potential() gives for #potential().
        """

        pi_gamma, pi_epsilon = signs.sign_gamma, signs.sign_epsilon
        spin = abs(self.s - 0.5)
        gamma = 1.0 + pi_gamma * 2.0 * spin
        alpha = 16.0 * self.a * (self.s + self.M + 0.5 + pi_epsilon + pi_epsilon * pi_gamma * spin)
        q = -2.0 * self.b * pi_epsilon * gamma - energy
        return HeunParameters(gamma, 4.0 * self.b * pi_epsilon, 16.0 * self.a * pi_epsilon, alpha, q)


def qes_potential(p: QesParams) -> Potential:
    return p.potential()


def qes_to_heun(p: QesParams, signs: BranchChoice, energy: float = 0.0) -> HeunParameters:
    return p.heun_parameters(signs, energy)

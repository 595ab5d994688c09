from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial as QPolynomial

from biconfluent.BranchChoice import BranchChoice
from biconfluent.HeunParameters import HeunParameters, map_potential, q_of_energy
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.Recurrence import Variant, q_polynomial_coefficients

__all__ = ["LevelSpectrum", "energies_for_level"]

logger = logging.getLogger(__name__)

#: Relative size of the imaginary part below which a root of the termination polynomial counts as real.
REAL_ROOT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LevelSpectrum:
    """
    The energies that terminate the Hermite expansion on one hierarchy level.

    :param energies: Real energies in ascending order.
    :param q_roots: The accessory parameter of each energy, in the same order.
    :param complex_roots: Roots of the termination polynomial with a non-negligible imaginary part.
    :param slope: Slope of the affine map `E -> q`.
    :param intercept: Intercept of the affine map `E -> q`.
    :param params: The Heun parameters of the potential at `E = 0`.
    """

    class Error(Exception):
        pass

    @dataclass
    class LevelMismatch(Error):
        N: int
        gamma: float

        def __str__(self) -> str:
            return f"the potential has gamma={self.gamma!r}, which is not on level N={self.N} (gamma = -N)"

    @dataclass
    class HermiteLevelMismatch(Error):
        N: int
        mu: float

        def __str__(self) -> str:
            return f"the potential has -alpha/epsilon={self.mu!r}, expected {self.N} for a Hermite polynomial solution"

    level_N: int
    variant: Variant
    energies: tuple[float, ...]
    q_roots: tuple[float, ...]
    complex_roots: tuple[complex, ...]
    slope: float
    intercept: float
    params: HeunParameters

    def params_at(self, energy: float) -> HeunParameters:
        return self.params.with_q(self.slope * energy + self.intercept)


def _polish(poly: QPolynomial, root: complex) -> complex:
    derivative = poly.deriv()(root)
    if derivative == 0:
        return root
    return complex(root - poly(root) / derivative)


def energies_for_level(
    pot: Potential,
    consts: PhysicalConstants | None = None,
    N: int = 0,
    variant: Variant = Variant.NU0_FULL,
    branch: BranchChoice = BranchChoice.BOUND_STATE,
) -> LevelSpectrum:
    """
    Map the real roots of the termination polynomial of order *N* to energies through the inverse of #q_of_energy().

    :raise LevelSpectrum.LevelMismatch: If *variant* is #Variant.NU0_FULL and the potential does not give `gamma = -N`.
    :raise LevelSpectrum.HermiteLevelMismatch: If *variant* is #Variant.NU0_ZERO and `-alpha/epsilon != N`.
    """

    if N < 0:
        raise ValueError(f"level must be non-negative, got {N!r}")
    consts = consts or PhysicalConstants()
    hp, _ = map_potential(pot, 0.0, consts, branch)
    if variant is Variant.NU0_FULL and abs(hp.gamma + N) > 1e-9 * max(1.0, N):
        raise LevelSpectrum.LevelMismatch(N, hp.gamma)
    if variant is Variant.NU0_ZERO and abs(hp.mu - N) > 1e-9 * max(1.0, N):
        raise LevelSpectrum.HermiteLevelMismatch(N, hp.mu)

    poly = QPolynomial(q_polynomial_coefficients(N, hp, variant))
    roots = [_polish(poly, complex(r)) for r in np.polynomial.polynomial.polyroots(poly.coef)]
    real_roots, complex_roots = [], []
    for root in roots:
        if abs(root.imag) <= REAL_ROOT_TOLERANCE * max(1.0, abs(root)):
            real_roots.append(root.real)
        else:
            complex_roots.append(root)
    if complex_roots:
        logger.info("level %d: %d complex roots of the termination polynomial excluded", N, len(complex_roots))

    slope, intercept = q_of_energy(pot, consts, hp.gamma, hp.delta)
    pairs = sorted(((q - intercept) / slope, q) for q in real_roots)
    return LevelSpectrum(
        level_N=N,
        variant=variant,
        energies=tuple(e for e, _ in pairs),
        q_roots=tuple(q for _, q in pairs),
        complex_roots=tuple(complex_roots),
        slope=slope,
        intercept=intercept,
        params=hp,
    )

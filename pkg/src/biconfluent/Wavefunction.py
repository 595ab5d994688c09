from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from biconfluent.BranchChoice import BranchChoice
from biconfluent.ContiguousSolution import ContiguousSolution, reduce_to_contiguous
from biconfluent.HermiteExpansion import HermiteExpansion, expansion_coefficients
from biconfluent.HeunParameters import HeunParameters, PrefactorExponents, map_potential
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.Recurrence import Variant
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["Wavefunction", "assemble_wavefunction", "assemble_level_wavefunction"]

logger = logging.getLogger(__name__)

#: Number of Taylor coefficients beyond the level kept for sampling near the origin.
PREFIX_EXTRA_TERMS = 8

#: Range `|s0| z` in which `u(z)` is summed from its Taylor prefix.
PREFIX_RANGE = 1e-3


@dataclass(frozen=True)
class Wavefunction:
    """
    An unnormalized radial wavefunction `psi(r) = z^a0 exp(a1 z + a2 z^2) u(z)` with `z = r^2/4`. The solution `u`
    is taken from the contiguous form when there is one, from the Hermite expansion otherwise. Close to the origin
    it is summed from the Taylor prefix with vanishing leading coefficients set to zero, which resolves the
    `z^(N+1)` behaviour of a bound state.
    """

    class Error(Exception):
        pass

    @dataclass
    class InconsistentParameters(Error):
        expected: HeunParameters
        actual: HeunParameters

        def __str__(self) -> str:
            return f"the expansion was built for {self.actual}, but the potential maps to {self.expected}"

    exponents: PrefactorExponents
    contiguous: ContiguousSolution | None
    expansion: HermiteExpansion | None
    prefix: tuple[float, ...] = ()
    prefix_radius: float = 0.0
    fn: SpecialFunctions = DEFAULT

    def __post_init__(self) -> None:
        if self.contiguous is None and self.expansion is None:
            raise ValueError("a Wavefunction needs a contiguous form or a Hermite expansion")

    def vanishing_order(self) -> int:
        for k, c in enumerate(self.prefix):
            if c != 0.0:
                return k
        return 0

    def u(self, z: float) -> float:
        if self.prefix and z < self.prefix_radius:
            return math.fsum(c * z**k for k, c in enumerate(self.prefix) if c != 0.0)
        if self.contiguous is not None:
            return self.contiguous.u(z, self.fn)
        assert self.expansion is not None
        return self.expansion.u(z, self.fn)

    def __call__(self, r: float) -> float:
        if r < 0:
            raise ValueError(f"the radius must be non-negative, got {r!r}")
        z = 0.25 * r * r
        if z == 0.0:
            exponent = self.exponents.a0 + self.vanishing_order()
            if exponent > 0:
                return 0.0
            if exponent == 0:
                return self.u(0.0)
            return math.copysign(math.inf, self.u(0.0))
        value = self.u(z)
        if value == 0.0:
            return 0.0
        return math.exp(self.exponents.log_prefactor(z)) * value

    def sample(self, r: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return np.array([self(float(x)) for x in np.asarray(r, dtype=float).ravel()])


def _prefix(expansion: HermiteExpansion, factor: float, regular: bool) -> tuple[tuple[float, ...], float]:
    prefix = expansion.power_series_prefix(expansion.n_max + PREFIX_EXTRA_TERMS)
    if regular:
        order = expansion.n_max + 1
        if prefix.vanishing_order() < order:
            logger.debug("leading Taylor coefficients of u(z) vanish only to order %d", prefix.vanishing_order())
        coefficients = (0.0,) * order + prefix.coefficients[order:]
    else:
        order = prefix.vanishing_order()
        if order == 0:
            return (), 0.0
        coefficients = prefix.truncated()
    logger.debug("u(z) vanishes to order %d at the origin", order)
    return tuple(c / factor for c in coefficients), PREFIX_RANGE / abs(expansion.xi_scale)


def assemble_wavefunction(
    pot: Potential,
    consts: PhysicalConstants | None,
    branch: BranchChoice,
    exp: HermiteExpansion,
    energy: float,
    fn: SpecialFunctions = DEFAULT,
    regular: bool = False,
) -> Wavefunction:
    """
    Assemble the wavefunction of *pot* at *energy* from a terminated expansion.

    :param regular: Whether *energy* is known to satisfy the origin condition of the level, as on a traced
        bound-state curve. The leading `N+1` Taylor coefficients of `u` are then set to zero instead of being
        detected numerically.
    :raise Wavefunction.InconsistentParameters: If *exp* was not built for the parameters that #map_potential()
        gives for *pot* and *energy*.
    """

    hp, exponents = map_potential(pot, energy, consts, branch)
    if not hp.is_close(exp.params):
        raise Wavefunction.InconsistentParameters(hp, exp.params)
    if exp.variant is Variant.NU0_FULL:
        contig = reduce_to_contiguous(exp)
        assert contig.expansion_factor is not None
        prefix, radius = _prefix(exp, contig.expansion_factor, regular)
        return Wavefunction(exponents, contig, exp, prefix, radius, fn)
    prefix, radius = _prefix(exp, 1.0, regular)
    return Wavefunction(exponents, None, exp, prefix, radius, fn)


def assemble_level_wavefunction(
    pot: Potential,
    energy: float,
    N: int,
    consts: PhysicalConstants | None = None,
    branch: BranchChoice = BranchChoice.BOUND_STATE,
    fn: SpecialFunctions = DEFAULT,
    regular: bool = False,
) -> Wavefunction:
    """
    The wavefunction on hierarchy level *N* at an admissible *energy*. Where the recurrence has a vanishing pivot
    the contiguous form is built from the parameters directly, without a Taylor prefix. See #assemble_wavefunction()
    for *regular*.

    :raise HermiteExpansion.NonRoot: If *energy* does not terminate the expansion.
    """

    hp, exponents = map_potential(pot, energy, consts, branch)
    try:
        exp = expansion_coefficients(hp, N, branch.sign_s0)
    except HermiteExpansion.DegeneratePivot as exc:
        logger.debug("%s; building the contiguous form without the Taylor prefix", exc)
        return Wavefunction(exponents, ContiguousSolution.from_parameters(hp, N, branch.sign_s0), None, fn=fn)
    return assemble_wavefunction(pot, consts, branch, exp, energy, fn, regular)

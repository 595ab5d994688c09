"""
Conditions for the wavefunction to vanish at the origin. A terminated solution behaves like `z^a0 u(z)` near
`z = 0` with `a0 = -(2N+1)/4` on level `N`, so a bound state requires `u(0) = 0`.
"""

from __future__ import annotations

import math

from biconfluent.ContiguousSolution import ContiguousSolution
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.HeunParameters import HeunParameters
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["origin_condition_n0", "origin_condition_n1", "general_origin_condition"]


def origin_condition_n0(pair: DimensionlessPair, fn: SpecialFunctions = DEFAULT) -> float:
    """
    Returns `H_{(xi0^2 - w - 1)/2}(xi0)`.

    >>> origin_condition_n0(DimensionlessPair(0.0, -3.0))
    0.0
    """

    return fn.hermite_nu(pair.hermite_index(0), pair.xi0)


def origin_condition_n1(pair: DimensionlessPair, energy_sign: int, fn: SpecialFunctions = DEFAULT) -> float:
    """
    Returns `(xi0 - energy_sign w^(1/2)) H_nu(xi0) - (xi0^2 - w) H_{nu-1}(xi0)` with `nu = (xi0^2 - w)/2`, where
    *energy_sign* is the sign of `E - V0`.

    :raise SpecialFunctions.DomainError: If `w < 0`.
    """

    if energy_sign not in (1, -1):
        raise ValueError(f"energy_sign must be +1 or -1, got {energy_sign!r}")
    if pair.w < 0:
        raise SpecialFunctions.DomainError(f"origin_condition_n1 requires w >= 0, got {pair.w!r}")
    nu = pair.hermite_index(1)
    value = (pair.xi0 - energy_sign * math.sqrt(pair.w)) * fn.hermite_nu(nu, pair.xi0)
    if nu != 0:
        value -= 2.0 * nu * fn.hermite_nu(nu - 1.0, pair.xi0)
    return value


def general_origin_condition(
    contig: ContiguousSolution,
    hp: HeunParameters | None = None,
    fn: SpecialFunctions = DEFAULT,
) -> float:
    """
    Returns `P0(0) H_mu(s0 delta/epsilon) + P1(0) H_{mu-1}(s0 delta/epsilon)` for a contiguous solution on any level.
    On level 1 this is `epsilon/2` times #origin_condition_n1().

    :param hp: Parameters to evaluate the Hermite functions with. Defaults to the parameters *contig* was built from.
    """

    hp = hp or contig.params
    xi0 = hp.s0(contig.sign_s0) * hp.xi_shift
    value = float(contig.p0(0.0)) * fn.hermite_nu(hp.mu, xi0)
    p1 = float(contig.p1(0.0))
    if p1 != 0.0:
        value += p1 * fn.hermite_nu(hp.mu - 1.0, xi0)
    return value

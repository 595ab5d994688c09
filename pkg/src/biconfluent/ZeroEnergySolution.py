from __future__ import annotations

from biconfluent.HeunParameters import HeunParameters
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["zero_energy_reduced"]


def zero_energy_reduced(
    hp: HeunParameters,
    z: float,
    c1: float = 1.0,
    c2: float = 0.0,
    fn: SpecialFunctions = DEFAULT,
) -> float:
    """
    The general solution of the bi-confluent Heun equation for `delta = q = 0`,

        u(z) = c1 M(a, b, x) + c2 U(a, b, x),    a = alpha/(2 epsilon),  b = (gamma+1)/2,  x = -epsilon z^2/2,

    which covers the reduced sextic oscillator at `E = V0` for any centrifugal term. For `gamma = -N` with even `N`
    the terminated Hermite expansion is proportional to the `U` part alone.

    :raise SpecialFunctions.PoleError: If `c1 != 0` and `b` is a non-positive integer.
    """

    if hp.delta != 0 or hp.q != 0:
        raise ValueError(f"the reduced solution requires delta = q = 0, got delta={hp.delta!r}, q={hp.q!r}")
    if hp.epsilon > 0:
        raise HeunParameters.PositiveEpsilon(hp.epsilon)
    a = hp.alpha / (2.0 * hp.epsilon)
    b = 0.5 * (hp.gamma + 1.0)
    x = -0.5 * hp.epsilon * z * z
    value = 0.0
    if c1 != 0:
        value += c1 * fn.kummer_m(a, b, x)
    if c2 != 0:
        value += c2 * fn.tricomi_u(a, b, x)
    return value

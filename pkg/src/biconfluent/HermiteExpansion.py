from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from biconfluent.HeunParameters import HeunParameters
from biconfluent.Recurrence import Variant, recurrence_coeffs, termination_value
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["HermiteExpansion", "SeriesPrefix", "expansion_coefficients"]

logger = logging.getLogger(__name__)

#: Relative tolerance of the termination polynomial at an admissible `q`.
ROOT_TOLERANCE = 1e-9

#: Relative size below which a pivot `R_n` is treated as zero.
PIVOT_TOLERANCE = 1e-12


def _falling(x: float, k: int) -> float:
    result = 1.0
    for j in range(k):
        result *= x - j
    return result


@dataclass(frozen=True)
class SeriesPrefix:
    """
    Leading Taylor coefficients of `u(z)` around `z = 0`, each with the sum of the absolute values of its
    contributions as a magnitude scale.
    """

    coefficients: tuple[float, ...]
    scales: tuple[float, ...]

    def vanishing_order(self, rel: float = 1e-9) -> int:
        """
        The number of leading coefficients that vanish relative to their scale.
        """

        for k, (value, scale) in enumerate(zip(self.coefficients, self.scales)):
            if abs(value) > rel * scale:
                return k
        return len(self.coefficients)

    def truncated(self, rel: float = 1e-9) -> tuple[float, ...]:
        """
        The coefficients with every leading coefficient that vanishes relative to its scale set to zero.
        """

        order = self.vanishing_order(rel)
        return (0.0,) * order + self.coefficients[order:]


@dataclass(frozen=True)
class HermiteExpansion:
    """
    A terminated solution `u(z) = sum_{n=0..N} c_n H_{nu0+n}(xi)` of the bi-confluent Heun equation, with
    `xi = xi_scale * (z + xi_shift)` and the normalization `c_0 = 1`.
    """

    class Error(Exception):
        pass

    @dataclass
    class LevelMismatch(Error):
        N: int
        deviation: float

        def __str__(self) -> str:
            return f"the parameters do not terminate the recurrence at N={self.N} (deviation {self.deviation:.3g})"

    @dataclass
    class NonRoot(Error):
        q: float
        residual: float

        def __str__(self) -> str:
            return f"q={self.q!r} is not a root of the termination polynomial (relative residual {self.residual:.3g})"

    @dataclass
    class DegeneratePivot(Error):
        n: int

        def __str__(self) -> str:
            return f"the recurrence pivot R_{self.n} vanishes"

    nu0: float
    n_max: int
    coeffs: tuple[float, ...]
    xi_shift: float
    xi_scale: float
    params: HeunParameters
    variant: Variant
    sign_s0: int

    def xi(self, z: float) -> float:
        return self.xi_scale * (z + self.xi_shift)

    def u(self, z: float, fn: SpecialFunctions = DEFAULT) -> float:
        xi = self.xi(z)
        return math.fsum(c * fn.hermite_nu(self.nu0 + n, xi) for n, c in enumerate(self.coeffs))

    def continuation(self) -> tuple[float, float]:
        """
        The coefficients `c_{N+1}` and `c_{N+2}` the recurrence produces after the last kept term. Both vanish for a
        terminated expansion. A vanishing pivot yields `nan` for the affected coefficient.
        """

        extended = list(self.coeffs)
        for n in (self.n_max + 1, self.n_max + 2):
            r, _, _ = recurrence_coeffs(self.params, self.variant, n, self.sign_s0)
            _, q_prev, _ = recurrence_coeffs(self.params, self.variant, n - 1, self.sign_s0)
            _, _, p_prev = recurrence_coeffs(self.params, self.variant, n - 2, self.sign_s0) if n >= 2 else (0, 0, 0.0)
            before = extended[n - 2] if n >= 2 else 0.0
            numerator = q_prev * extended[n - 1] + p_prev * before
            extended.append(-numerator / r if r != 0 else math.nan)
        return extended[-2], extended[-1]

    def power_series_prefix(self, K: int, fn: SpecialFunctions = DEFAULT) -> SeriesPrefix:
        """
        Taylor coefficients of `u(z)` for `z^0..z^K`, from `d^k/dz^k H_nu(xi) = (2 s0)^k nu (nu-1)...(nu-k+1)
        H_{nu-k}(xi)`. For an admissible accessory parameter whose solution vanishes at the origin, the leading `N+1`
        coefficients vanish and `u` behaves like `z^(N+1)`.
        """

        if K < 0:
            raise ValueError(f"K must be non-negative, got {K!r}")
        y0 = self.xi(0.0)
        coefficients, scales = [], []
        for k in range(K + 1):
            factor = (2.0 * self.xi_scale) ** k / math.factorial(k)
            terms = [
                c * _falling(self.nu0 + n, k) * fn.hermite_nu(self.nu0 + n - k, y0)
                for n, c in enumerate(self.coeffs)
                if _falling(self.nu0 + n, k) != 0.0
            ]
            coefficients.append(factor * math.fsum(terms))
            scales.append(abs(factor) * math.fsum(abs(t) for t in terms))
        return SeriesPrefix(tuple(coefficients), tuple(scales))


def expansion_coefficients(
    hp: HeunParameters,
    N: int,
    sign_s0: int = 1,
    variant: Variant = Variant.NU0_FULL,
) -> HermiteExpansion:
    """
    Solve the three-term recurrence forward from `c_0 = 1` for a terminating expansion of order *N*.

    :raise HermiteExpansion.LevelMismatch: If *hp* does not satisfy the termination condition of *variant* (`gamma
        = -N` or `alpha/epsilon = -N`).
    :raise HermiteExpansion.NonRoot: If `hp.q` is not a root of the termination polynomial.
    :raise HermiteExpansion.DegeneratePivot: If some `R_n` with `1 <= n <= N` vanishes.
    """

    if N < 0:
        raise ValueError(f"termination order must be non-negative, got {N!r}")
    deviation = hp.gamma + N if variant is Variant.NU0_FULL else hp.mu - N
    if abs(deviation) > 1e-9 * max(1.0, N):
        raise HermiteExpansion.LevelMismatch(N, deviation)
    value, scale = termination_value(hp, N, variant)
    if abs(value) > ROOT_TOLERANCE * scale:
        raise HermiteExpansion.NonRoot(hp.q, abs(value) / scale)

    t = abs(hp.s0(1))
    coeffs = [1.0]
    for n in range(1, N + 1):
        r, _, _ = recurrence_coeffs(hp, variant, n, sign_s0)
        shift = hp.gamma + n if variant is Variant.NU0_FULL else n - hp.gamma
        if abs(r) <= PIVOT_TOLERANCE * n * (abs(hp.alpha) + (abs(shift) + 1.0) * abs(hp.epsilon)) / t:
            raise HermiteExpansion.DegeneratePivot(n)
        _, q_prev, _ = recurrence_coeffs(hp, variant, n - 1, sign_s0)
        numerator = q_prev * coeffs[n - 1]
        if n >= 2:
            _, _, p_prev = recurrence_coeffs(hp, variant, n - 2, sign_s0)
            numerator += p_prev * coeffs[n - 2]
        coeffs.append(-numerator / r)

    s0 = hp.s0(sign_s0)
    logger.debug("expansion of order %d with nu0=%s: %r", N, variant.nu0(hp), coeffs)
    return HermiteExpansion(
        nu0=variant.nu0(hp),
        n_max=N,
        coeffs=tuple(coeffs),
        xi_shift=hp.xi_shift,
        xi_scale=s0,
        params=hp,
        variant=variant,
        sign_s0=sign_s0,
    )

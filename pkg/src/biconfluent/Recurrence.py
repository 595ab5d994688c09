from __future__ import annotations

import enum
import functools
import math

from biconfluent.HeunParameters import HeunParameters
from biconfluent.Polynomial import Polynomial

__all__ = ["Variant", "recurrence_coeffs", "q_polynomial", "q_polynomial_coefficients", "termination_value"]

FULL_VARIABLES = ("q", "delta", "epsilon", "alpha")
ZERO_VARIABLES = ("q", "delta", "epsilon", "gamma")


class Variant(enum.Enum):
    """
    The two admissible lowest Hermite indices of the expansion `u = sum_n c_n H_{nu0+n}(xi)`.
    """

    #: `nu0 = gamma - alpha/epsilon`; the series terminates for `gamma = -N`.
    NU0_FULL = "nu0_full"

    #: `nu0 = 0`; Hermite polynomials, the series terminates for `alpha/epsilon = -N`.
    NU0_ZERO = "nu0_zero"

    def nu0(self, hp: HeunParameters) -> float:
        return hp.gamma + hp.mu if self is Variant.NU0_FULL else 0.0


def recurrence_coeffs(hp: HeunParameters, variant: Variant, n: int, sign_s0: int) -> tuple[float, float, float]:
    """
    The coefficients `(R_n, Q_n, P_n)` of the three-term recurrence `R_n c_n + Q_{n-1} c_{n-1} + P_{n-2} c_{n-2} = 0`.

    :raise HeunParameters.PositiveEpsilon: If `epsilon > 0`.
    """

    if n < 0:
        raise ValueError(f"recurrence index must be non-negative, got {n!r}")
    t = abs(hp.s0(1))
    if variant is Variant.NU0_FULL:
        r = n * (-hp.alpha + (hp.gamma + n) * hp.epsilon) / t
        q = -sign_s0 * (hp.q + (hp.gamma + n) * hp.delta)
        p = (hp.gamma + n) * hp.epsilon / (2.0 * t)
    else:
        r = n * (hp.alpha + (n - hp.gamma) * hp.epsilon) / t
        q = -sign_s0 * (hp.q + hp.delta * (hp.alpha / hp.epsilon + n))
        p = (hp.alpha + n * hp.epsilon) / (2.0 * t)
    return r, q, p


def _continuant_terms(N: int, variant: Variant) -> tuple[list[Polynomial], list[Polynomial]]:
    """
    Diagonal entries `p_k` and products `m_k = R_k P_{k-1}` of the termination determinant, with the termination
    condition substituted (`gamma = -N` or `alpha = -N epsilon`).
    """

    variables = FULL_VARIABLES if variant is Variant.NU0_FULL else ZERO_VARIABLES
    q, delta, epsilon = (Polynomial.variable(v, variables) for v in variables[:3])
    diagonal, products = [], [Polynomial.constant(0, variables)]
    if variant is Variant.NU0_FULL:
        alpha = Polynomial.variable("alpha", variables)
        for k in range(N + 1):
            gamma_k = k - N
            diagonal.append(q + delta * gamma_k)
            if k:
                products.append((alpha - epsilon * gamma_k) * (k * (gamma_k - 1)))
    else:
        gamma = Polynomial.variable("gamma", variables)
        for k in range(N + 1):
            diagonal.append(q + delta * (k - N))
            if k:
                products.append(-epsilon * (gamma * -1 + (k - N)) * (k * (k - 1 - N)))
    return diagonal, products


@functools.lru_cache(maxsize=None)
def q_polynomial(N: int, variant: Variant = Variant.NU0_FULL) -> Polynomial:
    """
    The termination polynomial of degree `N+1` in the accessory parameter `q`: the continuant of the tridiagonal system
    for `c_0..c_N` with `c_{N+1} = 0`, expanded with exact rational coefficients. For #Variant.NU0_FULL the variables
    are `(q, delta, epsilon, alpha)`, for #Variant.NU0_ZERO they are `(q, delta, epsilon, gamma)`.

    >>> str(q_polynomial(1))
    'q^2 - q*delta + alpha'
    """

    if N < 0:
        raise ValueError(f"termination order must be non-negative, got {N!r}")
    diagonal, products = _continuant_terms(N, variant)
    variables = diagonal[0].variables
    before, current = Polynomial.constant(1, variables), diagonal[0]
    for k in range(1, N + 1):
        before, current = current, diagonal[k] * current - products[k] * before
    return current


def q_polynomial_coefficients(N: int, hp: HeunParameters, variant: Variant = Variant.NU0_FULL) -> list[float]:
    """
    Numeric coefficients of the termination polynomial in `q` (lowest power first) at the parameters *hp*.
    """

    values = {"delta": hp.delta, "epsilon": hp.epsilon, "alpha": hp.alpha, "gamma": hp.gamma}
    return q_polynomial(N, variant).collect("q", values)


def termination_value(hp: HeunParameters, N: int, variant: Variant = Variant.NU0_FULL) -> tuple[float, float]:
    """
    Evaluate the continuant at `hp.q` with the actual (not substituted) parameters. Returns the value together with
    a magnitude scale accumulated from the absolute values of the same recursion. Every diagonal entry contributes at
    least the natural size `max(|delta|, |alpha|^(1/2), |epsilon|^(1/2))` of the roots to the scale.
    """

    reference = max(abs(hp.delta), math.sqrt(abs(hp.alpha)), math.sqrt(abs(hp.epsilon)))

    def diagonal(k: int) -> tuple[float, float]:
        shift = (hp.gamma + k) * hp.delta if variant is Variant.NU0_FULL else hp.delta * (hp.alpha / hp.epsilon + k)
        return hp.q + shift, abs(hp.q) + abs(shift) + reference

    def product(k: int) -> float:
        if variant is Variant.NU0_FULL:
            return k * (hp.gamma + k - 1) * (hp.alpha - (hp.gamma + k) * hp.epsilon)
        return k * (hp.alpha + (k - hp.gamma) * hp.epsilon) * (hp.alpha + (k - 1) * hp.epsilon) / -hp.epsilon

    before, before_scale = 1.0, 1.0
    current, current_scale = diagonal(0)
    for k in range(1, N + 1):
        p, p_scale = diagonal(k)
        m = product(k)
        before, current = current, p * current - m * before
        before_scale, current_scale = current_scale, p_scale * current_scale + abs(m) * before_scale
    return current, max(current_scale, math.ulp(1.0))

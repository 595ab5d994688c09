from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction

from numpy.polynomial import Polynomial as ZPolynomial

from biconfluent.HermiteExpansion import HermiteExpansion
from biconfluent.HeunParameters import HeunParameters
from biconfluent.Polynomial import Polynomial
from biconfluent.Recurrence import Variant, recurrence_coeffs
from biconfluent.SpecialFunctions import DEFAULT, SpecialFunctions

__all__ = ["ContiguousSolution", "reduce_to_contiguous"]

#: Variables of the exact contiguous polynomials. `s0` stands for the scale of the Hermite argument and is kept
#: symbolic because it is irrational in `epsilon`; `s0^2 = -epsilon/2` is substituted after every product.
EXACT_VARIABLES = ("z", "s0")


def _reduce(p: Polynomial, s0_squared: Fraction) -> Polynomial:
    terms: dict[tuple[int, ...], Fraction] = {}
    for (z_power, s0_power), coefficient in p.terms.items():
        key = (z_power, s0_power % 2)
        terms[key] = terms.get(key, Fraction(0)) + coefficient * s0_squared ** (s0_power // 2)
    return Polynomial.of(p.variables, terms)


def _numeric(p: Polynomial, s0: float) -> ZPolynomial:
    return ZPolynomial(p.collect("z", {"s0": s0})).trim()


@dataclass(frozen=True)
class ContiguousSolution:
    """
    A terminated solution written with two contiguous Hermite functions,

        u(z) = P0(z) H_mu(xi) + P1(z) H_{mu-1}(xi),    mu = -alpha/epsilon,

    where `P0` has degree `N-2` and `P1` has degree `N-1` for `N >= 2`. The polynomials are normalized like the
    explicit low order solutions, e.g. `P0 = -s0 (q - delta)` and `P1 = alpha` for `N = 1`.

    :param expansion_factor: The factor that converts this normalization to that of the #HermiteExpansion (with
        `c_0 = 1`) it was reduced from, or `None` if it was built from the parameters directly.
    :param exact: `P0` and `P1` with exact rational coefficients over the (binary) input parameters, as polynomials
        in #EXACT_VARIABLES. The numeric #p0 and #p1 are these evaluated at the actual `s0`.
    """

    p0: ZPolynomial
    p1: ZPolynomial
    index: float
    params: HeunParameters
    sign_s0: int
    n_max: int
    expansion_factor: float | None = None
    exact: tuple[Polynomial, Polynomial] | None = None

    @classmethod
    def from_parameters(cls, hp: HeunParameters, N: int, sign_s0: int = 1) -> ContiguousSolution:
        """
        Build the contiguous form for `gamma = -N` without dividing by any recurrence pivot. The polynomials are
        defined for any `q`; they describe a solution of the differential equation only when `q` is a root of the
        termination polynomial. The construction stays valid where #expansion_coefficients() reports a degenerate
        pivot.
        """

        if abs(hp.gamma + N) > 1e-9 * max(1.0, N):
            raise HermiteExpansion.LevelMismatch(N, hp.gamma + N)

        s0_value = hp.s0(sign_s0)
        q, delta, epsilon, alpha = (Fraction(v) for v in (hp.q, hp.delta, hp.epsilon, hp.alpha))
        gamma = -N
        mu = -alpha / epsilon
        s0_squared = -epsilon / 2
        z, s0 = (Polynomial.variable(v, EXACT_VARIABLES) for v in EXACT_VARIABLES)
        zero, one = Polynomial.constant(0, EXACT_VARIABLES), Polynomial.constant(1, EXACT_VARIABLES)

        # epsilon / t with t = |s0| = sign_s0 * s0.
        epsilon_over_t = s0 * (-2 * sign_s0)
        two_xi = s0 * z * 2 + s0 * (2 * delta / epsilon)

        # Scaled recurrence coefficients d_n = c_n * R_1 * ... * R_n. The product P_{n-2} R_{n-1} carries 1/t^2.
        scaled = [Fraction(1)]
        for n in range(1, N + 1):
            value = sign_s0 * (q + (gamma + n - 1) * delta) * scaled[n - 1]
            if n >= 2:
                product = (gamma + n - 2) * epsilon * (n - 1) * (-alpha + (gamma + n - 1) * epsilon) / (2 * s0_squared)
                value -= product * scaled[n - 2]
            scaled.append(value)

        # H_{mu-k} = (A_k H_mu + B_k H_{mu-1}) / D_k with D_k = prod_{i=1..k-1} 2 (mu - i).
        lowered: list[tuple[Polynomial, Polynomial]] = [(one, zero), (zero, one)]
        for k in range(2, N + 1):
            factor = Fraction(1) if k == 2 else 2 * (mu - k + 2)
            (a1, b1), (a2, b2) = lowered[k - 1], lowered[k - 2]
            lowered.append(
                (_reduce(two_xi * a1 - a2 * factor, s0_squared), _reduce(two_xi * b1 - b2 * factor, s0_squared))
            )

        p0, p1 = zero, zero
        for n in range(N + 1):
            weight = one
            if n < N:
                weight = weight * (mu / 2 ** (N - 1 - n))
                for j in range(n + 1, N + 1):
                    weight = _reduce(weight * epsilon_over_t * j, s0_squared)
            a, b = lowered[N - n]
            p0 = p0 + a * weight * scaled[n]
            p1 = p1 + b * weight * scaled[n]

        if N >= 1:
            normalization = s0 * -(sign_s0**N)
            p0, p1 = p0 * normalization, p1 * normalization
        p0, p1 = _reduce(p0, s0_squared), _reduce(p1, s0_squared)
        return cls(_numeric(p0, s0_value), _numeric(p1, s0_value), hp.mu, hp, sign_s0, N, exact=(p0, p1))

    def xi(self, z: float) -> float:
        return self.params.s0(self.sign_s0) * (z + self.params.xi_shift)

    def u(self, z: float, fn: SpecialFunctions = DEFAULT) -> float:
        xi = self.xi(z)
        value = float(self.p0(z)) * fn.hermite_nu(self.index, xi)
        p1 = float(self.p1(z))
        if p1 != 0.0:
            value += p1 * fn.hermite_nu(self.index - 1.0, xi)
        return value



def reduce_to_contiguous(exp: HermiteExpansion) -> ContiguousSolution:
    """
    Express a terminated #HermiteExpansion of the `nu0 = gamma - alpha/epsilon` family through the contiguous pair
    `H_mu`, `H_{mu-1}` by applying `H_{nu-1} = (2 xi H_nu - H_{nu+1}) / (2 nu)` downwards.
    """

    if exp.variant is not Variant.NU0_FULL:
        raise ValueError("only expansions with nu0 = gamma - alpha/epsilon have a contiguous form")
    contig = ContiguousSolution.from_parameters(exp.params, exp.n_max, exp.sign_s0)
    if exp.n_max == 0:
        return dataclasses.replace(contig, expansion_factor=1.0)
    pivots = math.prod(
        recurrence_coeffs(exp.params, Variant.NU0_FULL, n, exp.sign_s0)[0] for n in range(1, exp.n_max + 1)
    )
    normalization = -abs(exp.params.s0(1)) * exp.sign_s0 ** (exp.n_max + 1)
    return dataclasses.replace(contig, expansion_factor=1.0 / (pivots * normalization))

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import scipy.integrate
import scipy.special

from biconfluent.EvalPolicy import EvalPolicy

__all__ = ["DEFAULT", "SpecialFunctions", "is_nonpositive_integer"]

logger = logging.getLogger(__name__)

#: Half width of the symmetric average used for #SpecialFunctions.tricomi_u() near integer `b`.
TRICOMI_INTEGER_OFFSET = 1e-6

#: Largest tolerated ratio between the magnitude of the two connection terms and the result of #tricomi_u().
TRICOMI_MAX_CANCELLATION = 1e12


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _is_nonnegative_integer(x: float) -> bool:
    return x >= 0 and x == math.floor(x)


@dataclass(frozen=True)
class SpecialFunctions:
    """
    Gamma, Kummer, Tricomi and Hermite functions of real arguments, evaluated under an #EvalPolicy.

    The Hermite function of arbitrary real order is defined through the pair of Kummer series

        H_nu(y) = 2^nu sqrt(pi) [ M(-nu/2, 1/2, y^2) / Gamma((1-nu)/2) - 2y M((1-nu)/2, 3/2, y^2) / Gamma(-nu/2) ]

    which reduces to the Hermite polynomial for non-negative integer orders.

    >>> fn = SpecialFunctions()
    >>> fn.hermite_nu(2, 1.0)
    2.0
    >>> round(fn.gamma(5.0), 12)
    24.0
    """

    class Error(Exception):
        pass

    @dataclass
    class PoleError(Error):
        function: str
        x: float

        def __str__(self) -> str:
            return f"{self.function} has a pole at {self.x!r}"

    @dataclass
    class DomainError(Error):
        message: str

        def __str__(self) -> str:
            return self.message

    @dataclass
    class NonConvergence(Error):
        function: str
        terms: int

        def __str__(self) -> str:
            return f"{self.function} did not converge within {self.terms} terms"

    @dataclass
    class PrecisionLoss(Error):
        function: str
        cancellation: float

        def __str__(self) -> str:
            return f"{self.function} lost precision (cancellation ratio {self.cancellation:.3g})"

    @dataclass
    class Overflow(Error):
        nu: float
        y: float

        def __str__(self) -> str:
            return f"H_{self.nu}({self.y}) overflows double precision"

    policy: EvalPolicy = field(default_factory=EvalPolicy)

    # Gamma function

    def gamma(self, x: float) -> float:
        if is_nonpositive_integer(x):
            raise self.PoleError("gamma", x)
        return float(scipy.special.gamma(x))

    def rgamma(self, x: float) -> float:
        """
        Returns `1/Gamma(x)`, which is exactly zero at the non-positive integers.
        """

        if is_nonpositive_integer(x):
            return 0.0
        return float(scipy.special.rgamma(x))

    # Confluent hypergeometric functions

    def kummer_m(self, a: float, b: float, z: float) -> float:
        """
        Kummer's function `M(a, b, z) = 1F1(a; b; z)`. For `z < -1` the series is summed after Kummer's
        transformation `M(a, b, z) = e^z M(b - a, b, -z)` unless it terminates.
        """

        if is_nonpositive_integer(b):
            raise self.PoleError("kummer_m", b)
        if z < -1.0 and not is_nonpositive_integer(a):
            return math.exp(z) * self._kummer_series(b - a, b, -z)
        return self._kummer_series(a, b, z)

    def _kummer_series(self, a: float, b: float, z: float) -> float:
        terms = [1.0]
        term = 1.0
        running = 1.0
        for k in range(self.policy.max_terms):
            ratio = (a + k) * z / ((b + k) * (k + 1))
            term *= ratio
            if term == 0.0:
                break
            terms.append(term)
            running += term
            if abs(term) <= self.policy.series_tol * abs(running) and abs(ratio) < 0.5:
                break
        else:
            raise self.NonConvergence("kummer_m", self.policy.max_terms)
        return math.fsum(terms)

    def tricomi_u(self, a: float, b: float, z: float) -> float:
        """
        Tricomi's function `U(a, b, z)` for `z > 0` from the connection formula

            U = Gamma(1-b)/Gamma(a-b+1) M(a, b, z) + Gamma(b-1)/Gamma(a) z^(1-b) M(a-b+1, 2-b, z).

        For integer `b` the formula is singular, and the value is taken as the average of the evaluations at
        `b +- 1e-6`.
        """

        if not z > 0:
            raise self.DomainError(f"tricomi_u requires z > 0, got {z!r}")
        if a == 0:
            return 1.0
        if abs(b - round(b)) < TRICOMI_INTEGER_OFFSET:
            b0 = float(round(b))
            lower = self._tricomi_connection(a, b0 - TRICOMI_INTEGER_OFFSET, z)
            upper = self._tricomi_connection(a, b0 + TRICOMI_INTEGER_OFFSET, z)
            return 0.5 * (lower + upper)
        return self._tricomi_connection(a, b, z)

    def _tricomi_connection(self, a: float, b: float, z: float) -> float:
        first = self.gamma(1.0 - b) * self.rgamma(a - b + 1.0) * self.kummer_m(a, b, z)
        second = self.gamma(b - 1.0) * self.rgamma(a) * z ** (1.0 - b) * self.kummer_m(a - b + 1.0, 2.0 - b, z)
        value = first + second
        magnitude = max(abs(first), abs(second))
        if magnitude > 0 and (value == 0.0 or magnitude / abs(value) > TRICOMI_MAX_CANCELLATION):
            raise self.PrecisionLoss("tricomi_u", math.inf if value == 0.0 else magnitude / abs(value))
        return value

    # Hermite functions

    def hermite_nu(self, nu: float, y: float) -> float:
        if _is_nonnegative_integer(nu):
            value = self._hermite_polynomial(int(nu), y)
        elif y > 0 and y * y > self.policy.recurrence_switch_threshold and nu < 0.5 * y * y:
            value = self._hermite_upward(nu, y)
        else:
            value = self._hermite_series(nu, y)
        if not math.isfinite(value):
            raise self.Overflow(nu, y)
        return value

    def hermite_nu_deriv(self, nu: float, y: float) -> float:
        """
        Derivative `d/dy H_nu(y) = 2 nu H_{nu-1}(y)`.
        """

        if nu == 0:
            return 0.0
        return 2.0 * nu * self.hermite_nu(nu - 1.0, y)

    def hermite_oscillatory_approx(self, nu: float, y: float) -> float:
        """
        Cosine approximation of `H_nu(y)` in the oscillatory region `y**2 < 2 nu + 1`:

            2 e^(y^2/2) Gamma(nu) / ((1 - y^2/(2nu+1))^(1/4) Gamma(nu/2)) cos(pi nu/2 - y (2nu - y^2/3 + 1)^(1/2))
        """

        if not y * y < 2.0 * nu + 1.0 or nu <= 0:
            raise self.DomainError(f"({nu!r}, {y!r}) is outside the oscillatory region y^2 < 2 nu + 1")
        amplitude = 2.0 * math.exp(0.5 * y * y) * self.gamma(nu) / self.gamma(0.5 * nu)
        amplitude /= (1.0 - y * y / (2.0 * nu + 1.0)) ** 0.25
        return amplitude * math.cos(0.5 * math.pi * nu - y * math.sqrt(2.0 * nu - y * y / 3.0 + 1.0))

    def _hermite_polynomial(self, n: int, y: float) -> float:
        previous, current = 1.0, 2.0 * y
        if n == 0:
            return previous
        for k in range(1, n):
            previous, current = current, 2.0 * y * current - 2.0 * k * previous
        return current

    def _hermite_series(self, nu: float, y: float) -> float:
        z = y * y
        even = self.rgamma(0.5 * (1.0 - nu))
        odd = self.rgamma(-0.5 * nu)
        total = 0.0
        if even != 0.0:
            total += even * self.kummer_m(-0.5 * nu, 0.5, z)
        if odd != 0.0:
            total -= 2.0 * y * odd * self.kummer_m(0.5 * (1.0 - nu), 1.5, z)
        return 2.0**nu * math.sqrt(math.pi) * total

    def _hermite_integral(self, nu: float, y: float) -> float:
        """
        Integral representation `H_nu(y) = 1/Gamma(-nu) int_0^inf exp(-t^2 - 2yt) t^(-nu-1) dt`, valid for `nu < 0`.
        """

        power = -nu - 1.0
        integral, _ = scipy.integrate.quad(
            lambda t: math.exp(-t * t - 2.0 * y * t) * t**power,
            0.0,
            math.inf,
            epsabs=0.0,
            epsrel=1e-13,
            limit=200,
        )
        return float(integral) * self.rgamma(-nu)

    def _hermite_upward(self, nu: float, y: float) -> float:
        if nu <= -1.0:
            return self._hermite_integral(nu, y)

        # Seed at two orders <= -1 sharing the fractional part of nu, then recur upwards. The recurrence is stable
        # while nu < y^2/2 because H_nu(y) is the dominant solution there.
        order = nu - math.floor(nu) - 3.0
        previous = self._hermite_integral(order, y)
        current = self._hermite_integral(order + 1.0, y)
        order += 1.0
        while order < nu - 0.5:
            previous, current = current, 2.0 * y * current - 2.0 * order * previous
            order += 1.0
        logger.debug("H_%s(%s) computed by upward recurrence from order %s", nu, y, nu - math.floor(nu) - 3.0)
        return current


#: A shared instance with the default #EvalPolicy.
DEFAULT = SpecialFunctions()

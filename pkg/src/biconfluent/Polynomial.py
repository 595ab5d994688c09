from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from frozendict import frozendict

__all__ = ["Polynomial"]

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    """
    A sparse multivariate polynomial with exact rational coefficients. Terms are kept in an immutable mapping from
    exponent tuples (ordered like #variables) to non-zero coefficients.

    >>> q, delta = Polynomial.variable("q", ("q", "delta")), Polynomial.variable("delta", ("q", "delta"))
    >>> str(q * q - delta * q)
    'q^2 - q*delta'
    """

    variables: tuple[str, ...]
    terms: frozendict[Exponents, Fraction]

    def __post_init__(self) -> None:
        for exponents, coefficient in self.terms.items():
            if len(exponents) != len(self.variables):
                raise ValueError(f"exponent tuple {exponents!r} does not match variables {self.variables!r}")
            if coefficient == 0:
                raise ValueError("Polynomial terms must not carry zero coefficients")

    @classmethod
    def of(cls, variables: tuple[str, ...], terms: Mapping[Exponents, Scalar]) -> Polynomial:
        return cls(variables, frozendict({k: Fraction(v) for k, v in terms.items() if v != 0}))

    @classmethod
    def constant(cls, value: Scalar, variables: tuple[str, ...]) -> Polynomial:
        return cls.of(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: tuple[str, ...]) -> Polynomial:
        exponents = tuple(1 if v == name else 0 for v in variables)
        if sum(exponents) != 1:
            raise ValueError(f"unknown variable {name!r}, expected one of {variables!r}")
        return cls.of(variables, {exponents: 1})

    def _check_compatible(self, other: Polynomial) -> None:
        if other.variables != self.variables:
            raise ValueError(f"incompatible polynomial variables {self.variables!r} and {other.variables!r}")

    def _coerce(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        return Polynomial.constant(other, self.variables)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = self._coerce(other)
        result = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            result[exponents] = result.get(exponents, Fraction(0)) + coefficient
        return Polynomial.of(self.variables, result)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial.of(self.variables, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        other = self._coerce(other)
        result: dict[Exponents, Fraction] = {}
        for lhs_exp, lhs_coeff in self.terms.items():
            for rhs_exp, rhs_coeff in other.terms.items():
                exponents = tuple(a + b for a, b in zip(lhs_exp, rhs_exp))
                result[exponents] = result.get(exponents, Fraction(0)) + lhs_coeff * rhs_coeff
        return Polynomial.of(self.variables, result)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.variables, self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        index = self.variables.index(name)
        return max((exponents[index] for exponents in self.terms), default=0)

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.terms.get(exponents, Fraction(0))

    def evaluate(self, values: Mapping[str, float]) -> float:
        """
        Evaluate the polynomial numerically at the given variable values.
        """

        total = 0.0
        for exponents, coefficient in self.terms.items():
            term = float(coefficient)
            for name, power in zip(self.variables, exponents):
                if power:
                    term *= values[name] ** power
            total += term
        return total

    def collect(self, name: str, values: Mapping[str, float]) -> list[float]:
        """
        Substitute numeric values for every variable but *name* and return the coefficients of the resulting
        univariate polynomial in *name*, lowest power first.
        """

        index = self.variables.index(name)
        coefficients = [0.0] * (self.degree(name) + 1)
        for exponents, coefficient in self.terms.items():
            term = float(coefficient)
            for other, power in zip(self.variables, exponents):
                if other != name and power:
                    term *= values[other] ** power
            coefficients[exponents[index]] += term
        return coefficients

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponents in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            coefficient = self.terms[exponents]
            factors = [n if p == 1 else f"{n}^{p}" for n, p in zip(self.variables, exponents) if p]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            sign = "-" if coefficient < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

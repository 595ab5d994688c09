from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import scipy.linalg
from numpy.polynomial import Polynomial as XPolynomial

from biconfluent.QesParams import QesParams

__all__ = ["QesSolution", "QesWavefunction", "recursion_matrix", "qes_spectrum", "qes_wavefunction"]

logger = logging.getLogger(__name__)


def recursion_matrix(p: QesParams) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """
    The diagonal, upper and lower diagonals of the tridiagonal matrix `T` with `T c = E c` for the coefficients of
    `P_M(x) = sum_j c_j x^j`, `x = r^2`. With `p = 2s - 1/2` they are

        T[j, j]   = b (4j + 2p + 1)
        T[j, j+1] = -(j + 1)(4j + 4p + 2)
        T[j, j-1] = -4a (M - j + 1)

    >>> diagonal, upper, lower = recursion_matrix(QesParams(a=1.0, b=0.0, s=1.0, M=1))
    >>> upper.tolist(), lower.tolist()
    ([-8.0], [-4.0])
    """

    power = p.left_power
    j = np.arange(p.M + 1, dtype=float)
    diagonal = p.b * (4.0 * j + 2.0 * power + 1.0)
    upper = -(j[:-1] + 1.0) * (4.0 * j[:-1] + 4.0 * power + 2.0)
    lower = -4.0 * p.a * (p.M - j[1:] + 1.0)
    return diagonal, upper, lower


@dataclass(frozen=True)
class QesWavefunction:
    """
    The unnormalized state `r^(2s - 1/2) exp(-a r^4/4 - b r^2/2) P(r^2)`.
    """

    params: QesParams
    energy: float
    poly: XPolynomial

    def __call__(self, r: float) -> float:
        if r < 0:
            raise ValueError(f"the radius must be non-negative, got {r!r}")
        if r == 0:
            return 0.0
        x = r * r
        log_prefactor = self.params.left_power * math.log(r) - 0.25 * self.params.a * x * x - 0.5 * self.params.b * x
        return math.exp(log_prefactor) * float(self.poly(x))

    def sample(self, r: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return np.array([self(float(x)) for x in np.asarray(r, dtype=float).ravel()])

    def node_count(self) -> int:
        """The number of sign changes of `P` on the positive axis, i.e. of `psi` for `r > 0`."""

        roots = self.poly.roots()
        real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots))].real
        return int(np.count_nonzero(real > 0))


@dataclass(frozen=True)
class QesSolution:
    """
    The `M + 1` exactly known energies of a #QesParams potential in ascending order, each with the coefficients of
    `P_M` normalized to `c_0 = 1`.
    """

    class Error(Exception):
        pass

    @dataclass
    class NoSuchState(Error):
        which: int
        M: int

        def __str__(self) -> str:
            return f"state {self.which} does not exist, the closed-form states are 0..{self.M}"

    params: QesParams
    energies: tuple[float, ...]
    poly_coeffs: tuple[tuple[float, ...], ...]

    def wavefunction(self, which: int) -> QesWavefunction:
        if not 0 <= which <= self.params.M:
            raise self.NoSuchState(which, self.params.M)
        return QesWavefunction(self.params, self.energies[which], XPolynomial(self.poly_coeffs[which]))


def qes_spectrum(p: QesParams) -> QesSolution:
    """
    Solve the tridiagonal eigenproblem of #recursion_matrix(). The off-diagonal products are positive, so the matrix
    is brought to symmetric form by a diagonal similarity `D T D^-1` and the eigenvalues are real.
    """

    diagonal, upper, lower = recursion_matrix(p)
    if p.M == 0:
        return QesSolution(p, (float(diagonal[0]),), ((1.0,),))

    # d_{j+1} = d_j (T[j, j+1] / T[j+1, j])^(1/2)
    scale = np.concatenate(([1.0], np.cumprod(np.sqrt(upper / lower))))
    off_diagonal = -np.sqrt(upper * lower)
    energies, vectors = scipy.linalg.eigh_tridiagonal(diagonal, off_diagonal)

    coeffs = []
    for k in range(p.M + 1):
        c = vectors[:, k] / scale
        coeffs.append(tuple(float(x) for x in c / c[0]))
    logger.debug("QES energies for %s: %r", p, energies)
    return QesSolution(p, tuple(float(e) for e in energies), tuple(coeffs))


def qes_wavefunction(p: QesParams, which: int, solution: QesSolution | None = None) -> QesWavefunction:
    """
    The closed-form state *which* (counted from 0) of the QES potential.

    :raise QesSolution.NoSuchState: If *which* is not in `0..M`.
    """

    return (solution or qes_spectrum(p)).wavefunction(which)

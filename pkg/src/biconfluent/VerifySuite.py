"""
Named self-checks of the library, grouped into suites that the `verify` command runs. Every check measures a
deviation from a known value and passes when it stays within its tolerance.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
from frozendict import frozendict

from biconfluent.Approximations import Approximations
from biconfluent.BoundState import BoundState
from biconfluent.BranchChoice import BranchChoice
from biconfluent.CurveTracer import trace_curve
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.HeunParameters import map_potential
from biconfluent.LevelSpectrum import energies_for_level
from biconfluent.Numerov import ode_residual, shoot_eigenvalue
from biconfluent.OriginConditions import origin_condition_n0
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.QesParams import QES_UNITS, QesParams, qes_potential, qes_to_heun
from biconfluent.QesSolution import qes_spectrum
from biconfluent.RadialGrid import RadialGrid
from biconfluent.Recurrence import Variant, q_polynomial_coefficients
from biconfluent.SpecialFunctions import DEFAULT
from biconfluent.Wavefunction import assemble_level_wavefunction

__all__ = ["VerifyOptions", "Check", "CheckResult", "VerifySuite", "SUITES", "run_suites"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyOptions:
    """
    :param q_constant_shift: Added to the constant coefficient of the termination polynomial before its roots are
        taken. A non-zero value makes the q-polynomial check fail.
    """

    q_constant_shift: float = 0.0


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    deviation: float
    tolerance: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.deviation <= self.tolerance


@dataclass(frozen=True)
class Check:
    name: str
    tolerance: float
    measure: Callable[[VerifyOptions], float]


@dataclass(frozen=True)
class VerifySuite:
    name: str
    checks: tuple[Check, ...]

    def run(self, options: VerifyOptions) -> list[CheckResult]:
        results = []
        for check in self.checks:
            try:
                deviation = float(check.measure(options))
            except Exception as exc:
                logger.warning("check %s/%s raised %s: %s", self.name, check.name, type(exc).__name__, exc)
                results.append(CheckResult(self.name, check.name, math.nan, check.tolerance, str(exc)))
                continue
            if math.isnan(deviation):
                results.append(CheckResult(self.name, check.name, deviation, check.tolerance, "nan deviation"))
            else:
                results.append(CheckResult(self.name, check.name, deviation, check.tolerance))
            logger.debug("check %s/%s: deviation %s", self.name, check.name, deviation)
        return results


# specfun


def _gamma_half(options: VerifyOptions) -> float:
    return abs(DEFAULT.gamma(0.5) - math.sqrt(math.pi))


def _kummer_exponential(options: VerifyOptions) -> float:
    return abs(DEFAULT.kummer_m(1.0, 1.0, 1.0) - math.e)


def _tricomi_trivial(options: VerifyOptions) -> float:
    return abs(DEFAULT.tricomi_u(0.0, 2.3, 1.7) - 1.0)


def _hermite_at_origin(options: VerifyOptions) -> float:
    expected = math.sqrt(math.pi) * 2.0**-0.5 / math.gamma(0.75)
    return abs(DEFAULT.hermite_nu(-0.5, 0.0) - expected) / expected


def _hermite_polynomial(options: VerifyOptions) -> float:
    return abs(DEFAULT.hermite_nu(2.0, 1.0) - 2.0) + abs(DEFAULT.hermite_nu_deriv(2.0, 1.0) - 8.0)


# heun


def _level_one_q_roots(options: VerifyOptions) -> float:
    pot = Potential(v_m2=PhysicalConstants().level_v_m2(1), v2=2.0, v4=0.7, v6=1.0)
    hp, _ = map_potential(pot, 0.0)
    coefficients = q_polynomial_coefficients(1, hp)
    coefficients[0] += options.q_constant_shift
    roots = sorted(float(r.real) for r in np.polynomial.polynomial.polyroots(coefficients))
    spectrum = energies_for_level(pot, N=1)
    expected = sorted(spectrum.slope * e + spectrum.intercept for e in (-math.sqrt(8.0), math.sqrt(8.0)))
    return max(abs(a - b) for a, b in zip(roots, expected)) / max(abs(x) for x in expected)


def _level_zero_energy(options: VerifyOptions) -> float:
    spectrum = energies_for_level(Potential(v_m2=0.75, v0=1.5, v2=-3.0, v4=0.4, v6=2.0), N=0)
    return abs(spectrum.energies[0] - 1.5)


def _level_one_energies(options: VerifyOptions) -> float:
    pot = Potential(v_m2=PhysicalConstants().level_v_m2(1), v2=2.0, v4=0.7, v6=1.0)
    energies = energies_for_level(pot, N=1).energies
    return max(abs(a - b) for a, b in zip(energies, (-math.sqrt(8.0), math.sqrt(8.0))))


# curves


def _zero_quartic_branches(options: VerifyOptions) -> float:
    deviations = []
    for n in range(1, 6):
        trace = trace_curve(0, n, [-0.5, -0.25, 0.0, 0.25, 0.5])
        w = trace.w_at(0.0)
        deviations.append(math.inf if w is None else abs(w - (1.0 - 4.0 * n)))
    return max(deviations)


def _branch_residual(options: VerifyOptions) -> float:
    trace = trace_curve(0, 1, [0.5, 1.0])
    w = trace.w_at(1.0)
    if w is None:
        return math.inf
    return abs(origin_condition_n0(DimensionlessPair(1.0, w)))


def _negative_energy_curve(options: VerifyOptions) -> float:
    trace = trace_curve(1, 1, [-5.0, -4.5, -4.0], energy_sign=-1)
    approx = Approximations()
    return max(abs(p.w - approx.approx_n1_neg(p.xi0, 1)) for p in trace.points) if trace.points else math.inf


# qes


def _dictionary_round_trip(options: VerifyOptions) -> float:
    p = QesParams(a=1.3, b=-0.7, s=1.4, M=2)
    energy = 0.9
    deviations = []
    for sign_gamma, sign_epsilon in itertools.product((1, -1), (1, -1)):
        signs = BranchChoice(sign_gamma=sign_gamma, sign_epsilon=sign_epsilon)
        mapped, _ = map_potential(qes_potential(p), energy, QES_UNITS, signs)
        direct = qes_to_heun(p, signs, energy)
        for name in ("gamma", "delta", "epsilon", "alpha", "q"):
            expected = getattr(mapped, name)
            deviations.append(abs(getattr(direct, name) - expected) / max(1.0, abs(expected)))
    return max(deviations)


def _qes_single_state(options: VerifyOptions) -> float:
    p = QesParams(a=1.1, b=0.6, s=1.25, M=0)
    return abs(qes_spectrum(p).energies[0] - 4.0 * p.s * p.b)


def _qes_hermite_branch(options: VerifyOptions) -> float:
    p = QesParams(a=1.0, b=0.5, s=1.0, M=1)
    spectrum = energies_for_level(p.potential(), QES_UNITS, N=1, variant=Variant.NU0_ZERO, branch=p.matching_branch())
    qes = qes_spectrum(p).energies
    return max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(qes, spectrum.energies))


# oracle


def _oscillator_ground_state(options: VerifyOptions) -> float:
    grid = RadialGrid(r_max=8.0, step=0.005)
    return abs(shoot_eigenvalue(Potential(v2=1.0), PhysicalConstants(), (2.0, 4.0), grid) - 3.0)


def _zero_energy_state(options: VerifyOptions) -> float:
    state = BoundState.locate(0, 2, 0.5)
    grid = RadialGrid.decaying(state.potential)
    return abs(shoot_eigenvalue(state.potential, PhysicalConstants(), (-0.3, 0.3), grid))


def _wavefunction_residual(options: VerifyOptions) -> float:
    pot = DimensionlessPair(0.4, -1.7).to_potential(0)
    psi = assemble_level_wavefunction(pot, 0.0, 0)
    return ode_residual(psi, pot, PhysicalConstants(), 0.0, RadialGrid(r_min=0.1, r_max=3.0, step=0.025), 1e-3)


SUITES: frozendict[str, VerifySuite] = frozendict(
    {
        suite.name: suite
        for suite in (
            VerifySuite(
                "specfun",
                (
                    Check("gamma(1/2)", 1e-14, _gamma_half),
                    Check("M(1, 1, 1)", 1e-12, _kummer_exponential),
                    Check("U(0, b, z)", 1e-14, _tricomi_trivial),
                    Check("H_{-1/2}(0)", 1e-10, _hermite_at_origin),
                    Check("H_2(1), H_2'(1)", 1e-14, _hermite_polynomial),
                ),
            ),
            VerifySuite(
                "heun",
                (
                    Check("q-polynomial roots, level 1", 1e-10, _level_one_q_roots),
                    Check("energy, level 0", 1e-12, _level_zero_energy),
                    Check("energies, level 1", 1e-10, _level_one_energies),
                ),
            ),
            VerifySuite(
                "curves",
                (
                    Check("branches at xi0 = 0", 1e-9, _zero_quartic_branches),
                    Check("origin condition on branch 1", 1e-10, _branch_residual),
                    Check("negative energy curve, level 1", 0.25, _negative_energy_curve),
                ),
            ),
            VerifySuite(
                "qes",
                (
                    Check("dictionary round trip", 1e-12, _dictionary_round_trip),
                    Check("single state energy", 1e-12, _qes_single_state),
                    Check("two states vs Hermite branch", 1e-9, _qes_hermite_branch),
                ),
            ),
            VerifySuite(
                "oracle",
                (
                    Check("oscillator ground state", 1e-6, _oscillator_ground_state),
                    Check("zero-energy bound state", 1e-5, _zero_energy_state),
                    Check("wavefunction ODE residual", 1e-6, _wavefunction_residual),
                ),
            ),
        )
    }
)


def run_suites(names: Iterable[str], options: VerifyOptions = VerifyOptions()) -> list[CheckResult]:
    """
    Run the named suites, or all of them in registry order for `"all"`.

    :raise KeyError: For an unknown suite name.
    """

    selected: list[str] = []
    for name in names:
        if name == "all":
            selected.extend(n for n in SUITES if n not in selected)
        elif name not in SUITES:
            raise KeyError(name)
        elif name not in selected:
            selected.append(name)
    results = []
    for name in selected:
        results.extend(SUITES[name].run(options))
    return results

from __future__ import annotations

import logging
from dataclasses import dataclass

from biconfluent.CurveTracer import CurveTracer
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.LevelSpectrum import energies_for_level
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.Wavefunction import Wavefunction, assemble_level_wavefunction

__all__ = ["BoundState"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundState:
    """
    A bound state on one of the traced curves: the point `(xi0, w)` of branch *branch_n*, the potential it describes
    and the energy and wavefunction of the state.
    """

    class Error(Exception):
        pass

    @dataclass
    class NotFound(Error):
        level_N: int
        branch_n: int
        xi0: float

        def __str__(self) -> str:
            return f"no bound state of level {self.level_N}, branch {self.branch_n} at xi0={self.xi0!r}"

    level_N: int
    branch_n: int
    energy: float
    psi: Wavefunction
    pair: DimensionlessPair
    potential: Potential
    energy_sign: int | None = None

    @classmethod
    def locate(
        cls,
        level_N: int,
        branch_n: int,
        xi0: float,
        energy_sign: int | None = None,
        consts: PhysicalConstants | None = None,
        v6: float = 1.0,
        v0: float = 0.0,
        tracer: CurveTracer | None = None,
    ) -> BoundState:
        """
        Find the point of branch *branch_n* at *xi0* and build the matching potential with the given `v6` and `v0`.

        :raise BoundState.NotFound: If the curve has no point at *xi0*.
        """

        consts = consts or PhysicalConstants()
        trace = (tracer or CurveTracer()).trace(level_N, branch_n, [xi0], energy_sign)
        if not trace.points:
            raise cls.NotFound(level_N, branch_n, xi0)
        pair = trace.points[0]
        pot = pair.to_potential(level_N, consts, v6=v6, v0=v0)

        spectrum = energies_for_level(pot, consts, level_N)
        if level_N == 0:
            energy = spectrum.energies[0]
        else:
            # E - V0 = +-(2 hbar^2 V2/m)^(1/2); pick the root on the traced side.
            candidates = [e for e in spectrum.energies if (e - v0) * (energy_sign or 1) > 0]
            if not candidates:
                raise cls.NotFound(level_N, branch_n, xi0)
            energy = candidates[0]
        logger.debug("bound state of level %d, branch %d at %s: E=%s", level_N, branch_n, pair, energy)
        psi = assemble_level_wavefunction(pot, energy, level_N, consts, regular=True)
        return cls(level_N, branch_n, energy, psi, pair, pot, trace.energy_sign)

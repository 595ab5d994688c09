"""
Biconfluent solves the radial Schrödinger equation of the sextic oscillator through the bi-confluent Heun equation,
with Hermite-function expansions that terminate on a hierarchy of exactly solvable levels.
"""

from biconfluent.Approximations import Approximations
from biconfluent.BoundState import BoundState
from biconfluent.BranchChoice import BranchChoice
from biconfluent.CurveTracer import CurveTrace, CurveTracer, trace_curve
from biconfluent.DimensionlessPair import DimensionlessPair
from biconfluent.HermiteExpansion import HermiteExpansion, expansion_coefficients
from biconfluent.HeunParameters import HeunParameters, map_potential
from biconfluent.LevelSpectrum import LevelSpectrum, energies_for_level
from biconfluent.Numerov import ode_residual, shoot_eigenvalue
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.QesParams import QesParams, qes_potential, qes_to_heun
from biconfluent.QesSolution import QesSolution, qes_spectrum, qes_wavefunction
from biconfluent.RadialGrid import RadialGrid
from biconfluent.Recurrence import Variant
from biconfluent.SpecialFunctions import SpecialFunctions
from biconfluent.Wavefunction import Wavefunction, assemble_level_wavefunction, assemble_wavefunction

__all__ = [
    "Approximations",
    "BoundState",
    "BranchChoice",
    "CurveTrace",
    "CurveTracer",
    "DimensionlessPair",
    "HermiteExpansion",
    "HeunParameters",
    "LevelSpectrum",
    "PhysicalConstants",
    "Potential",
    "QesParams",
    "QesSolution",
    "RadialGrid",
    "SpecialFunctions",
    "Variant",
    "Wavefunction",
    "assemble_level_wavefunction",
    "assemble_wavefunction",
    "energies_for_level",
    "expansion_coefficients",
    "map_potential",
    "ode_residual",
    "qes_potential",
    "qes_spectrum",
    "qes_to_heun",
    "qes_wavefunction",
    "shoot_eigenvalue",
    "trace_curve",
]

__version__ = "0.1.0"

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Any, Callable, TypeVar

import click
import numpy as np
from rich.console import Console
from rich.logging import RichHandler

from biconfluent.CurveTracer import CurveTracer
from biconfluent.HeunParameters import HeunParameters
from biconfluent.LevelSpectrum import LevelSpectrum, energies_for_level
from biconfluent.Numerov import ode_residual
from biconfluent.OutputRecord import OutputRecord
from biconfluent.PhysicalConstants import PhysicalConstants
from biconfluent.Potential import Potential
from biconfluent.RadialGrid import RadialGrid
from biconfluent.RunConfig import RunConfig
from biconfluent.VerifySuite import SUITES, VerifyOptions, run_suites
from biconfluent.Wavefunction import assemble_level_wavefunction

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

CURVE_COLUMNS = ("branch", "xi0", "w", "w_approx", "abs_error")
SPECTRUM_COLUMNS = ("index", "energy", "q")
WAVEFUNCTION_COLUMNS = ("r", "psi")


def _parse_branches(ctx: click.Context, param: click.Parameter, value: str) -> list[int]:
    """
    Accepts `A..B`, a comma separated list, or a single branch index.
    """

    try:
        if ".." in value:
            low, high = value.split("..")
            branches = list(range(int(low), int(high) + 1))
        else:
            branches = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"expected A..B or a comma separated list, got {value!r}")
    if not branches:
        raise click.BadParameter("the branch list is empty")
    if min(branches) < 1:
        raise click.BadParameter("branches are counted from 1")
    return branches


def _parse_grid(ctx: click.Context, param: click.Parameter, value: str) -> list[float]:
    try:
        start, stop, step = (float(x) for x in value.split(":"))
    except ValueError:
        raise click.BadParameter(f"expected MIN:MAX:STEP, got {value!r}")
    if not step > 0 or stop < start:
        raise click.BadParameter(f"expected MIN <= MAX and STEP > 0, got {value!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [float(x) for x in np.round(start + step * np.arange(count), 12)]


def potential_options(func: F) -> F:
    options = [
        click.option("--vm2", "v_m2", type=float, help="Centrifugal coefficient. Defaults to the level's value."),
        click.option("--v0", type=float, help="Constant term."),
        click.option("--v2", type=float, help="Harmonic coefficient."),
        click.option("--v4", type=float, help="Quartic coefficient."),
        click.option("--v6", type=float, help="Sextic coefficient, must be positive."),
        click.option("--hbar", type=float, help="Reduced Planck constant (default 1)."),
        click.option("--mass", type=float, help="Particle mass (default 1/2)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def output_options(func: F) -> F:
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write to a file.")(func)
    func = click.option("--format", "format_", type=click.Choice(["csv", "json"]), default="csv")(func)
    return func


def _resolve(ctx: click.Context, level_N: int, flags: dict[str, float | None]) -> tuple[Potential, PhysicalConstants]:
    config: RunConfig = ctx.obj.with_overrides(**flags)
    if not config.v6 > 0:
        raise click.BadParameter(f"v6 must be positive, got {config.v6!r}", param_hint="--v6")
    try:
        consts = config.constants()
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--hbar/--mass")
    return config.potential(level_N), consts


def _emit(record: OutputRecord, format_: str, out: Path | None) -> None:
    text = record.render("json" if format_ == "json" else "csv")
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)
        logger.info("wrote %d rows to %s", len(record.rows), out)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages.")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="YAML file with potential coefficients and constants. Flags take precedence.",
)
@click.pass_context
def main(ctx: click.Context, verbose: bool, config: Path | None) -> None:
    """
    Hermite-function solutions of the sextic oscillator.
    """

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
    )
    try:
        ctx.obj = RunConfig.load(config) if config else RunConfig()
    except RunConfig.InvalidFile as exc:
        raise click.BadParameter(str(exc), param_hint="--config")


@main.command()
@click.option("--level", "level_N", type=click.IntRange(0, 1), required=True)
@click.option("--branches", default="1..10", callback=_parse_branches, help="A..B or a comma separated list.")
@click.option("--xi0", "xi0_grid", default="-4:4:0.05", callback=_parse_grid, help="MIN:MAX:STEP")
@click.option("--energy-sign", type=click.Choice(["-1", "1"]), help="Sign of E - V0 on level 1.")
@output_options
def curves(
    level_N: int,
    branches: list[int],
    xi0_grid: list[float],
    energy_sign: str | None,
    format_: str,
    out: Path | None,
) -> None:
    """
    Trace bound-state curves in the (xi0, w) plane next to their closed-form approximations.
    """

    if level_N == 1 and energy_sign is None:
        raise click.UsageError("--energy-sign is required for --level 1")
    sign = int(energy_sign) if level_N == 1 and energy_sign is not None else None
    tracer = CurveTracer()
    rows = []
    for n in branches:
        trace = tracer.trace(level_N, n, xi0_grid, sign)
        if trace.outside:
            logger.warning("branch %d leaves w >= 0 at %d grid points", n, len(trace.outside))
        for point in trace.points:
            w_approx = tracer.approximations.seed(level_N, n, point.xi0, sign)
            rows.append((n, point.xi0, point.w, w_approx, abs(point.w - w_approx)))
    _emit(OutputRecord.of("curves", CURVE_COLUMNS, rows), format_, out)


@main.command()
@click.option("--level", "level_N", type=click.IntRange(min=0), default=0)
@potential_options
@output_options
@click.pass_context
def spectrum(ctx: click.Context, level_N: int, format_: str, out: Path | None, **flags: float | None) -> None:
    """
    The energies of hierarchy level N and their accessory parameters.
    """

    pot, consts = _resolve(ctx, level_N, flags)
    try:
        result = energies_for_level(pot, consts, level_N)
    except (LevelSpectrum.Error, HeunParameters.Error) as exc:
        raise click.UsageError(str(exc))
    rows = [(i + 1, e, q) for i, (e, q) in enumerate(zip(result.energies, result.q_roots))]
    _emit(OutputRecord.of("spectrum", SPECTRUM_COLUMNS, rows), format_, out)


@main.command()
@click.option("--level", "level_N", type=click.IntRange(min=0), default=0)
@click.option("--branch", type=click.IntRange(min=1), default=1, help="Index of the energy on the level, from 1.")
@click.option("--r-max", type=float, help="Right end of the samples. Defaults to where the state has decayed.")
@click.option("--samples", type=click.IntRange(min=2), default=401)
@potential_options
@output_options
@click.pass_context
def wavefunction(
    ctx: click.Context,
    level_N: int,
    branch: int,
    r_max: float | None,
    samples: int,
    format_: str,
    out: Path | None,
    **flags: float | None,
) -> None:
    """
    Sample the wavefunction of one energy of level N and report its ODE residual.
    """

    pot, consts = _resolve(ctx, level_N, flags)
    try:
        result = energies_for_level(pot, consts, level_N)
    except (LevelSpectrum.Error, HeunParameters.Error) as exc:
        raise click.UsageError(str(exc))
    if branch > len(result.energies):
        raise click.BadParameter(f"level {level_N} has {len(result.energies)} real energies", param_hint="--branch")
    if r_max is not None and not r_max > 0:
        raise click.BadParameter("must be positive", param_hint="--r-max")

    energy = result.energies[branch - 1]
    psi = assemble_level_wavefunction(pot, energy, level_N, consts)
    r_max = r_max or RadialGrid.decaying(pot, consts).r_max
    # The origin is left out, the wavefunction away from a bound state diverges there.
    rs = np.linspace(r_max / samples, r_max, samples)
    rows = [(float(r), value) for r, value in zip(rs, psi.sample(rs))]
    try:
        record = OutputRecord.of("wavefunction", WAVEFUNCTION_COLUMNS, rows)
    except OutputRecord.NonFinite as exc:
        raise click.ClickException(f"{exc}, try a smaller --r-max")

    grid = RadialGrid(r_min=0.05 * r_max, r_max=r_max, step=0.95 * r_max / 200)
    residual = ode_residual(psi, pot, consts, energy, grid, stencil_step=min(1e-3, 0.01 * r_max))
    click.echo(f"E={energy!r} ode_residual={residual:.3e}", err=True)
    _emit(record, format_, out)


@main.command()
@click.argument("suite", type=click.Choice([*SUITES, "all"]), default="all")
@click.option("--perturb-q-constant", type=float, default=0.0, hidden=True)
@click.pass_context
def verify(ctx: click.Context, suite: str, perturb_q_constant: float) -> None:
    """
    Run the self-checks of a suite, or of all suites.
    """

    results = run_suites([suite], VerifyOptions(q_constant_shift=perturb_q_constant))
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        click.secho(f"{status} ", fg="green" if result.passed else "red", nl=False)
        detail = result.error or f"deviation {result.deviation:.3e} (tolerance {result.tolerance:.1e})"
        click.echo(f"{result.suite}/{result.name}: {detail}")
    failed = sum(not r.passed for r in results)
    if failed:
        click.echo(f"{failed} of {len(results)} checks failed", err=True)
        ctx.exit(1)


if __name__ == "__main__":
    main()

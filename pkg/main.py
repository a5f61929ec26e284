"""Command-line entry point for triplecover."""
from __future__ import annotations

import logging
import platform
import sys
from pathlib import Path
from typing import Callable, List, Optional

import psutil
import sympy
import typer

from config.manager import config_manager
from core.controller import CommandResult, Controller
from core.exceptions import BoundaryPointError, ConfigurationError, TriplecoverError
from core.logging_config import get_logger, setup_logging
from core.serialization import dumps

logger = get_logger(__name__)

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Triple-only covers of the projective line: verify, construct, reduce and analyze.",
)


def _get_system_info() -> dict[str, str]:
    return {
        "platform": platform.platform(),
        "python_version": platform.python_version(),
        "sympy_version": sympy.__version__,
        "physical_cpus": str(psutil.cpu_count(logical=False) or 1),
    }


def _log_system_info() -> None:
    for key, value in _get_system_info().items():
        logger.debug(f"{key}: {value}")
    logger.debug(f"Working directory: {Path.cwd()}")


@app.callback()
def main_callback(
    debug: bool = typer.Option(False, "--debug", help="Log at DEBUG level on stderr."),
    log_file: bool = typer.Option(False, "--log-file", help="Also write a rotating log file under ./logs."),
) -> None:
    if debug:
        level = logging.DEBUG
    else:
        level = getattr(logging, str(config_manager.get_value("logging.level", "WARNING")).upper(), logging.WARNING)
    path = setup_logging(level=level, to_file=log_file or bool(config_manager.get_value("logging.file", False)))
    if path:
        logger.info(f"Logging to {path}")
    if debug:
        _log_system_info()


def _run(action: Callable[[Controller], CommandResult], output: Optional[Path]) -> None:
    """Run a command, print its report and exit with the report's code.

    Exit codes: 0 success, 1 negative verdict or boundary point, 2 error.
    """
    try:
        result = action(Controller())
    except BoundaryPointError as e:
        logger.info(f"boundary point: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(1)
    except (TriplecoverError, ConfigurationError, OSError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(2)
    text = dumps(result.to_report(), config_manager.get_value("output.indent", 2))
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
    typer.echo(text)
    raise typer.Exit(result.exit_code)


OutputOption = typer.Option(None, "--output", "-o", help="Also write the JSON report to this file.")


@app.command()
def verify(
    map_file: Path = typer.Argument(..., help="Map file to check."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Compute the ramification profile and the triple-only verdict."""
    _run(lambda c: c.verify(map_file), output)


@app.command()
def construct(
    field: str = typer.Option(..., "--field", help="Ground field, e.g. F7 or Q."),
    branch: List[str] = typer.Option(..., "--branch", help="Branch points; repeat or separate by commas."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the candidate stream."),
    map_out: Path = typer.Option(Path("cover.json"), "--map-out", help="Where to write the map."),
    trace_out: Path = typer.Option(Path("cover.trace.json"), "--trace-out", help="Where to write the trace."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Build a triple-only cover with the given branch points."""
    _run(lambda c: c.construct(field, branch, seed, map_out, trace_out), output)


@app.command()
def belyi(
    map_file: Path = typer.Argument(..., help="Tame map over a finite field."),
    map_out: Optional[Path] = typer.Option(None, "--map-out", help="Where to write the reduced map."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Compose with z^(p^n - 1) so that all branch points lie in {0, 1, inf}."""
    _run(lambda c: c.belyi(map_file, map_out), output)


@app.command()
def normalize(
    field: str = typer.Option("Q", "--field", help="Field of the points."),
    points: List[str] = typer.Option(..., "--points", help="Marked points; repeat or separate by commas."),
    map_file: Optional[Path] = typer.Option(None, "--map", help="Also push the points forward along this map."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Moduli coordinates of a pointed projective line."""
    _run(lambda c: c.normalize(field, points, map_file), output)


@app.command()
def weierstrass(
    field: str = typer.Option(..., "--field", help="Field of the parameter."),
    t: str = typer.Option(..., "--t", help="Parameter t of x^3 = y^2 - t*y."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Analyze one member of the cubic family."""
    _run(lambda c: c.weierstrass(field, t), output)


@app.command()
def compose(
    outer: Path = typer.Argument(..., help="Map f."),
    inner: Path = typer.Argument(..., help="Map g."),
    map_out: Optional[Path] = typer.Option(None, "--map-out", help="Where to write f∘g."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Compose two maps over the same field."""
    _run(lambda c: c.compose(outer, inner, map_out), output)


@app.command()
def oracle(
    map_file: Path = typer.Argument(..., help="Map over a finite field."),
    ext_degree: int = typer.Option(1, "--ext-degree", help="Enumerate points over the degree-m extension."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Compare the computed profile with a brute-force enumeration."""
    _run(lambda c: c.oracle(map_file, ext_degree), output)


@app.command()
def forward(
    field: str = typer.Option(..., "--field", help="Ground field."),
    step: List[str] = typer.Option(..., "--step", help="Möbius step a,b,c,d; repeat for more steps."),
    map_out: Optional[Path] = typer.Option(None, "--map-out", help="Where to write the composed map."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Compose (phi_k∘r)∘...∘(phi_1∘r) with r(z) = z^3."""
    _run(lambda c: c.forward(field, step, map_out), output)


@app.command()
def replay(
    trace_file: Path = typer.Argument(..., help="Trace written by construct."),
    map_file: Path = typer.Argument(..., help="Map written by construct."),
    output: Optional[Path] = OutputOption,
) -> None:
    """Rebuild a construction from its trace and compare with the recorded map."""
    _run(lambda c: c.replay(trace_file, map_file), output)


def main() -> None:
    """Main entry point."""
    try:
        app()
    except KeyboardInterrupt:
        print("Interrupted", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()

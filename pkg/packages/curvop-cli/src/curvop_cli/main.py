"""CLI interface for curvature operator certificates."""

from __future__ import annotations

import logging
import sys
from typing import Any

import click
from curvop_core import Config

from .certify_cmd import certify
from .decompose_cmd import decompose
from .oracle_cmd import oracle
from .seck_cmd import seck
from .spectrum_cmd import spectrum
from .utils import EXIT_USAGE, run_with_error_handling
from .zoo_cmd import zoo

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class CurvopGroup(click.Group):
    """Command group that reports usage errors with exit code 3."""

    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: Any,
    ) -> click.Context:
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise


@click.group(cls=CurvopGroup)
@click.option(
    "--config",
    "config_path",
    help="Path to config file (default: XDG config directory)",
    type=click.Path(),
    default=None,
)
@click.option("--tol", type=float, default=None, help="Validation tolerance for input tensors (overrides config)")
@click.option("--threads", type=int, default=None, help="Worker threads; 0 = available parallelism")
@click.option("--no-bianchi-check", is_flag=True, help="Skip the first Bianchi identity check on input")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def cli(
    ctx: click.Context,
    config_path: str | None,
    tol: float | None,
    threads: int | None,
    no_bianchi_check: bool,
    verbose: bool,
) -> None:
    """Curvature operator decomposition, eigenvalue bounds and pinching certificates."""
    ctx.ensure_object(dict)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )

    def _run() -> None:
        ctx.obj["config"] = Config(config_path)

    run_with_error_handling(_run)
    if tol is not None and not tol > 0:
        raise click.BadParameter(f"must be positive, got {tol}", param_hint="--tol")
    ctx.obj["tol"] = tol
    ctx.obj["threads"] = threads
    ctx.obj["check_bianchi"] = not no_bianchi_check


# Register all commands
cli.add_command(decompose)
cli.add_command(spectrum)
cli.add_command(seck)
cli.add_command(certify)
cli.add_command(zoo)
cli.add_command(oracle)


if __name__ == "__main__":
    cli()

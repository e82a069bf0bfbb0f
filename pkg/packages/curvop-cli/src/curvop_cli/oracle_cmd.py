"""Oracle command for curvop CLI."""

from __future__ import annotations

from typing import Any

import click
from click.exceptions import Exit

from .utils import (
    console,
    echo_json,
    get_output_format,
    get_restarts,
    get_seed,
    get_threads,
    key_value_table,
    output_options,
    run_with_error_handling,
)

SUITE_NAMES = ["lemma32", "lemma31", "kyfan", "concentration", "lemma44", "rick-grid", "sandwich", "cor34-soundness"]

DEFAULT_TRIALS = {
    "lemma32": 100_000,
    "lemma31": 10_000,
    "kyfan": 1_000,
    "concentration": 10_000,
    "lemma44": 1,
    "rick-grid": 20,
    "sandwich": 200,
    "cor34-soundness": 200,
}


@click.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--trials", type=int, default=None, help="Number of random trials (suite default if omitted)")
@click.option("--seed", type=int, default=None, help="Seed (falls back to CURVOP_SEED, then config)")
@click.option("--restarts", type=int, default=None, help="Ric_k restarts for rick-grid, sandwich and cor34-soundness")
@click.option("--grid-points", type=int, default=100_000, show_default=True, help="Sphere points for rick-grid")
@output_options
@click.pass_context
def oracle(
    ctx: click.Context,
    suite: str,
    trials: int | None,
    seed: int | None,
    restarts: int | None,
    grid_points: int,
    output: str | None,
    as_json: bool,
) -> None:
    """Run a seeded property suite; exits 1 if any check fails."""
    fmt = get_output_format(ctx, output, as_json)
    passed = True

    def _run() -> None:
        nonlocal passed
        # Loaded here so plain tensor commands do not import the search machinery.
        from curvop_core import run_suite

        extra: dict[str, Any] = {}
        if suite in ("rick-grid", "sandwich", "cor34-soundness"):
            extra.update(restarts=get_restarts(ctx, restarts), threads=get_threads(ctx))
        if suite == "rick-grid":
            extra["grid_points"] = grid_points
        summary = run_suite(suite, trials or DEFAULT_TRIALS[suite], get_seed(ctx, seed), **extra)
        passed = summary.passed

        if fmt == "json":
            echo_json(summary.to_dict())
            return
        data = summary.to_dict()
        failures = data.pop("first_failures")
        details = data.pop("details")
        console.print(key_value_table({**data, **details}, title=f"Oracle {suite}"))
        for label in failures:
            console.print(f"  [red]✗[/red] {label}", highlight=False)
        console.print("[green]✓ pass[/green]" if summary.passed else "[red]✗ fail[/red]")

    run_with_error_handling(_run, fmt)
    if not passed:
        raise Exit(1)

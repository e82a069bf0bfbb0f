"""Ric_k command for curvop CLI."""

from __future__ import annotations

from typing import Any

import click
from curvop_core import RangeError, ric_k_grid_min, ric_k_min, sectional_bounds, sphere_lattice
from rich.table import Table

from .utils import (
    console,
    echo_json,
    get_config,
    get_output_format,
    get_restarts,
    get_seed,
    get_threads,
    output_options,
    read_tensor,
    run_with_error_handling,
)


@click.command()
@click.argument("path", type=click.Path())
@click.option("--k", "k_value", type=int, default=None, help="Order k (default: every k from 1 to n-1)")
@click.option("--restarts", type=int, default=None, help="Random restarts (overrides config)")
@click.option("--seed", type=int, default=None, help="Seed (falls back to CURVOP_SEED, then config)")
@click.option("--grid", "grid_points", type=int, default=None, help="Also brute-force over this many sphere points")
@click.option("--sectional", is_flag=True, help="Add the maximum sectional curvature")
@output_options
@click.pass_context
def seck(
    ctx: click.Context,
    path: str,
    k_value: int | None,
    restarts: int | None,
    seed: int | None,
    grid_points: int | None,
    sectional: bool,
    output: str | None,
    as_json: bool,
) -> None:
    """kth-intermediate Ricci curvature Ric_k by multi-start search."""
    fmt = get_output_format(ctx, output, as_json)

    def _run() -> None:
        config = get_config(ctx)
        rm = read_tensor(ctx, path)
        n = rm.dim
        run_seed = get_seed(ctx, seed)
        n_restarts = get_restarts(ctx, restarts)
        threads = get_threads(ctx)
        search = {
            "tol": float(config.get("ricci_k.tol", 1e-8)),
            "max_iter": int(config.get("ricci_k.max_iter", 200)),
            "initial_step": float(config.get("ricci_k.initial_step", 0.1)),
            "fd_step": float(config.get("ricci_k.fd_step", 1e-5)),
            "threads": threads,
        }
        ks = [k_value] if k_value is not None else list(range(1, n))
        if grid_points is not None and grid_points < 1:
            raise RangeError(f"--grid must be >= 1, got {grid_points}")
        points = sphere_lattice(n, grid_points, run_seed) if grid_points else None

        results = []
        for k in ks:
            found = ric_k_min(rm, k, n_restarts, run_seed, **search).to_dict()
            if points is not None:
                found["grid_value"], _ = ric_k_grid_min(rm, k, points)
            results.append(found)

        report: dict[str, Any] = {"dimension": n, "seed": run_seed, "restarts": n_restarts, "results": results}
        if sectional:
            _, high = sectional_bounds(rm, n_restarts, run_seed, search["tol"], threads=threads)
            report["sectional_max"] = high.to_dict()

        if fmt == "json":
            echo_json(report)
            return

        table = Table(show_header=True, header_style="bold magenta", title=f"Ric_k of {path} (seed {run_seed})")
        table.add_column("k", justify="right")
        table.add_column("Ric_k", justify="right")
        table.add_column("Ric_k / k", justify="right")
        if points is not None:
            table.add_column("Grid", justify="right")
        table.add_column("Converged")
        for row in results:
            cells = [str(row["k"]), f"{row['value']:.10g}", f"{row['value'] / row['k']:.10g}"]
            if points is not None:
                cells.append(f"{row['grid_value']:.10g}")
            cells.append("[green]yes[/green]" if row["converged"] else "[yellow]no[/yellow]")
            table.add_row(*cells)
        console.print(table)
        if sectional:
            console.print(f"[dim]max sectional curvature ≈ {report['sectional_max']['value']:.10g}[/dim]")

    run_with_error_handling(_run, fmt)

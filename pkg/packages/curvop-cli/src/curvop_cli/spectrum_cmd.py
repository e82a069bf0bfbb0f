"""Spectrum command for curvop CLI."""

from __future__ import annotations

from typing import Any

import click
import numpy as np
from curvop_core import (
    BivectorMatrix,
    CurvatureTensor,
    Positivity,
    curvature_operator,
    k_positivity,
    spectrum as operator_spectrum,
    theorem12_blocks,
)
from rich.table import Table

from .utils import (
    console,
    echo_json,
    format_float,
    get_config,
    get_output_format,
    key_value_table,
    output_options,
    read_tensor,
    run_with_error_handling,
)


def _rows(matrix: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in matrix]


def spectrum_report(
    rm: CurvatureTensor,
    frame: str = "standard",
    *,
    max_sweeps: int = 100,
    rel_tol: float = 1e-13,
) -> tuple[dict[str, Any], dict[str, BivectorMatrix]]:
    """Report dict plus the matrices available for --dump."""
    matrices: dict[str, BivectorMatrix] = {}
    blocks = None
    if frame == "ricci":
        blocks = theorem12_blocks(rm)
        op = blocks.operator
        matrices.update(schouten=blocks.schouten_block, weyl=blocks.weyl_block)
    else:
        op = curvature_operator(rm)
    matrices["operator"] = op
    summary = operator_spectrum(op, max_sweeps=max_sweeps, rel_tol=rel_tol)

    positive_from = next(
        (k for k in range(1, summary.size + 1) if k_positivity(summary, k).verdict is Positivity.POSITIVE),
        None,
    )
    report: dict[str, Any] = {
        "dimension": rm.dim,
        "frame": frame,
        "pairs": op.index.labels(),
        **summary.to_dict(),
        "k_positive_from": positive_from,
    }
    if blocks is not None:
        direct = curvature_operator(rm, blocks.frame)
        report["blocks"] = {
            "ricci_eigenvalues": [float(x) for x in blocks.ricci_eigenvalues],
            "frame": _rows(blocks.frame.vectors),
            "schouten_diagonal": [float(x) for x in np.diag(blocks.schouten_block.entries)],
            "weyl": _rows(blocks.weyl_block.entries),
            "weyl_trace": blocks.weyl_block.trace(),
            "weyl_frobenius_sq": blocks.weyl_block.frobenius_sq(),
            "reconstruction_residual": float(np.max(np.abs(blocks.operator.entries - direct.entries))),
        }
    return report, matrices


def dump_matrix(matrix: BivectorMatrix, title: str | None = None) -> str:
    """Row-major text dump with a pair-order header."""
    lines = []
    if title:
        lines.append(f"# {title}")
    lines.append("# pairs: " + " ".join(matrix.index.labels()))
    lines.extend(" ".join(format_float(float(x)) for x in row) for row in matrix.entries)
    return "\n".join(lines)


@click.command()
@click.argument("path", type=click.Path())
@click.option(
    "--frame",
    type=click.Choice(["standard", "ricci"]),
    default="standard",
    show_default=True,
    help="Coordinate frame; ricci adds the Schouten/Weyl block split",
)
@click.option("--dump", is_flag=True, help="Print the operator matrix row-major instead of the spectrum")
@output_options
@click.pass_context
def spectrum(ctx: click.Context, path: str, frame: str, dump: bool, output: str | None, as_json: bool) -> None:
    """Eigenvalues and prefix sums of the curvature operator."""
    fmt = get_output_format(ctx, output, as_json)

    def _run() -> None:
        config = get_config(ctx)
        rm = read_tensor(ctx, path)
        report, matrices = spectrum_report(
            rm,
            frame,
            max_sweeps=int(config.get("eigensolver.max_sweeps", 100)),
            rel_tol=float(config.get("eigensolver.rel_tol", 1e-13)),
        )
        if dump:
            click.echo(dump_matrix(matrices["operator"], "operator" if frame == "ricci" else None))
            for name in ("schouten", "weyl"):
                if name in matrices:
                    click.echo(dump_matrix(matrices[name], f"{name} block"))
            return
        if fmt == "json":
            echo_json(report)
            return

        table = Table(show_header=True, header_style="bold magenta", title=f"Curvature operator ({frame} frame)")
        table.add_column("k", justify="right")
        table.add_column("μ_k", justify="right")
        table.add_column("μ_1+…+μ_k", justify="right")
        for k, (mu, total) in enumerate(zip(report["eigenvalues"], report["prefix_sums"], strict=True), start=1):
            table.add_row(str(k), f"{mu:.10g}", f"{total:.10g}")
        console.print(table)
        if "blocks" in report:
            blocks = dict(report["blocks"])
            blocks.pop("frame")
            blocks.pop("weyl")
            console.print(key_value_table(blocks, title="Schouten/Weyl blocks"))
        positive_from = report["k_positive_from"]
        if positive_from:
            console.print(f"[dim]k-positive for k ≥ {positive_from}[/dim]")
        else:
            console.print("[dim]not k-positive[/dim]")

    run_with_error_handling(_run, fmt)

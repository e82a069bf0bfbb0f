"""Decompose command for curvop CLI."""

from __future__ import annotations

import math
from typing import Any

import click
from curvop_core import (
    CurvatureTensor,
    concircular_domination,
    concircular_norm_sq,
    full_norm_sq,
    is_conformally_flat,
    orthogonal_decompose,
    pinching_quantity,
    ricci_eigenframe,
)

from .utils import (
    console,
    echo_json,
    get_config,
    get_output_format,
    key_value_table,
    output_options,
    read_tensor,
    run_with_error_handling,
)


def decomposition_report(rm: CurvatureTensor, *, max_sweeps: int = 100, rel_tol: float = 1e-13) -> dict[str, Any]:
    d = orthogonal_decompose(rm)
    _, ricci_eigenvalues = ricci_eigenframe(d.ricci, max_sweeps=max_sweeps, rel_tol=rel_tol)
    weyl_norm_sq = full_norm_sq(d.weyl)
    return {
        "dimension": rm.dim,
        "scalar": d.scalar,
        "ricci_eigenvalues": [float(x) for x in ricci_eigenvalues],
        "traceless_ricci_norm": d.traceless_ricci_norm,
        "weyl_norm": d.weyl_norm,
        "weyl_norm_sq": weyl_norm_sq,
        "concircular_norm": math.sqrt(concircular_norm_sq(d)),
        "pinching": pinching_quantity(d),
        "conformally_flat": is_conformally_flat(d),
        "concircular_domination": concircular_domination(d).to_dict(),
        "residuals": d.residuals(),
    }


@click.command()
@click.argument("path", type=click.Path())
@output_options
@click.pass_context
def decompose(ctx: click.Context, path: str, output: str | None, as_json: bool) -> None:
    """Scalar, Ricci, Weyl and concircular parts of a tensor file."""
    fmt = get_output_format(ctx, output, as_json)

    def _run() -> None:
        config = get_config(ctx)
        rm = read_tensor(ctx, path)
        report = decomposition_report(
            rm,
            max_sweeps=int(config.get("eigensolver.max_sweeps", 100)),
            rel_tol=float(config.get("eigensolver.rel_tol", 1e-13)),
        )
        if fmt == "json":
            echo_json(report)
            return

        residuals = report.pop("residuals")
        domination = report.pop("concircular_domination")
        report["|Z| >= (2/√5)·pinching"] = "holds" if domination["holds"] else "fails"
        console.print(key_value_table(report, title=f"Decomposition of {path}"))
        console.print(key_value_table(residuals, title="Identity residuals"))

    run_with_error_handling(_run, fmt)

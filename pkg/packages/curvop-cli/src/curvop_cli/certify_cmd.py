"""Certify command for curvop CLI."""

from __future__ import annotations

import click
from curvop_core import (
    CertificateReport,
    CertifyParams,
    FieldTheorem,
    PointwiseTheorem,
    UsageError,
    Verdict,
    certify_field,
    certify_pointwise,
)
from curvop_core.tensor_io import is_field_file

from .utils import (
    console,
    echo_json,
    get_config,
    get_output_format,
    get_restarts,
    get_seed,
    get_threads,
    key_value_table,
    output_options,
    read_field,
    read_tensor,
    run_with_error_handling,
)

THEOREM_IDS = sorted({t.value for t in PointwiseTheorem} | {t.value for t in FieldTheorem})
POINTWISE_IDS = frozenset(t.value for t in PointwiseTheorem)
FIELD_IDS = frozenset(t.value for t in FieldTheorem)

_VERDICT_STYLE = {
    Verdict.HYPOTHESES_MET: "green",
    Verdict.NOT_MET: "red",
    Verdict.DEGENERATE: "yellow",
}


def uses_field(theorem: str, field_file: bool) -> bool:
    """Field form for field theorems; cor28_quasipos follows the file type."""
    if theorem in FIELD_IDS and (field_file or theorem not in POINTWISE_IDS):
        return True
    if field_file:
        raise UsageError(f"{theorem} is a pointwise theorem; pass a single tensor file, not a field file")
    return False


def print_report(report: CertificateReport) -> None:
    style = _VERDICT_STYLE[report.verdict]
    rows = {
        "theorem": report.theorem_id,
        **{f"input {key}": value for key, value in report.inputs.items()},
        **report.hypothesis_values,
        "threshold": report.threshold,
        "margin": report.margin,
    }
    console.print(key_value_table(rows, title=f"Certificate {report.theorem_id}"))
    console.print(f"Verdict: [{style}]{report.verdict.value}[/{style}]")
    console.print(f"Conclusion: {report.conclusion_text}", markup=False)
    for note in report.notes:
        console.print(f"  note: {note}", style="dim", markup=False)


@click.command()
@click.argument("path", type=click.Path())
@click.option("--theorem", "-t", type=click.Choice(THEOREM_IDS), required=True, help="Theorem id")
@click.option("--k", "k_value", type=int, default=None, help="Order k of the theorem")
@click.option("--a", "a_value", type=float, default=None, help="Curvature lower bound a")
@click.option("--yamabe", type=float, default=None, help="Yamabe constant λ(g) (or a lower bound for it)")
@click.option("--ricci-lower", type=float, default=None, help="Ricci lower bound (n-1)a used to bound λ(g)")
@click.option("--diameter", type=float, default=None, help="Diameter bound D")
@click.option("--assert-harmonic-weyl", is_flag=True, help="Assert that the Weyl tensor is harmonic")
@click.option("--seed", type=int, default=None, help="Seed (falls back to CURVOP_SEED, then config)")
@click.option("--restarts", type=int, default=None, help="Ric_k search restarts (overrides config)")
@output_options
@click.pass_context
def certify(
    ctx: click.Context,
    path: str,
    theorem: str,
    k_value: int | None,
    a_value: float | None,
    yamabe: float | None,
    ricci_lower: float | None,
    diameter: float | None,
    assert_harmonic_weyl: bool,
    seed: int | None,
    restarts: int | None,
    output: str | None,
    as_json: bool,
) -> None:
    """Check a theorem's hypotheses on a tensor file or a field file."""
    fmt = get_output_format(ctx, output, as_json)

    def _run() -> None:
        params = CertifyParams(
            k=k_value,
            a=a_value,
            yamabe=yamabe,
            ricci_lower=ricci_lower,
            diameter=diameter,
            harmonic_weyl=assert_harmonic_weyl,
            restarts=get_restarts(ctx, restarts),
            seed=get_seed(ctx, seed),
            tol=float(get_config(ctx).get("ricci_k.tol", 1e-8)),
            threads=get_threads(ctx),
        )
        if uses_field(theorem, is_field_file(path)):
            report = certify_field(read_field(ctx, path), theorem, params)
        else:
            report = certify_pointwise(read_tensor(ctx, path), theorem, params)

        if fmt == "json":
            echo_json(report.to_dict())
        else:
            print_report(report)

    run_with_error_handling(_run, fmt)

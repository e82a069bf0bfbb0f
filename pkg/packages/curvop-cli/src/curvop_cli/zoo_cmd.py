"""Zoo command for curvop CLI."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click
from curvop_core import (
    CurvatureField,
    ModelKind,
    ModelSpec,
    RangeError,
    UsageError,
    build_model,
    load_model_table,
    named_spec,
)
from curvop_core.tensor_io import field_to_dict, tensor_to_dict
from rich.table import Table

from .utils import (
    console,
    dumps,
    echo_json,
    get_output_format,
    get_seed,
    output_options,
    run_with_error_handling,
)


def parse_factor(value: str) -> tuple[int, float]:
    """'2:1.0' -> (2, 1.0)."""
    dim, sep, curvature = value.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(dim), float(curvature)
    except ValueError:
        raise UsageError(f"Factor must look like DIM:CURVATURE, got {value!r}") from None


def known_values(name: str) -> dict[str, Any]:
    record = load_model_table().get(name)
    if record is None:
        return {}
    return {
        "name": record.name,
        "scalar": record.scalar,
        "weyl_norm_sq": record.weyl_norm_sq,
        "ricci": list(record.ricci),
        "spectrum": list(record.spectrum),
    }


def _print_model_list() -> None:
    table = Table(show_header=True, header_style="bold magenta", title="Known models")
    table.add_column("Name")
    table.add_column("Description")
    table.add_column("n", justify="right")
    table.add_column("R", justify="right")
    table.add_column("|W|²", justify="right")
    table.add_column("Spectrum")
    table_data = load_model_table()
    for name in table_data.order:
        record = table_data.models[name]
        spectrum = ", ".join(f"{x:g}" for x in record.spectrum)
        table.add_row(
            name, record.description, str(record.dim), f"{record.scalar:g}", f"{record.weyl_norm_sq:.6g}", spectrum
        )
    console.print(table)


@click.command()
@click.argument("kind", type=click.Choice([k.value for k in ModelKind if k is not ModelKind.RAW]), required=False)
@click.option("--name", help="Named model from the known-value table")
@click.option("--list", "list_models", is_flag=True, help="List the named models")
@click.option("--dim", "-n", type=int, default=None, help="Dimension (space_form, random)")
@click.option("--curvature", "-c", type=float, default=1.0, show_default=True, help="Sectional curvature")
@click.option("--factor", "factors", multiple=True, help="Product factor DIM:CURVATURE (repeatable)")
@click.option("--seed", type=int, default=None, help="Seed for random tensors")
@click.option("--weyl-scale", type=float, default=1.0, show_default=True)
@click.option("--ricci-scale", type=float, default=1.0, show_default=True)
@click.option("--scalar", type=float, default=0.0, show_default=True, help="Scalar curvature of a random tensor")
@click.option("--field", "as_field", is_flag=True, help="Wrap the tensor in a one-sample field file")
@click.option("--weight", type=float, default=1.0, show_default=True, help="Sample weight (volume) with --field")
@click.option("--out", "out_path", type=click.Path(), default=None, help="Write to this file instead of stdout")
@output_options
@click.pass_context
def zoo(
    ctx: click.Context,
    kind: str | None,
    name: str | None,
    list_models: bool,
    dim: int | None,
    curvature: float,
    factors: tuple[str, ...],
    seed: int | None,
    weyl_scale: float,
    ricci_scale: float,
    scalar: float,
    as_field: bool,
    weight: float,
    out_path: str | None,
    output: str | None,
    as_json: bool,
) -> None:
    """Generate a model tensor file (space form, product, random or named)."""
    fmt = get_output_format(ctx, output, as_json)

    def _run() -> None:
        if list_models:
            if fmt == "json":
                echo_json([known_values(n) for n in load_model_table().order])
            else:
                _print_model_list()
            return

        if name:
            spec = named_spec(name)
        elif kind is None:
            raise UsageError("Give a model kind, --name or --list")
        elif kind == ModelKind.PRODUCT:
            if not factors:
                raise UsageError("product needs at least one --factor DIM:CURVATURE")
            spec = ModelSpec(kind=ModelKind.PRODUCT, factors=tuple(parse_factor(f) for f in factors))
        else:
            if dim is None:
                raise UsageError(f"{kind} needs --dim")
            spec = ModelSpec(
                kind=ModelKind(kind),
                dim=dim,
                curvature=curvature,
                seed=get_seed(ctx, seed),
                weyl_scale=weyl_scale,
                ricci_scale=ricci_scale,
                scalar=scalar,
            )

        tensor = build_model(spec)
        if as_field:
            if not weight > 0:
                raise RangeError(f"--weight must be positive, got {weight}")
            data = field_to_dict(CurvatureField.constant(tensor, weight))
        else:
            data = tensor_to_dict(tensor)
        data["source"] = spec.to_dict()
        if name:
            data["known"] = known_values(name)

        text = dumps(data)
        if out_path:
            Path(out_path).write_text(text + "\n", encoding="utf-8")
            console.print(f"[green]✓[/green] Wrote {spec.kind.value} model (n={tensor.dim}) to {out_path}")
        else:
            click.echo(text)

    run_with_error_handling(_run, fmt)

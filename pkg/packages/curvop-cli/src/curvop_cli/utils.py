"""CLI utilities."""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Callable
from typing import Any, TypeVar

import click
from click.exceptions import Exit
from curvop_core import (
    Config,
    CurvatureField,
    CurvatureTensor,
    CurvopError,
    DimensionError,
    EmptyFieldError,
    FrameError,
    NotConformallyFlatError,
    NumericalError,
    PreconditionError,
    RangeError,
    UsageError,
    ValidationError,
    load_field,
    load_tensor,
)
from rich.console import Console
from rich.markup import escape
from rich.table import Table

console = Console()
logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

EXIT_INPUT = 2
EXIT_USAGE = 3
EXIT_NUMERICAL = 4

_EXIT_CODES: tuple[tuple[tuple[type[Exception], ...], int], ...] = (
    (
        (
            ValidationError,
            DimensionError,
            FrameError,
            EmptyFieldError,
            NotConformallyFlatError,
            PreconditionError,
        ),
        EXIT_INPUT,
    ),
    ((UsageError, RangeError, click.UsageError), EXIT_USAGE),
    ((NumericalError,), EXIT_NUMERICAL),
)


def exit_code_for(exc: Exception) -> int:
    for classes, code in _EXIT_CODES:
        if isinstance(exc, classes):
            return code
    return 1


def get_config(ctx: click.Context) -> Config:
    """Get Config instance from context."""
    return ctx.obj["config"]


def get_output_format(ctx: click.Context, value: str | None, as_json: bool = False) -> str:
    """Get output format from option or config."""
    if as_json:
        return "json"
    return value or get_config(ctx).get("output.format", "table")


def get_tol(ctx: click.Context) -> float:
    """Validation tolerance: --tol, then the config file."""
    if ctx.obj.get("tol") is not None:
        return float(ctx.obj["tol"])
    return float(get_config(ctx).get("tolerances.validation", 1e-9))


def get_threads(ctx: click.Context) -> int:
    return get_config(ctx).get_threads(ctx.obj.get("threads"))


def get_seed(ctx: click.Context, value: int | None) -> int:
    return get_config(ctx).get_seed(value)


def get_restarts(ctx: click.Context, value: int | None) -> int:
    return value if value is not None else int(get_config(ctx).get("ricci_k.restarts", 64))


def read_tensor(ctx: click.Context, path: str) -> CurvatureTensor:
    return load_tensor(path, tol=get_tol(ctx), check_bianchi=ctx.obj.get("check_bianchi", True))


def read_field(ctx: click.Context, path: str) -> CurvatureField:
    return load_field(path, tol=get_tol(ctx), check_bianchi=ctx.obj.get("check_bianchi", True))


def output_options(func: F) -> F:
    """Add -o/--output and the --json shortcut."""
    func = click.option("--json", "as_json", is_flag=True, help="Shortcut for --output json")(func)
    func = click.option("--output", "-o", type=click.Choice(["json", "table"]), help="Output format")(func)
    return func


def format_float(value: float) -> str:
    """17 significant digits; non-finite values become null."""
    if not math.isfinite(value):
        return "null"
    text = f"{value:.17g}"
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """Byte-stable JSON: insertion key order, floats with 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    close = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, list | tuple):
        if not obj:
            return "[]"
        if all(isinstance(x, int | float) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(dumps(x, indent, _level + 1) for x in obj) + "]"
        return "[\n" + ",\n".join(f"{pad}{dumps(x, indent, _level + 1)}" for x in obj) + "\n" + close + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if hasattr(obj, "item"):
        # numpy scalar
        return dumps(obj.item(), indent, _level)
    return json.dumps(str(obj), ensure_ascii=False)


def echo_json(obj: Any) -> None:
    click.echo(dumps(obj))


def format_value(value: Any) -> str:
    """Compact rendering for table cells."""
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, list | tuple):
        return ", ".join(format_value(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={format_value(v)}" for k, v in value.items())
    if value is None:
        return "-"
    return str(value)


def key_value_table(rows: dict[str, Any], title: str | None = None) -> Table:
    table = Table(show_header=True, header_style="bold magenta", title=title)
    table.add_column("Quantity")
    table.add_column("Value")
    for key, value in rows.items():
        table.add_row(escape(key), escape(format_value(value)))
    return table


def run_with_error_handling(func: Callable[[], None], output: str | None = None) -> None:
    """Run command handler with consistent error handling and exit codes."""
    try:
        func()
    except Exit:
        raise
    except Exception as e:
        code = exit_code_for(e)
        if code == 1 and not isinstance(e, CurvopError):
            logger.debug("Unexpected error", exc_info=True)
        message = e.format_message() if isinstance(e, click.ClickException) else str(e)
        if output == "json":
            click.echo(dumps({"status": "error", "error": type(e).__name__, "message": message}))
        else:
            console.print(f"[red]Error:[/red] {escape(message)}", highlight=False)
        raise Exit(code) from None

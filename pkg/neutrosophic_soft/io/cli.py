"""
Command Line Interface
======================

Define the *nsm* command line interface:

-   :attr:`neutrosophic_soft.io.cli.app`
-   :func:`neutrosophic_soft.io.cli.run_cli`
-   :func:`neutrosophic_soft.io.cli.main`

The exit codes are *0* on success, *2* on validation errors, *3* on shape
mismatches and *4* on usage errors, unknown norms, product kinds and
complement modes included.
"""

import sys
from pathlib import Path
from types import ModuleType

import typer
from colour.hints import Dict, List, Sequence
from colour.utilities import validate_method

from neutrosophic_soft.algebra import validate_complement_mode
from neutrosophic_soft.constants import PRECISION_MAXIMUM, SYMBOL_TIMES
from neutrosophic_soft.decision import nsm_decide
from neutrosophic_soft.fixtures import FIXTURE_LOADERS
from neutrosophic_soft.io.configuration import Configuration
from neutrosophic_soft.io.documents import (
    format_outcome_json,
    format_outcome_table,
    format_shape_report,
    read_matrix,
    serialize_matrix,
    write_text,
)
from neutrosophic_soft.matrices import (
    classify,
    from_soft_set,
    matrix_product,
    to_soft_set,
    transpose,
)
from neutrosophic_soft.sets import set_complement, set_intersection, set_union
from neutrosophic_soft.utilities import ShapeMismatchError, ValidationError

__author__ = "Neutrosophic Soft Developers"
__copyright__ = "Copyright 2026 Neutrosophic Soft Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Neutrosophic Soft Developers"
__status__ = "Production"

__all__ = [
    "CLICK_EXCEPTIONS",
    "EXIT_CODES",
    "OPERATION_KINDS",
    "OUTPUT_FORMATS",
    "app",
    "run_cli",
    "main",
]

EXIT_CODES: Dict[str, int] = {
    "success": 0,
    "validation": 2,
    "shape": 3,
    "usage": 4,
}
"""Exit codes of the command line interface."""

CLICK_EXCEPTIONS: ModuleType = sys.modules[typer.BadParameter.__module__]
"""
Exceptions module of the *click* package raising the *typer* usage errors,
either *click* itself or the copy vendored by *typer*.
"""

OPERATION_KINDS: tuple = ("union", "intersect", "complement", "transpose")
"""Operations of the *op* command."""

OUTPUT_FORMATS: tuple = ("table", "json")
"""Output formats of the *decide* command."""

app = typer.Typer(
    name="nsm",
    help="Neutrosophic soft sets and matrices algebra and decision making.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

_ARGUMENT_FILE = {"exists": True, "dir_okay": False, "readable": True}


def _emit(text: str, output: Path | None = None) -> None:
    """Write given text to given file or to the standard output."""

    if output is None:
        typer.echo(text)
    else:
        write_text(text, output)


def _precision(precision: int | None) -> int:
    """Return given precision or the configured one."""

    return Configuration().output_precision if precision is None else precision


@app.command()
def validate(
    file: Path = typer.Argument(..., help="Matrix document.", **_ARGUMENT_FILE),
) -> None:
    """Validate a matrix document."""

    M = read_matrix(file)
    m, n = M.shape

    typer.echo(f"OK {m}{SYMBOL_TIMES}{n}")


@app.command()
def op(
    a: Path = typer.Argument(..., help="First matrix document.", **_ARGUMENT_FILE),
    b: Path | None = typer.Argument(
        None, help="Second matrix document.", **_ARGUMENT_FILE
    ),
    kind: str = typer.Option(
        ..., "--kind", help="One of union, intersect, complement or transpose."
    ),
    norm: str | None = typer.Option(None, "--norm", help="Norm pair name."),
    complement_mode: str | None = typer.Option(
        None, "--complement-mode", help="One of identity_i or one_minus_i."
    ),
    precision: int | None = typer.Option(
        None, "--precision", min=0, max=PRECISION_MAXIMUM, help="Decimals."
    ),
    output: Path | None = typer.Option(None, "-o", "--output", help="Output file."),
) -> None:
    """Apply a set operation to one or two matrix documents."""

    configuration = Configuration()
    kind = validate_method(
        kind,
        OPERATION_KINDS,
        '"{0}" operation kind is invalid, it must be one of {1}!',
    )
    norm = configuration.norm if norm is None else norm
    complement_mode = validate_complement_mode(
        configuration.complement_mode if complement_mode is None else complement_mode
    )

    binary = kind in ("union", "intersect")
    if binary and b is None:
        raise typer.BadParameter(
            f'"{kind}" operation requires a second matrix document!',
            param_hint="B",
        )
    if not binary and b is not None:
        raise typer.BadParameter(
            f'"{kind}" operation accepts a single matrix document!',
            param_hint="B",
        )

    A = read_matrix(a)

    if kind == "transpose":
        M = transpose(A)
    elif kind == "complement":
        M = from_soft_set(set_complement(to_soft_set(A), complement_mode))
    else:
        operation = set_union if kind == "union" else set_intersection
        M = from_soft_set(
            operation(to_soft_set(A), to_soft_set(read_matrix(b)), norm)
        )

    _emit(serialize_matrix(M, _precision(precision)), output)


@app.command()
def product(
    a: Path = typer.Argument(..., help="First matrix document.", **_ARGUMENT_FILE),
    b: Path = typer.Argument(..., help="Second matrix document.", **_ARGUMENT_FILE),
    kind: str | None = typer.Option(None, "--kind", help="One of and or or."),
    norm: str | None = typer.Option(None, "--norm", help="Norm pair name."),
    precision: int | None = typer.Option(
        None, "--precision", min=0, max=PRECISION_MAXIMUM, help="Decimals."
    ),
    output: Path | None = typer.Option(None, "-o", "--output", help="Output file."),
) -> None:
    """Compute the And-product or Or-product of two matrix documents."""

    configuration = Configuration()

    M = matrix_product(
        read_matrix(a),
        read_matrix(b),
        configuration.product_kind if kind is None else kind,
        configuration.norm if norm is None else norm,
    )

    _emit(serialize_matrix(M, _precision(precision)), output)


@app.command()
def decide(
    a: Path = typer.Argument(
        ..., help="Matrix document of the first decision maker.", **_ARGUMENT_FILE
    ),
    b: Path = typer.Argument(
        ..., help="Matrix document of the second decision maker.", **_ARGUMENT_FILE
    ),
    product_kind: str | None = typer.Option(
        None, "--product", help="One of and or or."
    ),
    norm: str | None = typer.Option(None, "--norm", help="Norm pair name."),
    format_: str = typer.Option("table", "--format", help="One of table or json."),
    precision: int | None = typer.Option(
        None, "--precision", min=0, max=PRECISION_MAXIMUM, help="Decimals."
    ),
    output: Path | None = typer.Option(None, "-o", "--output", help="Output file."),
) -> None:
    """Decide between the objects of two decision makers matrix documents."""

    configuration = Configuration()
    format_ = validate_method(
        format_,
        OUTPUT_FORMATS,
        '"{0}" output format is invalid, it must be one of {1}!',
    )

    outcome = nsm_decide(
        read_matrix(a),
        read_matrix(b),
        configuration.product_kind if product_kind is None else product_kind,
        configuration.norm if norm is None else norm,
    )

    precision = _precision(precision)
    if format_ == "json":
        text = format_outcome_json(outcome, precision)
    else:
        text = format_outcome_table(outcome, precision)

    _emit(text, output)


@app.command(name="classify")
def classify_(
    file: Path = typer.Argument(..., help="Matrix document.", **_ARGUMENT_FILE),
) -> None:
    """Classify the shape of a matrix document."""

    typer.echo(format_shape_report(classify(read_matrix(file))))


@app.command()
def fixtures() -> None:
    """List the bundled fixtures and their matrix documents."""

    lines: List[str] = []
    for key in FIXTURE_LOADERS:
        loader = FIXTURE_LOADERS[key]()
        lines.append(f"{loader.id}: {', '.join(loader.FILES)}")

    typer.echo("\n".join(lines))


def run_cli(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line interface with given arguments and return the exit
    code, the expected errors are reported on the standard error stream.

    Parameters
    ----------
    argv
        Command line arguments, the process arguments if *None*.

    Returns
    -------
    :class:`int`
        Exit code.
    """

    try:
        code = app(
            args=list(sys.argv[1:] if argv is None else argv),
            prog_name="nsm",
            standalone_mode=False,
        )
    except CLICK_EXCEPTIONS.UsageError as error:
        error.show()

        return EXIT_CODES["usage"]
    except typer.Abort:
        typer.echo("Aborted!", err=True)

        return 1
    except ShapeMismatchError as error:
        typer.echo(f"Error: {error}", err=True)

        return EXIT_CODES["shape"]
    except ValidationError as error:
        typer.echo(f"Error: {error}", err=True)

        return EXIT_CODES["validation"]
    except ValueError as error:
        typer.echo(f"Error: {error}", err=True)

        return EXIT_CODES["usage"]

    return code if isinstance(code, int) else EXIT_CODES["success"]


def main() -> None:
    """Entry point of the *nsm* console script."""

    sys.exit(run_cli())


if __name__ == "__main__":
    main()

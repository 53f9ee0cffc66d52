# tiltserver/cli.py
import logging
from contextlib import contextmanager
from typing import List, Optional, Tuple

import typer

from errors import AlgebraTooLarge, MismatchReport
from settings import EngineSettings
from tiltserver import formatting
from tiltserver.algebra_spec import AlgebraSpec
from tiltserver.engine.algebra import NakayamaAlgebra
from tiltserver.engine.controller import TiltController
from tiltserver.engine.geometry import SignedTriangulation

app = typer.Typer(
    name="nakayama-tilt",
    help="Support tau-tilting pairs, triangulations and Hasse quivers of Nakayama algebras.",
    no_args_is_help=True,
    add_completion=False,
)

CYCLIC = typer.Option(None, "--cyclic", help="Cyclic algebra on N vertices (use with --r)")
RADICAL = typer.Option(None, "--r", help="Loewy length of every projective of the cyclic algebra")
LINEAR = typer.Option(False, "--linear", help="Linear algebra (use with --kupisch)")
KUPISCH = typer.Option(None, "--kupisch", help="Kupisch series a,b,c of the linear algebra")
CYCLIC_KUPISCH = typer.Option(None, "--cyclic-kupisch", help="Kupisch series a,b,c of a cyclic algebra")
ALGEBRA = typer.Option(None, "--algebra", help="JSON algebra literal")
ZERO = typer.Option(False, "--zero", help="The zero algebra")
FORMAT = typer.Option(None, "--format", help="text, json or dot")


@contextmanager
def _exit_codes():
    # 1 for a failed verification, 2 for anything the caller got wrong
    try:
        yield
    except MismatchReport as e:
        typer.echo(f"Verification failed: {str(e)}", err=True)
        raise typer.Exit(code=1)
    except (ValueError, AlgebraTooLarge) as e:
        typer.echo(f"Error: {str(e)}", err=True)
        raise typer.Exit(code=2)


def _engine(ctx: typer.Context) -> TiltController:
    return ctx.obj


def _algebra(engine: TiltController, cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero) -> NakayamaAlgebra:
    spec = AlgebraSpec.from_flags(cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero)
    return engine.algebra(spec)


def _format(engine: TiltController, output_format: Optional[str], allowed: Tuple[str, ...]) -> str:
    chosen = (output_format or engine.settings.default_format).lower()
    if chosen not in allowed:
        raise ValueError(f"--format must be one of {', '.join(allowed)}, got {chosen!r}")
    return chosen


def _int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise ValueError(f"expected comma separated integers, got {text!r}")


@app.callback()
def main_callback(ctx: typer.Context):
    with _exit_codes():
        settings = EngineSettings()
        settings.configure_logging()
        ctx.obj = TiltController(settings)


@app.command("enumerate")
def enumerate_command(
    ctx: typer.Context,
    which: str = typer.Option("stt", "--which", help="stt, tau or proper"),
    cyclic: Optional[int] = CYCLIC,
    r: Optional[int] = RADICAL,
    linear: bool = LINEAR,
    kupisch: Optional[str] = KUPISCH,
    cyclic_kupisch: Optional[str] = CYCLIC_KUPISCH,
    algebra: Optional[str] = ALGEBRA,
    zero: bool = ZERO,
    output_format: Optional[str] = FORMAT,
):
    """List support tau-tilting pairs in canonical order, one per line."""
    engine = _engine(ctx)
    with _exit_codes():
        alg = _algebra(engine, cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero)
        chosen = _format(engine, output_format, ("text", "json"))
        pairs = engine.enumerate(alg, which)
        if chosen == "json":
            typer.echo(formatting.pairs_json(pairs))
        else:
            typer.echo(formatting.format_pairs(alg, pairs), nl=False)


@app.command("hasse")
def hasse_command(
    ctx: typer.Context,
    method: str = typer.Option("direct", "--method", help="direct, rejection or both"),
    order: Optional[str] = typer.Option(None, "--order", help="Vertices to reject first, e.g. 1,2,3"),
    trace: bool = typer.Option(False, "--trace", help="Print one line per rejection step"),
    cyclic: Optional[int] = CYCLIC,
    r: Optional[int] = RADICAL,
    linear: bool = LINEAR,
    kupisch: Optional[str] = KUPISCH,
    cyclic_kupisch: Optional[str] = CYCLIC_KUPISCH,
    algebra: Optional[str] = ALGEBRA,
    zero: bool = ZERO,
    output_format: Optional[str] = FORMAT,
):
    """Hasse quiver of the support tau-tilting poset."""
    engine = _engine(ctx)
    with _exit_codes():
        alg = _algebra(engine, cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero)
        chosen = _format(engine, output_format, ("text", "json", "dot"))
        if trace and method == "direct":
            raise ValueError("--trace needs --method rejection or both")
        steps = []

        def record(big, j, n2, size):
            steps.append(formatting.format_trace_step(big, j, n2, size))

        hasse = engine.hasse(alg, method, _int_list(order), record if trace else None)
        if chosen == "json":
            for line in steps:
                typer.echo(line, err=True)
            typer.echo(formatting.hasse_json(hasse))
        elif chosen == "dot":
            for line in steps:
                typer.echo(f"// {line}")
            typer.echo(formatting.hasse_dot(alg, hasse), nl=False)
        else:
            for line in steps:
                typer.echo(line)
            typer.echo(formatting.format_hasse_text(alg, hasse), nl=False)


@app.command("translate")
def translate_command(
    ctx: typer.Context,
    payload: str = typer.Argument(..., help="Value in the source model: JSON module, arcs like '<*,2> <8,2>', or 2,1,0"),
    source: str = typer.Option(..., "--from", help="module, arcs or seq"),
    target: str = typer.Option(..., "--to", help="module, arcs or seq"),
    n: Optional[int] = typer.Option(None, "--n", help="Boundary points when no algebra is given"),
    cyclic: Optional[int] = CYCLIC,
    r: Optional[int] = RADICAL,
    linear: bool = LINEAR,
    kupisch: Optional[str] = KUPISCH,
    cyclic_kupisch: Optional[str] = CYCLIC_KUPISCH,
    algebra: Optional[str] = ALGEBRA,
    zero: bool = ZERO,
    output_format: Optional[str] = FORMAT,
):
    """Carry a payload between tau-tilting modules, triangulations and sequences."""
    engine = _engine(ctx)
    with _exit_codes():
        named = any(x for x in (cyclic, linear, cyclic_kupisch, algebra, zero))
        alg = _algebra(engine, cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero) if named else None
        chosen = _format(engine, output_format, ("text", "json"))
        size = len(alg) if alg is not None else n
        value = engine.parse_payload(source, payload, size)
        image = engine.translate(source, target, value, alg)
        if chosen == "json":
            typer.echo(formatting.payload_json(image))
        else:
            typer.echo(formatting.format_payload(alg, image))


@app.command("triangulate")
def triangulate_command(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Number of boundary points"),
    bounds: Optional[str] = typer.Option(None, "--bounds", help="Maximal inner arc length per terminal point"),
    signed: bool = typer.Option(False, "--signed", help="List signed triangulations"),
    output_format: Optional[str] = FORMAT,
):
    """List triangulations of the once-punctured n-gon with their top sequences."""
    engine = _engine(ctx)
    with _exit_codes():
        chosen = _format(engine, output_format, ("text", "json", "dot"))
        triangulations = engine.triangulations(n, _int_list(bounds), signed)
        if chosen == "json":
            typer.echo(formatting.triangulations_json(triangulations))
        elif chosen == "dot":
            typer.echo(formatting.triangulations_dot(triangulations), nl=False)
        else:
            for item in triangulations:
                if isinstance(item, SignedTriangulation):
                    typer.echo(formatting.format_signed(item))
                else:
                    typer.echo(formatting.format_triangulation(item))


@app.command("count")
def count_command(
    ctx: typer.Context,
    cyclic: Optional[int] = CYCLIC,
    r: Optional[int] = RADICAL,
    linear: bool = LINEAR,
    kupisch: Optional[str] = KUPISCH,
    cyclic_kupisch: Optional[str] = CYCLIC_KUPISCH,
    algebra: Optional[str] = ALGEBRA,
    zero: bool = ZERO,
    output_format: Optional[str] = FORMAT,
):
    """Count tau-tilting modules and support tau-tilting pairs."""
    engine = _engine(ctx)
    with _exit_codes():
        alg = _algebra(engine, cyclic, r, linear, kupisch, cyclic_kupisch, algebra, zero)
        chosen = _format(engine, output_format, ("text", "json"))
        reports = engine.count(alg)
        if chosen == "json":
            typer.echo(formatting.count_reports_json(reports))
        else:
            typer.echo(formatting.format_count_reports(reports), nl=False)


@app.command("verify")
def verify_command(
    ctx: typer.Context,
    tables: bool = typer.Option(False, "--tables", help="Recount the four count tables"),
    bijections: Optional[int] = typer.Option(None, "--bijections", help="Check the module/arc/sequence bijections up to N vertices"),
    rejection: Optional[Tuple[int, int]] = typer.Option(None, "--rejection", help="N_MAX R_MAX: rejection against direct Hasse quivers"),
):
    """Run the verification harnesses; exit code 1 on any mismatch."""
    engine = _engine(ctx)
    with _exit_codes():
        wants_rejection = rejection is not None and rejection[0] is not None
        if not (tables or bijections is not None or wants_rejection):
            raise ValueError("give at least one of --tables, --bijections N, --rejection N R")
        if tables:
            reports = engine.verify_tables()
            typer.echo(f"tables: {len(reports)} rows agree")
        if bijections is not None:
            typer.echo(formatting.format_check(engine.verify_bijections(bijections)), nl=False)
        if wants_rejection:
            typer.echo(formatting.format_check(engine.verify_rejection(*rejection)), nl=False)
        logging.info("Verification finished")


def main():
    app()


if __name__ == "__main__":
    main()

from mcp.server.fastmcp import FastMCP, Context
from tiltserver.algebra_wrapper import reports_engine_errors
from tiltserver.context_manager import app_lifespan
from tiltserver import formatting
from typing import Optional

APP_INSTRUCTIONS = """
You are a careful assistant for representation theory with access to an exact engine for
support tau-tilting theory over Nakayama algebras via the NakayamaTilt server.

Algebras are passed as JSON literals:
- {"kind":"cyclic","kupisch":[3,3,3]} for the cyclic quiver 1 -> 3 -> 2 -> 1 with those Loewy lengths
- {"kind":"linear","kupisch":[1,2,3]} for the path 3 -> 2 -> 1 (loewy(1) is always 1)
- {"kind":"general","vertices":[...],"next_down":{...},"loewy":{...}} for disconnected algebras
- {"kind":"zero"} for the zero algebra

You can:
- Enumerate support tau-tilting pairs, tau-tilting modules or proper pairs
- Compute the Hasse quiver of the support tau-tilting poset, directly or by iterated rejection
- Translate between tau-tilting modules, triangulations of the punctured polygon and integer sequences
- List triangulations, optionally restricted by arc lengths or signed at the puncture
- Count pairs and reproduce the known count tables

Modules are written by their composition factors from the top, e.g. 2/1/3, and summands are
joined with +. Killed vertices of a proper pair follow in brackets.

Do not guess counts or quivers. Use the tools to compute them.
"""

# Create an MCP server
mcp = FastMCP(
    name="NakayamaTilt",
    dependencies=["mcp[cli]", "networkx", "python-dotenv", "typer"],
    lifespan=app_lifespan,
    instructions=APP_INSTRUCTIONS
)


def _bounds(text: Optional[str]) -> Optional[list]:
    if not text:
        return None
    return [int(part) for part in text.split(",") if part.strip()]


@mcp.tool()
@reports_engine_errors
async def enumerate_pairs(ctx: Context, algebra: str, which: str = "stt", output_format: str = "text") -> str:
    """
    List the support tau-tilting pairs of an algebra in canonical order

    Args:
        ctx: FastMCP Context
        algebra: JSON algebra literal
        which: stt (all pairs), tau (tau-tilting modules only) or proper (pairs with killed vertices)
        output_format: text or json

    Returns:
        One pair per line, or a JSON array of {"summands": [...], "killed": [...]} objects
    """
    engine = ctx.request_context.lifespan_context.engine
    alg = engine.algebra(algebra)
    pairs = engine.enumerate(alg, which)
    if output_format == "json":
        return formatting.pairs_json(pairs)
    result = f"{len(pairs)} pairs over {alg.describe()}:\n\n"
    result += formatting.format_pairs(alg, pairs)
    return result


@mcp.tool()
@reports_engine_errors
async def hasse_quiver(ctx: Context, algebra: str, method: str = "direct", output_format: str = "dot",
                       order: Optional[str] = None) -> str:
    """
    Hasse quiver of the support tau-tilting poset

    Args:
        ctx: FastMCP Context
        algebra: JSON algebra literal
        method: direct, rejection or both (both checks the two agree)
        output_format: dot, json or text
        order: comma separated vertices to reject first when building by rejection

    Returns:
        The quiver in the requested format, preceded by the rejection steps for rejection builds
    """
    engine = ctx.request_context.lifespan_context.engine
    alg = engine.algebra(algebra)
    steps = []

    def trace(big, j, n2, size):
        steps.append(formatting.format_trace_step(big, j, n2, size))

    hasse = engine.hasse(alg, method, _bounds(order), trace)
    if output_format == "json":
        return formatting.hasse_json(hasse)
    if output_format == "text":
        return "".join(f"{line}\n" for line in steps) + formatting.format_hasse_text(alg, hasse)
    # DOT comments keep the output loadable by graphviz
    return "".join(f"// {line}\n" for line in steps) + formatting.hasse_dot(alg, hasse)


@mcp.tool()
@reports_engine_errors
async def translate_model(ctx: Context, source: str, target: str, payload: str,
                          algebra: Optional[str] = None, n: Optional[int] = None) -> str:
    """
    Carry a tau-tilting module, a triangulation or a sequence through the bijections between them

    Args:
        ctx: FastMCP Context
        source: module, arcs or seq
        target: module, arcs or seq
        payload: the value in the source model, e.g. "2,1,0", "<*,1> <*,2> <2,1>" or a JSON module
        algebra: JSON algebra literal, required whenever a module is involved
        n: number of boundary points for arcs when no algebra is given

    Returns:
        The image in the target model in text form
    """
    engine = ctx.request_context.lifespan_context.engine
    alg = engine.algebra(algebra) if algebra else None
    size = len(alg) if alg is not None else n
    value = engine.parse_payload(source, payload, size)
    return formatting.format_payload(alg, engine.translate(source, target, value, alg))


@mcp.tool()
@reports_engine_errors
async def list_triangulations(ctx: Context, n: int, bounds: Optional[str] = None, signed: bool = False,
                              output_format: str = "text") -> str:
    """
    Triangulations of the once-punctured n-gon

    Args:
        ctx: FastMCP Context
        n: number of boundary points
        bounds: comma separated maximal inner arc lengths per terminal point
        signed: list signed triangulations instead
        output_format: text, json or dot

    Returns:
        One triangulation per line with its top sequence, or JSON / DOT
    """
    engine = ctx.request_context.lifespan_context.engine
    triangulations = engine.triangulations(n, _bounds(bounds), signed)
    if output_format == "json":
        return formatting.triangulations_json(triangulations)
    if output_format == "dot":
        return formatting.triangulations_dot(triangulations)
    render = formatting.format_signed if signed else formatting.format_triangulation
    result = f"{len(triangulations)} triangulations:\n\n"
    for item in triangulations:
        result += render(item) + "\n"
    return result


@mcp.tool()
@reports_engine_errors
async def count_pairs(ctx: Context, algebra: str) -> str:
    """
    Number of tau-tilting modules, proper pairs and all support tau-tilting pairs

    Args:
        ctx: FastMCP Context
        algebra: JSON algebra literal

    Returns:
        A table with the enumerated counts and any recurrence or closed form that applies
    """
    engine = ctx.request_context.lifespan_context.engine
    return formatting.format_count_reports(engine.count(engine.algebra(algebra)))


@mcp.tool()
@reports_engine_errors
async def verify_tables(ctx: Context) -> str:
    """
    Recount the four count tables for Gamma_n^r and Lambda_n^r, n, r up to 5

    Args:
        ctx: FastMCP Context

    Returns:
        The full comparison table, or the mismatching rows
    """
    engine = ctx.request_context.lifespan_context.engine
    reports = engine.verify_tables()
    return f"All {len(reports)} rows agree.\n\n" + formatting.format_count_reports(reports)

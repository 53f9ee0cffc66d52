# tiltserver/formatting.py
import json
from typing import Iterable, List, Optional, Sequence

from tiltserver.engine.algebra import NakayamaAlgebra
from tiltserver.engine.counting import CheckResult, CountReport
from tiltserver.engine.geometry import PUNCTURE, SignedTriangulation, Triangulation
from tiltserver.engine.modcat import BasicModule, stacked_label
from tiltserver.engine.poset import HasseQuiver
from tiltserver.engine.sequences import SeqA, top_of_triangulation
from tiltserver.engine.tautilt import SttPair


def dump_json(value) -> str:
    return json.dumps(value, indent=2, sort_keys=True)


def format_module(alg: NakayamaAlgebra, module: BasicModule) -> str:
    """Summands in stacked notation joined with +, or 0 for the zero module"""
    if not module:
        return "0"
    return " + ".join(stacked_label(alg, m) for m in module)


def format_pair(alg: NakayamaAlgebra, pair: SttPair) -> str:
    result = format_module(alg, pair.module)
    if pair.killed:
        result += f" [{','.join(str(v) for v in pair.killed)}]"
    return result


def format_pairs(alg: NakayamaAlgebra, pairs: Iterable[SttPair]) -> str:
    """One pair per line

    Args:
        alg: the algebra the pairs live over
        pairs: pairs in the order to print

    Returns:
        String with one formatted pair per line, empty for no pairs
    """
    result = ""
    for pair in pairs:
        result += format_pair(alg, pair) + "\n"
    return result


def pairs_json(pairs: Iterable[SttPair]) -> str:
    return dump_json([pair.to_dict() for pair in pairs])


def format_hasse_text(alg: NakayamaAlgebra, hasse: HasseQuiver) -> str:
    result = f"{len(hasse.vertices)} vertices, {len(hasse.arrows)} arrows\n"
    for k, pair in enumerate(hasse.vertices):
        result += f"{k}: {format_pair(alg, pair)}\n"
    for a, b in hasse.arrows:
        result += f"{a} -> {b}\n"
    return result


def hasse_json(hasse: HasseQuiver) -> str:
    return dump_json({
        "vertices": [pair.to_dict() for pair in hasse.vertices],
        "arrows": [[a, b] for a, b in hasse.arrows],
    })


def hasse_dot(alg: NakayamaAlgebra, hasse: HasseQuiver) -> str:
    """Hasse quiver as a DOT digraph, arrows pointing down the order"""
    result = "digraph hasse {\n"
    result += "\trankdir=TB;\n"
    for k, pair in enumerate(hasse.vertices):
        result += f'\t"{k}" [label="{format_pair(alg, pair)}"];\n'
    for a, b in hasse.arrows:
        result += f'\t"{a}" -> "{b}";\n'
    result += "}\n"
    return result


def format_triangulation(x: Triangulation) -> str:
    return f"{x}  top={top_of_triangulation(x)}"


def format_signed(sx: SignedTriangulation) -> str:
    return f"{format_triangulation(sx.triangulation)}  sign={sx.sign}"


def triangulation_dict(x: Triangulation) -> dict:
    return {
        "n": x.n,
        "arcs": [arc.to_dict() for arc in x.arcs],
        "top": list(top_of_triangulation(x).a),
    }


def triangulations_json(triangulations: Sequence) -> str:
    result = []
    for item in triangulations:
        if isinstance(item, SignedTriangulation):
            entry = triangulation_dict(item.triangulation)
            entry["sign"] = item.sign
        else:
            entry = triangulation_dict(item)
        result.append(entry)
    return dump_json(result)


def triangulation_dot(x: Triangulation, name: str = "triangulation", sign: str = "") -> str:
    """
    Schematic drawing: the boundary n-gon as dashed edges, the puncture as a node `*`,
    and one solid edge per arc. Nothing is placed with coordinates.
    """
    result = f"graph {name} {{\n"
    label = f"{x}" + (f" ({sign})" if sign else "")
    result += f'\tlabel="{label}";\n'
    result += '\t"*" [shape=point];\n'
    for p in range(1, x.n + 1):
        result += f'\t"{p}" [shape=circle];\n'
    if x.n > 1:
        for p in range(1, x.n + 1):
            result += f'\t"{p}" -- "{p % x.n + 1}" [style=dashed];\n'
    for arc in x.arcs:
        start = "*" if arc.start == PUNCTURE else str(arc.start)
        result += f'\t"{start}" -- "{arc.end}" [label="{arc}"];\n'
    result += "}\n"
    return result


def triangulations_dot(triangulations: Sequence) -> str:
    result = ""
    for k, item in enumerate(triangulations):
        if isinstance(item, SignedTriangulation):
            result += triangulation_dot(item.triangulation, f"triangulation_{k}", item.sign)
        else:
            result += triangulation_dot(item, f"triangulation_{k}")
    return result


def format_sequence(seq: SeqA) -> str:
    return str(seq)


def format_payload(alg: Optional[NakayamaAlgebra], value) -> str:
    """Text form of a translated value: a sequence, a triangulation or a pair"""
    if isinstance(value, SeqA):
        return format_sequence(value)
    if isinstance(value, Triangulation):
        return str(value)
    return format_pair(alg, value)


def payload_json(value) -> str:
    if isinstance(value, SeqA):
        return dump_json(list(value.a))
    if isinstance(value, Triangulation):
        return dump_json([arc.to_dict() for arc in value.arcs])
    return dump_json(value.to_dict())


def format_count_reports(reports: List[CountReport]) -> str:
    """Fixed-width table of count reports"""
    def cell(value) -> str:
        return "-" if value is None else str(value)

    result = f"{'algebra':<28}{'method':<13}{'tau':>6}{'proper':>8}{'stt':>6}  expected\n"
    for report in reports:
        tau_count, proper_count, stt_count = (cell(c) for c in report.counts)
        expected = "-" if report.expected is None else "/".join(cell(e) for e in report.expected)
        status = "" if report.agrees else "  MISMATCH"
        result += (
            f"{report.algebra:<28}{report.method:<13}{tau_count:>6}{proper_count:>8}{stt_count:>6}"
            f"  {expected}{status}\n"
        )
    return result


def count_reports_json(reports: List[CountReport]) -> str:
    return dump_json([report.to_dict() for report in reports])


def format_check(result: CheckResult) -> str:
    text = f"{result.name}: {result.checked} checked, {len(result.failures)} failures\n"
    for failure in result.failures:
        text += f"  {failure}\n"
    return text


def check_json(result: CheckResult) -> str:
    return dump_json({"name": result.name, "checked": result.checked, "failures": result.failures})


def format_trace_step(alg: NakayamaAlgebra, j: int, n2: int, size: int) -> str:
    return f"{alg.describe()}: reject P_{j}, |N2| = {n2}, {size} pairs"

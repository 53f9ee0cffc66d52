# tiltserver/engine/geometry.py
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Union

import networkx as nx

from errors import ArcNotPresent, ArcTooLong, LoewyTooSmall, NotInDomain, NotTauRigid
from tiltserver.engine.algebra import NakayamaAlgebra
from tiltserver.engine.modcat import Indec, basic_module, is_projective, is_tau_rigid_indec, projective
from tiltserver.engine.tautilt import SttPair, is_support_tau_tilting

PUNCTURE = 0


@dataclass(frozen=True, order=True)
class Arc:
    """
    An admissible arc of the punctured n-gon, ordered by terminal point.

    `start` is a boundary point for an inner arc <start,end> and PUNCTURE for the projective
    arc <*,end>.
    """
    end: int
    start: int = PUNCTURE

    @classmethod
    def inner(cls, i: int, j: int) -> "Arc":
        return cls(end=j, start=i)

    @classmethod
    def proj(cls, j: int) -> "Arc":
        return cls(end=j, start=PUNCTURE)

    @property
    def is_projective(self) -> bool:
        return self.start == PUNCTURE

    def length(self, n: int) -> int:
        """Number of boundary steps from start to end, in [2, n] for inner arcs"""
        if self.is_projective:
            raise ValueError("projective arcs have no length")
        return (self.end - self.start) % n or n

    def __str__(self) -> str:
        return f"<*,{self.end}>" if self.is_projective else f"<{self.start},{self.end}>"

    def to_dict(self) -> dict:
        if self.is_projective:
            return {"kind": "proj", "j": self.end}
        return {"kind": "inner", "i": self.start, "j": self.end}

    @classmethod
    def from_dict(cls, data: dict) -> "Arc":
        if data["kind"] == "proj":
            return cls.proj(int(data["j"]))
        return cls.inner(int(data["i"]), int(data["j"]))


@dataclass(frozen=True, order=True)
class Triangulation:
    n: int
    arcs: tuple

    @classmethod
    def of(cls, n: int, arcs: Iterable[Arc]) -> "Triangulation":
        return cls(n=n, arcs=tuple(sorted(set(arcs))))

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.arcs)


@dataclass(frozen=True, order=True)
class SignedTriangulation:
    triangulation: Triangulation
    sign: str = "+"

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")

    def __str__(self) -> str:
        return f"{self.triangulation} ({self.sign})"


def _in_interval(x: int, first: int, size: int, n: int) -> bool:
    # the cyclic interval of `size` points starting at `first`
    return (x - first) % n < size


def compatible(a: Arc, b: Arc, n: int) -> bool:
    if a == b or (a.is_projective and b.is_projective):
        return True
    if a.is_projective or b.is_projective:
        p, inner = (a, b) if a.is_projective else (b, a)
        t = inner.length(n)
        return not _in_interval(p.end, inner.start + 1, t - 1, n)
    i, j, s = a.start, a.end, a.length(n)
    k, l, t = b.start, b.end, b.length(n)
    crosses = (
        (_in_interval(j, k + 1, t - 1, n) and _in_interval(k + 1, i + 2, s - 1, n))
        or (_in_interval(l, i + 1, s - 1, n) and _in_interval(i + 1, k + 2, t - 1, n))
    )
    return not crosses


def admissible_arcs(n: int, bounds: Optional[Sequence[int]] = None) -> List[Arc]:
    """All projective arcs and the inner arcs with length at most min(bounds[j-1], n)."""
    arcs = [Arc.proj(j) for j in range(1, n + 1)]
    for j in range(1, n + 1):
        limit = n if bounds is None else min(bounds[j - 1], n)
        for t in range(2, limit + 1):
            arcs.append(Arc.inner((j - t - 1) % n + 1, j))
    return sorted(arcs)


def _maximal_compatible_sets(n: int, arcs: List[Arc]) -> List[Triangulation]:
    graph = nx.Graph()
    graph.add_nodes_from(arcs)
    graph.add_edges_from((a, b) for a, b in itertools.combinations(arcs, 2) if compatible(a, b, n))
    return sorted(Triangulation.of(n, clique) for clique in nx.find_cliques(graph))


def enumerate_triangulations(n: int) -> List[Triangulation]:
    if n < 1:
        return []
    result = _maximal_compatible_sets(n, admissible_arcs(n))
    for x in result:
        assert len(x.arcs) == n, f"maximal compatible set {x} does not have {n} arcs"
    return result


def enumerate_restricted(n: int, bounds: Sequence[int]) -> List[Triangulation]:
    """Triangulations whose inner arcs ending at j have length at most bounds[j-1]"""
    if len(bounds) != n or any(b < 1 for b in bounds):
        raise ValueError(f"need {n} positive length bounds, got {list(bounds)}")
    candidates = _maximal_compatible_sets(n, admissible_arcs(n, bounds))
    result = [x for x in candidates if len(x.arcs) == n]
    if len(result) != len(candidates):
        logging.info(f"Dropped {len(candidates) - len(result)} maximal sets smaller than {n} for bounds {list(bounds)}")
    return result


def enumerate_signed(n: int, bounds: Optional[Sequence[int]] = None) -> List[SignedTriangulation]:
    triangulations = enumerate_triangulations(n) if bounds is None else enumerate_restricted(n, bounds)
    return [SignedTriangulation(x, sign) for x in triangulations for sign in ("+", "-")]


def fan_count(x: Triangulation, i: int, j: int) -> int:
    """Inner arcs of x lying inside the fan cut out by <*,i>, <*,j> and the boundary from i to j"""
    width = (j - i) % x.n or x.n
    count = 0
    for arc in x.arcs:
        if arc.is_projective:
            continue
        offset = (arc.start - i) % x.n
        if offset + arc.length(x.n) <= width:
            count += 1
    return count


def _require_standard(alg: NakayamaAlgebra) -> int:
    if alg.is_zero or not alg.is_standard():
        raise NotInDomain(f"{alg.describe()} is not labelled 1..n along its arrows")
    return len(alg.vertices)


def arc_to_indec(a: Arc, alg: NakayamaAlgebra) -> Indec:
    n = _require_standard(alg)
    if a.is_projective:
        return projective(alg, a.end)
    t = a.length(n)
    if t > alg.loewy(a.end):
        raise ArcTooLong(f"{a} has length {t} > loewy({a.end}) = {alg.loewy(a.end)}")
    return Indec(a.end, t - 1)


def indec_to_arc(m: Indec, alg: NakayamaAlgebra) -> Arc:
    n = _require_standard(alg)
    if is_projective(alg, m):
        return Arc.proj(m.top)
    if not is_tau_rigid_indec(alg, m):
        raise NotTauRigid(f"({m.top},{m.length}) is not tau-rigid")
    return Arc.inner((m.top - m.length - 2) % n + 1, m.top)


def triangulation_to_tau_tilt(x: Triangulation, alg: NakayamaAlgebra) -> SttPair:
    modules = [arc_to_indec(a, alg) for a in x.arcs]
    pair = is_support_tau_tilting(alg, modules)
    if pair is None or not pair.is_tau_tilting:
        raise NotInDomain(f"{x} does not map to a tau-tilting module")
    return pair


def tau_tilt_to_triangulation(pair: SttPair, alg: NakayamaAlgebra) -> Triangulation:
    n = _require_standard(alg)
    if not pair.is_tau_tilting:
        raise NotInDomain("only tau-tilting modules correspond to triangulations")
    return Triangulation.of(n, (indec_to_arc(m, alg) for m in pair.module))


def _require_long(alg: NakayamaAlgebra) -> int:
    n = _require_standard(alg)
    if any(length < n for length in alg.loewy_series):
        raise LoewyTooSmall(f"signed triangulations need every loewy >= {n}, got {alg.describe()}")
    return n


def signed_to_stt(sx: SignedTriangulation, alg: NakayamaAlgebra) -> SttPair:
    n = _require_long(alg)
    if sx.sign == "+":
        return triangulation_to_tau_tilt(sx.triangulation, alg)
    inner = [arc_to_indec(a, alg) for a in sx.triangulation.arcs if not a.is_projective]
    killed = sorted(a.end % n + 1 for a in sx.triangulation.arcs if a.is_projective)
    return SttPair(basic_module(inner), tuple(killed))


def stt_to_signed(pair: SttPair, alg: NakayamaAlgebra) -> SignedTriangulation:
    n = _require_long(alg)
    if pair.is_tau_tilting:
        return SignedTriangulation(tau_tilt_to_triangulation(pair, alg), "+")
    arcs = [indec_to_arc(m, alg) for m in pair.module]
    if any(a.is_projective for a in arcs):
        raise NotInDomain("proper pairs over this algebra have no projective summands")
    arcs.extend(Arc.proj((v - 2) % n + 1) for v in pair.killed)
    return SignedTriangulation(Triangulation.of(n, arcs), "-")


def arc_slot(sx: SignedTriangulation, a: Arc, alg: NakayamaAlgebra) -> Union[Indec, int]:
    """The summand or killed vertex of signed_to_stt(sx) contributed by the arc a"""
    if a not in sx.triangulation:
        raise ArcNotPresent(f"{a} is not in {sx}")
    n = _require_long(alg)
    if a.is_projective and sx.sign == "-":
        return a.end % n + 1
    return arc_to_indec(a, alg)


def flip(sx: SignedTriangulation, a: Arc) -> SignedTriangulation:
    """Flip the arc a, or pop the sign when a is the projective arc of a self-folded triangle
    or the only arc of the 1-gon"""
    x = sx.triangulation
    if a not in x:
        raise ArcNotPresent(f"{a} is not in {sx}")
    if a.is_projective and Arc.inner(a.end, a.end) in x:
        return SignedTriangulation(x, "-" if sx.sign == "+" else "+")
    rest = [b for b in x.arcs if b != a]
    replacements = [
        c for c in admissible_arcs(x.n)
        if c != a and c not in rest and all(compatible(c, b, x.n) for b in rest)
    ]
    # only <*,1> of the 1-gon has nothing to flip to; it pops like a self-folded triangle
    if a.is_projective and not replacements:
        return SignedTriangulation(x, "-" if sx.sign == "+" else "+")
    if len(replacements) != 1:
        raise AssertionError(f"flip of {a} in {x} has {len(replacements)} candidates")
    return SignedTriangulation(Triangulation.of(x.n, rest + replacements), sx.sign)


def flip_graph(n: int) -> nx.Graph:
    graph = nx.Graph()
    for sx in enumerate_signed(n):
        graph.add_node(sx)
        for a in sx.triangulation.arcs:
            graph.add_edge(sx, flip(sx, a))
    return graph

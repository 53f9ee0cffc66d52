# tiltserver/engine/poset.py
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from errors import NotProjectiveInjective
from tiltserver.engine.algebra import NakayamaAlgebra, projective_injectives, reject, rejection_chain
from tiltserver.engine.modcat import Indec, in_fac, projective, socle_vertex, support
from tiltserver.engine.tautilt import SttPair, enumerate_stt, make_pair

Slot = Union[Indec, int]
StepTrace = Callable[[NakayamaAlgebra, int, int, int], None]


@dataclass(frozen=True)
class HasseQuiver:
    """
    Covering relations of a finite poset. An arrow (a, b) joins vertices[a] > vertices[b].
    Vertices are SttPairs for tilting posets and arbitrary hashable labels otherwise.
    """
    vertices: tuple
    arrows: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_graph(cls, labels: Sequence[Hashable], graph: nx.DiGraph) -> "HasseQuiver":
        return cls(tuple(labels), tuple(sorted((int(a), int(b)) for a, b in graph.edges)))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        graph.add_edges_from(self.arrows)
        return graph

    def canonical(self) -> "HasseQuiver":
        """Same quiver with vertices sorted by label"""
        order = sorted(range(len(self.vertices)), key=lambda k: self.vertices[k])
        position = {old: new for new, old in enumerate(order)}
        return HasseQuiver(
            tuple(self.vertices[k] for k in order),
            tuple(sorted((position[a], position[b]) for a, b in self.arrows)),
        )

    def degree(self, k: int) -> int:
        return sum(1 for a, b in self.arrows if k in (a, b))

    def neighbours(self, k: int) -> List[Hashable]:
        found = [self.vertices[b] for a, b in self.arrows if a == k]
        found += [self.vertices[a] for a, b in self.arrows if b == k]
        return sorted(found)


@dataclass(frozen=True)
class SttPoset:
    elements: Tuple[SttPair, ...]
    leq: Tuple[Tuple[bool, ...], ...]

    def check(self) -> bool:
        size = len(self.elements)
        for a in range(size):
            if not self.leq[a][a]:
                return False
            for b in range(size):
                if a != b and self.leq[a][b] and self.leq[b][a]:
                    return False
                if self.leq[a][b] and not all(self.leq[a][c] for c in range(size) if self.leq[b][c]):
                    return False
        return True

    def relation_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        for a in range(len(self.elements)):
            for b in range(len(self.elements)):
                if a != b and self.leq[b][a]:
                    graph.add_edge(a, b)
        return graph

    def hasse(self) -> HasseQuiver:
        return HasseQuiver.from_graph(self.elements, nx.transitive_reduction(self.relation_graph()))

    def top(self) -> SttPair:
        return next(e for k, e in enumerate(self.elements) if all(row[k] for row in self.leq))

    def bottom(self) -> SttPair:
        return next(e for k, e in enumerate(self.elements) if all(self.leq[k]))


def leq(alg: NakayamaAlgebra, m: SttPair, n: SttPair) -> bool:
    """m <= n, i.e. Fac(m) is contained in Fac(n)."""
    return all(in_fac(alg, x, n.module) for x in m.module)


def build_poset(alg: NakayamaAlgebra) -> SttPoset:
    elements = tuple(enumerate_stt(alg))
    # a summand (t, l) lies in Fac(n) iff n has a summand with top t and length >= l
    longest = []
    for pair in elements:
        reach: Dict[int, int] = {}
        for m in pair.module:
            reach[m.top] = max(reach.get(m.top, 0), m.length)
        longest.append(reach)
    matrix = tuple(
        tuple(all(longest[b].get(m.top, 0) >= m.length for m in elements[a].module) for b in range(len(elements)))
        for a in range(len(elements))
    )
    return SttPoset(elements, matrix)


def hasse_direct(alg: NakayamaAlgebra) -> HasseQuiver:
    return build_poset(alg).hasse()


def mutate(alg: NakayamaAlgebra, pair: SttPair, slot: Slot) -> SttPair:
    """Replace one summand (or killed vertex) by the other completion of the almost complete pair"""
    if isinstance(slot, Indec):
        module, killed = set(pair.module) - {slot}, set(pair.killed)
        if slot not in pair.module:
            raise ValueError(f"({slot.top},{slot.length}) is not a summand")
    else:
        module, killed = set(pair.module), set(pair.killed) - {slot}
        if slot not in pair.killed:
            raise ValueError(f"vertex {slot} is not killed")
    completions = [
        other for other in enumerate_stt(alg)
        if other != pair and module <= set(other.module) and killed <= set(other.killed)
    ]
    if len(completions) != 1:
        raise AssertionError(f"almost complete pair has {len(completions) + 1} completions")
    return completions[0]


def mutations(alg: NakayamaAlgebra, pair: SttPair) -> List[SttPair]:
    return [mutate(alg, pair, slot) for slot in pair.slots()]


def _plus(label: Hashable) -> Hashable:
    return ("+", label)


def extend_poset(hasse: HasseQuiver, subset: Iterable[Hashable],
                 plus: Callable[[Hashable], Hashable] = _plus) -> HasseQuiver:
    """
    The quiver H(Omega)^N: a copy n+ of every n in N placed directly above n.

    Copies are appended after the original vertices, in the original vertex order.
    """
    chosen = set(subset)
    size = len(hasse.vertices)
    copy_of: Dict[int, int] = {}
    for k, label in enumerate(hasse.vertices):
        if label in chosen:
            copy_of[k] = size + len(copy_of)
    arrows = []
    for a, b in hasse.arrows:
        if b in copy_of:
            if a in copy_of:
                arrows.append((a, b))
                arrows.append((copy_of[a], copy_of[b]))
            else:
                arrows.append((a, copy_of[b]))
        else:
            arrows.append((a, b))
    arrows.extend((copy, k) for k, copy in copy_of.items())
    vertices = tuple(hasse.vertices) + tuple(plus(hasse.vertices[k]) for k in copy_of)
    return HasseQuiver(vertices, tuple(sorted(arrows)))


def double_order(order: nx.DiGraph, subset: Iterable[Hashable],
                 plus: Callable[[Hashable], Hashable] = _plus) -> nx.DiGraph:
    """
    The poset Omega^N as a strict relation (edge a -> b means a > b).

    `order` is any DiGraph whose transitive closure is the strict order of Omega.
    """
    closed = nx.transitive_closure(order, reflexive=False)
    wanted = set(subset)
    chosen = [v for v in closed.nodes if v in wanted]
    doubled = nx.DiGraph()
    doubled.add_nodes_from(closed.nodes)
    doubled.add_edges_from(closed.edges)
    for n in chosen:
        doubled.add_edge(plus(n), n)
        for below in closed.successors(n):
            doubled.add_edge(plus(n), below)
        for other in chosen:
            if closed.has_edge(n, other):
                doubled.add_edge(plus(n), plus(other))
    for omega in closed.nodes:
        if omega in wanted:
            continue
        for n in chosen:
            if closed.has_edge(omega, n):
                doubled.add_edge(omega, plus(n))
    return doubled


def _rejection_data(alg: NakayamaAlgebra, j: int) -> Tuple[Indec, Optional[Indec], int]:
    if alg.is_zero or not alg.has_vertex(j) or j not in projective_injectives(alg):
        raise NotProjectiveInjective(f"P_{j} is not projective-injective over {alg.describe()}")
    q = projective(alg, j)
    q_bar = Indec(j, q.length - 1) if q.length > 1 else None
    return q, q_bar, socle_vertex(alg, q)


def _classify(alg: NakayamaAlgebra, q_bar: Optional[Indec], socle: int, pair: SttPair) -> int:
    if q_bar is None:
        return 2
    if q_bar not in pair.module:
        return 1
    return 2 if socle not in support(alg, pair.module) else 3


def classify_N(alg: NakayamaAlgebra, j: int) -> Tuple[List[SttPair], List[SttPair], List[SttPair]]:
    """Split the pairs of Lambda / soc P_j by how they lift back to Lambda"""
    _, q_bar, socle = _rejection_data(alg, j)
    classes: Tuple[List[SttPair], List[SttPair], List[SttPair]] = ([], [], [])
    for pair in enumerate_stt(reject(alg, j)):
        classes[_classify(alg, q_bar, socle, pair) - 1].append(pair)
    return classes


def _lift(alg: NakayamaAlgebra, q: Indec, q_bar: Optional[Indec], kind: int,
          pair: SttPair) -> Tuple[SttPair, Optional[SttPair]]:
    # (lift of N, lift of N+) with killed sets recomputed over alg
    if kind == 3:
        return make_pair(alg, [m for m in pair.module if m != q_bar] + [q]), None
    base = make_pair(alg, pair.module)
    if kind == 2:
        return base, make_pair(alg, list(pair.module) + [q])
    return base, None


def lift_rejection(alg: NakayamaAlgebra, j: int, pairs: Iterable[SttPair]) -> List[SttPair]:
    q, q_bar, socle = _rejection_data(alg, j)
    lifted = []
    for pair in pairs:
        base, raised = _lift(alg, q, q_bar, _classify(alg, q_bar, socle, pair), pair)
        lifted.append(base)
        if raised is not None:
            lifted.append(raised)
    return lifted


def classify_M(alg: NakayamaAlgebra, j: int, pair: SttPair) -> str:
    """M1, M2-, M2+ or M3 according to which of Q and its radical are summands"""
    q, q_bar, _ = _rejection_data(alg, j)
    has_q = q in pair.module
    has_q_bar = q_bar is None or q_bar in pair.module
    if has_q:
        return "M2+" if has_q_bar else "M3"
    return "M2-" if has_q_bar else "M1"


def hasse_rejection(alg: NakayamaAlgebra, order: Optional[Sequence[int]] = None,
                    trace: Optional[StepTrace] = None) -> HasseQuiver:
    """
    Build the Hasse quiver upward from the zero algebra, doubling the N2 part at each
    rejection step.

    Args:
        alg: any Nakayama algebra
        order: vertices to reject first, in turn
        trace: called as trace(algebra, vertex, |N2|, |H|) for each step from the top

    Returns:
        The Hasse quiver with vertices in canonical order
    """
    steps = rejection_chain(alg, order)
    hasse = HasseQuiver((SttPair((), ()),), ())
    records = []
    for big, j in reversed(steps):
        q, q_bar, socle = _rejection_data(big, j)
        kinds = [_classify(big, q_bar, socle, pair) for pair in hasse.vertices]
        lifts = [_lift(big, q, q_bar, kind, pair) for kind, pair in zip(kinds, hasse.vertices)]
        doubled = extend_poset(hasse, [pair for kind, pair in zip(kinds, hasse.vertices) if kind == 2])
        labels = [base for base, _ in lifts] + [raised for _, raised in lifts if raised is not None]
        hasse = HasseQuiver(tuple(labels), doubled.arrows).canonical()
        n2 = kinds.count(2)
        logging.info(f"Lifted through P_{j} of {big.describe()}: |N2| = {n2}, {len(hasse.vertices)} vertices")
        records.append((big, j, n2, len(hasse.vertices)))
    if trace is not None:
        for record in reversed(records):
            trace(*record)
    return hasse


def poset_isomorphic(first: Union[SttPoset, HasseQuiver],
                     second: Union[SttPoset, HasseQuiver]) -> Optional[Dict[Hashable, Hashable]]:
    """An order isomorphism between two finite posets, matched on their Hasse quivers"""
    h1 = first.hasse() if isinstance(first, SttPoset) else first
    h2 = second.hasse() if isinstance(second, SttPoset) else second
    if len(h1.vertices) != len(h2.vertices) or len(h1.arrows) != len(h2.arrows):
        return None
    matcher = DiGraphMatcher(h1.to_networkx(), h2.to_networkx())
    if not matcher.is_isomorphic():
        return None
    return {h1.vertices[a]: h2.vertices[b] for a, b in matcher.mapping.items()}

# tiltserver/engine/algebra.py
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from errors import InvalidKupisch, NotProjectiveInjective, ZeroAlgebra


@dataclass(frozen=True)
class NakayamaAlgebra:
    """
    A (possibly disconnected) basic Nakayama algebra given by its quiver and Kupisch series.

    Vertices are positive integer labels kept in ascending order. `arrows[k]` is the target of
    the unique arrow out of `vertices[k]` (None for a path sink) and `loewy_series[k]` is the
    Loewy length of the indecomposable projective at that vertex. Labels are never renumbered
    by quotients, only deleted.

    Arrows are kept even where the projective is simple, so make_cyclic(n, 1) stays on the
    n-cycle. Such an arrow lies in the ideal: no module uses it, and components() ignores it.
    """
    vertices: Tuple[int, ...]
    arrows: Tuple[Optional[int], ...]
    loewy_series: Tuple[int, ...]
    _index: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)
    _up: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)
    _cycle: Dict[int, Optional[int]] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not (len(self.vertices) == len(self.arrows) == len(self.loewy_series)):
            raise InvalidKupisch("vertices, arrows and Kupisch series must have equal length")
        arrows = tuple(self.arrows)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.vertices)})
        object.__setattr__(self, "_up", {t: v for v, t in zip(self.vertices, arrows) if t is not None})
        validate(self)
        object.__setattr__(self, "_cycle", {v: self._find_cycle_size(v) for v in self.vertices})

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_zero(self) -> bool:
        return not self.vertices

    def has_vertex(self, v: int) -> bool:
        return v in self._index

    def loewy(self, v: int) -> int:
        return self.loewy_series[self._index[v]]

    def next_down(self, v: int) -> Optional[int]:
        return self.arrows[self._index[v]]

    def up(self, v: int) -> Optional[int]:
        """The vertex whose arrow ends at v, if any."""
        return self._up.get(v)

    def cycle_size(self, v: int) -> Optional[int]:
        """Size of the oriented cycle through v, or None when v lies on a path."""
        return self._cycle[v]

    def path(self, v: int, length: int) -> List[int]:
        """The vertices v, next_down(v), ... visited by a path with `length` vertices."""
        result = []
        current = v
        for _ in range(length):
            if current is None:
                raise InvalidKupisch(f"no path of length {length} starts at vertex {v}")
            result.append(current)
            current = self.next_down(current)
        return result

    def reach(self, v: int) -> Optional[int]:
        """Length of the longest directed path from v, None on a cycle."""
        if self._cycle.get(v) is not None:
            return None
        steps = 0
        current = self.next_down(v)
        while current is not None:
            steps += 1
            current = self.next_down(current)
        return steps

    def is_linear(self) -> bool:
        return all(size is None for size in self._cycle.values())

    def is_cyclic_connected(self) -> bool:
        return bool(self.vertices) and all(size == len(self.vertices) for size in self._cycle.values())

    def is_standard(self) -> bool:
        """Vertices are exactly 1..n and every arrow goes from j to (j-1) read cyclically."""
        n = len(self.vertices)
        if self.vertices != tuple(range(1, n + 1)):
            return False
        return all(t is None or t == (j - 2) % n + 1 for j, t in zip(self.vertices, self.arrows))

    def to_dict(self) -> dict:
        return {
            "kind": "general",
            "vertices": list(self.vertices),
            "next_down": {str(v): t for v, t in zip(self.vertices, self.arrows) if t is not None},
            "loewy": {str(v): length for v, length in zip(self.vertices, self.loewy_series)},
        }

    def describe(self) -> str:
        kupisch = ",".join(str(length) for length in self.loewy_series)
        if self.is_zero:
            return "zero algebra"
        if self.is_cyclic_connected():
            return f"cyclic Kupisch ({kupisch})"
        if self.is_standard():
            return f"linear Kupisch ({kupisch})"
        return f"vertices {list(self.vertices)} Kupisch ({kupisch})"

    def _find_cycle_size(self, v: int) -> Optional[int]:
        current = self.next_down(v)
        steps = 1
        while current is not None and steps <= len(self.vertices):
            if current == v:
                return steps
            current = self.next_down(current)
            steps += 1
        return None


def validate(alg: NakayamaAlgebra) -> None:
    """Raise InvalidKupisch unless the quiver is a union of paths and cycles with admissible Loewy lengths"""
    if len(set(alg.vertices)) != len(alg.vertices):
        raise InvalidKupisch("vertex labels must be distinct")
    if any(v < 1 for v in alg.vertices):
        raise InvalidKupisch("vertex labels must be positive integers")
    if list(alg.vertices) != sorted(alg.vertices):
        raise InvalidKupisch("vertices must be listed in ascending order")

    targets = [t for t in alg.arrows if t is not None]
    if len(set(targets)) != len(targets):
        raise InvalidKupisch("two arrows end at the same vertex")

    for v, target, length in zip(alg.vertices, alg.arrows, alg.loewy_series):
        if length < 1:
            raise InvalidKupisch(f"loewy({v}) = {length} must be positive")
        if target is None:
            if length != 1:
                raise InvalidKupisch(f"vertex {v} has no arrow but loewy({v}) = {length}")
            continue
        if not alg.has_vertex(target):
            raise InvalidKupisch(f"arrow {v} -> {target} leaves the vertex set")
        if length > alg.loewy(target) + 1:
            raise InvalidKupisch(
                f"loewy({v}) = {length} exceeds loewy({target}) + 1 = {alg.loewy(target) + 1}"
            )


def make_general(vertices: Iterable[int], next_down: Mapping[int, Optional[int]],
                 loewy: Mapping[int, int]) -> NakayamaAlgebra:
    ordered = tuple(sorted(vertices))
    try:
        return NakayamaAlgebra(
            vertices=ordered,
            arrows=tuple(next_down.get(v) for v in ordered),
            loewy_series=tuple(loewy[v] for v in ordered),
        )
    except KeyError as e:
        raise InvalidKupisch(f"missing Loewy length for vertex {e.args[0]}")


def make_cyclic(n: int, r: int) -> NakayamaAlgebra:
    """The self-injective algebra K Delta_n / J^r on vertices 1..n."""
    if n < 1 or r < 1:
        raise InvalidKupisch(f"make_cyclic needs n >= 1 and r >= 1, got n={n}, r={r}")
    return make_cyclic_kupisch([r] * n)


def make_cyclic_kupisch(kupisch: Sequence[int]) -> NakayamaAlgebra:
    """Cyclic-quiver algebra on vertices 1..n with arrows j -> j-1 (and 1 -> n)."""
    n = len(kupisch)
    if n == 0:
        raise InvalidKupisch("a cyclic Kupisch series needs at least one entry")
    vertices = tuple(range(1, n + 1))
    arrows = tuple((j - 2) % n + 1 for j in vertices)
    return NakayamaAlgebra(vertices=vertices, arrows=arrows, loewy_series=tuple(kupisch))


def make_linear(kupisch: Sequence[int]) -> NakayamaAlgebra:
    """
    Linear Nakayama algebra on the path n -> n-1 -> ... -> 1.

    Args:
        kupisch: loewy(1), ..., loewy(n); loewy(1) must be 1

    Returns:
        The algebra, or the zero algebra for an empty list
    """
    n = len(kupisch)
    if n and kupisch[0] != 1:
        raise InvalidKupisch(f"loewy(1) must be 1 on a linear quiver, got {kupisch[0]}")
    vertices = tuple(range(1, n + 1))
    arrows = tuple(j - 1 if j > 1 else None for j in vertices)
    return NakayamaAlgebra(vertices=vertices, arrows=arrows, loewy_series=tuple(kupisch))


def make_gamma(n: int, r: int) -> NakayamaAlgebra:
    """Gamma_n^r: the path algebra of A_n modulo rad^r, with vertex n as the source."""
    return make_linear([min(j, r) for j in range(1, n + 1)])


def zero_algebra() -> NakayamaAlgebra:
    return NakayamaAlgebra(vertices=(), arrows=(), loewy_series=())


def total_dimension(alg: NakayamaAlgebra) -> int:
    return sum(alg.loewy_series)


def _socle_of_projective(alg: NakayamaAlgebra, j: int) -> int:
    return alg.path(j, alg.loewy(j))[-1]


def projective_injectives(alg: NakayamaAlgebra) -> Set[int]:
    """
    Vertices j with P_j injective, by scanning every indecomposable for a longer module with
    the same socle.
    """
    if alg.is_zero:
        raise ZeroAlgebra("the zero algebra has no projective modules")
    socles: Dict[int, int] = {}
    for v in alg.vertices:
        for length in range(1, alg.loewy(v) + 1):
            socle = alg.path(v, length)[-1]
            socles[socle] = max(socles.get(socle, 0), length)
    return {j for j in alg.vertices if socles[_socle_of_projective(alg, j)] <= alg.loewy(j)}


def projective_injectives_closed_form(alg: NakayamaAlgebra) -> Set[int]:
    if alg.is_zero:
        raise ZeroAlgebra("the zero algebra has no projective modules")
    result = set()
    for j in alg.vertices:
        u = alg.up(j)
        if u is None or alg.loewy(u) <= alg.loewy(j):
            result.add(j)
    return result


def _clamped(vertices: Sequence[int], next_down: Dict[int, Optional[int]],
             loewy: Dict[int, int]) -> NakayamaAlgebra:
    # Loewy lengths may not exceed the longest remaining path; repeat until stable.
    while True:
        changed = False
        reach = {}
        for v in vertices:
            seen = {v}
            steps = 0
            current = next_down[v]
            while current is not None and current not in seen:
                seen.add(current)
                steps += 1
                current = next_down[current]
            reach[v] = None if current is not None else steps
        for v in vertices:
            if reach[v] is not None and loewy[v] > reach[v] + 1:
                loewy[v] = reach[v] + 1
                changed = True
        if not changed:
            return make_general(vertices, next_down, loewy)


def quotient_by_idempotent(alg: NakayamaAlgebra, killed: Iterable[int]) -> NakayamaAlgebra:
    """Lambda / <e> for the idempotent e summing the killed vertices."""
    killed = set(killed)
    unknown = killed - set(alg.vertices)
    if unknown:
        raise InvalidKupisch(f"vertices {sorted(unknown)} are not in the algebra")
    if not killed:
        return alg
    keep = [v for v in alg.vertices if v not in killed]
    next_down = {v: (None if alg.next_down(v) in killed else alg.next_down(v)) for v in keep}
    loewy = {v: alg.loewy(v) for v in keep}
    return _clamped(keep, next_down, loewy)


def reject(alg: NakayamaAlgebra, j: int) -> NakayamaAlgebra:
    """
    Lambda / soc P_j for a projective-injective vertex j.

    Only the Loewy length at j changes; when it reaches zero the vertex is deleted.
    """
    if alg.is_zero or not alg.has_vertex(j) or j not in projective_injectives(alg):
        raise NotProjectiveInjective(f"P_{j} is not projective-injective over {alg.describe()}")
    if alg.loewy(j) == 1:
        return quotient_by_idempotent(alg, {j})
    next_down = {v: alg.next_down(v) for v in alg.vertices}
    loewy = {v: alg.loewy(v) for v in alg.vertices}
    loewy[j] -= 1
    return _clamped(list(alg.vertices), next_down, loewy)


def components(alg: NakayamaAlgebra) -> List[NakayamaAlgebra]:
    """
    Connected components of the algebra ordered by smallest vertex label.

    Each component keeps only the arrows out of vertices of Loewy length >= 2, so
    make_cyclic(3, 1) splits into three one-vertex algebras without arrows.
    """
    graph = nx.Graph()
    graph.add_nodes_from(alg.vertices)
    graph.add_edges_from(
        (v, t) for v, t, length in zip(alg.vertices, alg.arrows, alg.loewy_series)
        if t is not None and length >= 2
    )
    result = []
    for part in sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0]):
        result.append(make_general(
            part,
            {v: alg.next_down(v) for v in part if alg.loewy(v) >= 2},
            {v: alg.loewy(v) for v in part},
        ))
    return result


def choose_rejection_vertex(alg: NakayamaAlgebra) -> int:
    """Smallest projective-injective label of the component holding the smallest vertex."""
    first = components(alg)[0]
    return min(projective_injectives(first))


def rejection_chain(alg: NakayamaAlgebra,
                    order: Optional[Sequence[int]] = None) -> List[Tuple[NakayamaAlgebra, int]]:
    """
    The sequence of (algebra, rejected vertex) steps taking alg down to the zero algebra.

    Vertices listed in `order` are rejected first, in turn; afterwards the deterministic
    choice applies.
    """
    steps = []
    pending = list(order or [])
    current = alg
    while not current.is_zero:
        j = pending.pop(0) if pending else choose_rejection_vertex(current)
        following = reject(current, j)
        logging.info(f"Rejecting P_{j} of {current.describe()}")
        steps.append((current, j))
        current = following
    return steps


def kupisch_series_linear(n: int) -> List[Tuple[int, ...]]:
    """All admissible Kupisch series of linear algebras on n vertices (Catalan many)."""
    series = [(1,)] if n >= 1 else [()]
    for _ in range(1, n):
        series = [s + (length,) for s in series for length in range(1, s[-1] + 2)]
    return series


def kupisch_series_cyclic(n: int, max_loewy: int) -> List[Tuple[int, ...]]:
    """All cyclic Kupisch series on n vertices with entries in [2, max_loewy]."""
    result = []
    for series in itertools.product(range(2, max_loewy + 1), repeat=n):
        if all(series[j] <= series[j - 1] + 1 for j in range(n)):
            result.append(series)
    return result

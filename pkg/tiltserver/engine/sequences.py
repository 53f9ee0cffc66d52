# tiltserver/engine/sequences.py
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from tiltserver.engine.geometry import Arc, Triangulation
from tiltserver.engine.tautilt import SttPair


@dataclass(frozen=True, order=True)
class SeqA:
    """
    A nonnegative integer n-tuple summing to n, with its prefix profile
    a'_i = sum_{j <= i} (a_j - 1) read n-periodically (a'_0 = a'_n = 0).
    """
    a: Tuple[int, ...]
    prime: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    norm: int = field(init=False, repr=False, compare=False)
    delta: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if any(x < 0 for x in a) or sum(a) != len(a):
            raise ValueError(f"{list(a)} is not a nonnegative tuple summing to {len(a)}")
        prime = tuple(itertools.accumulate(x - 1 for x in a))
        norm = max(prime) if prime else 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "norm", norm)
        object.__setattr__(self, "delta", tuple(1 if p == norm else 0 for p in prime))

    @classmethod
    def parse(cls, text: str) -> "SeqA":
        return cls(tuple(int(part) for part in text.replace(" ", "").split(",") if part))

    @property
    def n(self) -> int:
        return len(self.a)

    def prime_at(self, p: int) -> int:
        r = p % self.n
        return 0 if r == 0 else self.prime[r - 1]

    def k(self, s: int, l: int) -> int:
        """Largest integer k < l - 1 with a'_k = a'_{l-1} + s"""
        target = self.prime_at(l - 1) + s
        for k in range(l - 2, l - 2 - self.n, -1):
            if self.prime_at(k) == target:
                return k
        raise AssertionError(f"no k for s={s}, l={l} in {self}")

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.a)


def top_of_triangulation(x: Triangulation) -> SeqA:
    counts = Counter(arc.end for arc in x.arcs)
    return SeqA(tuple(counts[p] for p in range(1, x.n + 1)))


def top_of_module(pair: SttPair, n: int) -> SeqA:
    counts = Counter(m.top for m in pair.module)
    return SeqA(tuple(counts[p] for p in range(1, n + 1)))


def x_of_sequence(seq: SeqA) -> Triangulation:
    n = seq.n
    arcs = [Arc.proj(j) for j in range(1, n + 1) if seq.prime[j - 1] == seq.norm]
    for l in range(1, n + 1):
        for s in range(1, seq.a[l - 1] - seq.delta[l - 1] + 1):
            k = seq.k(s, l)
            arcs.append(Arc.inner((k - 1) % n + 1, l))
    return Triangulation.of(n, arcs)


def ell_j(seq: SeqA, j: int) -> int:
    """Length of the longest inner arc of X_a ending at j, 0 if there is none"""
    count = seq.a[j - 1] - seq.delta[j - 1]
    if count <= 0:
        return 0
    return j - seq.k(count, j)


def in_Z_restricted(seq: SeqA, bounds: Sequence[int]) -> bool:
    if len(bounds) != seq.n:
        raise ValueError(f"need {seq.n} length bounds for {seq}, got {list(bounds)}")
    return all(ell_j(seq, j) <= bounds[j - 1] for j in range(1, seq.n + 1))


def enumerate_Z(n: int) -> List[SeqA]:
    if n < 1:
        return []
    result = []
    for bars in itertools.combinations(range(2 * n - 1), n - 1):
        edges = (-1,) + bars + (2 * n - 1,)
        result.append(SeqA(tuple(edges[k + 1] - edges[k] - 1 for k in range(n))))
    return sorted(result)


def enumerate_Z_restricted(n: int, bounds: Sequence[int]) -> List[SeqA]:
    return [seq for seq in enumerate_Z(n) if in_Z_restricted(seq, bounds)]


def enumerate_Y(n: int) -> List[SeqA]:
    return [seq for seq in enumerate_Z(n) if seq.norm == 0]

# tiltserver/engine/tautilt.py
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple

from errors import NotCyclicConnected, NotInDomain, NotLinear, NotTauTilting
from tiltserver.engine.algebra import NakayamaAlgebra, components
from tiltserver.engine.modcat import (
    BasicModule,
    Indec,
    all_tau_rigid_indecs,
    basic_module,
    comp_factors,
    is_projective,
    is_tau_rigid_module,
    pair_tau_rigid,
    projective,
    support,
)


@dataclass(frozen=True, order=True)
class SttPair:
    """A basic support tau-tilting pair: summands plus the vertices outside their support"""
    module: BasicModule
    killed: Tuple[int, ...] = ()

    @property
    def is_tau_tilting(self) -> bool:
        return not self.killed

    def slots(self) -> List:
        """Summands followed by killed vertices; mutation happens at one slot at a time."""
        return list(self.module) + list(self.killed)

    def to_dict(self) -> dict:
        return {"summands": [m.to_dict() for m in self.module], "killed": list(self.killed)}

    @classmethod
    def from_dict(cls, data: dict) -> "SttPair":
        return cls(
            module=basic_module(Indec.from_dict(m) for m in data.get("summands", [])),
            killed=tuple(sorted(int(v) for v in data.get("killed", []))),
        )


def make_pair(alg: NakayamaAlgebra, module: Iterable[Indec]) -> SttPair:
    """Pair a module with the idempotent of its non-support vertices (no rigidity check)"""
    summands = basic_module(module)
    supported = support(alg, summands)
    return SttPair(summands, tuple(v for v in alg.vertices if v not in supported))


def is_support_tau_tilting(alg: NakayamaAlgebra, module: Iterable[Indec]) -> Optional[SttPair]:
    summands = basic_module(module)
    if not is_tau_rigid_module(alg, summands):
        return None
    if len(summands) != len(support(alg, summands)):
        return None
    return make_pair(alg, summands)


def _enumerate_connected(alg: NakayamaAlgebra) -> List[SttPair]:
    candidates = all_tau_rigid_indecs(alg)
    bit = {v: 1 << k for k, v in enumerate(alg.vertices)}
    support_masks = [sum(bit[v] for v in set(comp_factors(alg, m))) for m in candidates]

    # compatible[a] holds the later candidates that form a tau-rigid pair with candidate a
    compatible = [0] * len(candidates)
    for a, b in itertools.combinations(range(len(candidates)), 2):
        if pair_tau_rigid(alg, candidates[a], candidates[b]):
            compatible[a] |= 1 << b

    size = len(alg.vertices)
    found: List[SttPair] = []
    chosen: List[int] = []

    def extend(allowed: int, support_mask: int) -> None:
        assert len(chosen) <= size, "tau-rigid module with more summands than simples"
        if len(chosen) == support_mask.bit_count():
            found.append(make_pair(alg, (candidates[k] for k in chosen)))
        while allowed:
            lowest = allowed & -allowed
            allowed ^= lowest
            k = lowest.bit_length() - 1
            chosen.append(k)
            extend(allowed & compatible[k], support_mask | support_masks[k])
            chosen.pop()

    extend((1 << len(candidates)) - 1, 0)
    return found


@functools.lru_cache(maxsize=256)
def _enumerate_cached(alg: NakayamaAlgebra) -> Tuple[SttPair, ...]:
    per_component = [_enumerate_connected(part) for part in components(alg)]
    pairs = []
    for combination in itertools.product(*per_component):
        pairs.append(SttPair(
            module=basic_module(m for pair in combination for m in pair.module),
            killed=tuple(sorted(v for pair in combination for v in pair.killed)),
        ))
    pairs.sort()
    logging.info(f"Enumerated {len(pairs)} support tau-tilting pairs over {alg.describe()}")
    return tuple(pairs)


def enumerate_stt(alg: NakayamaAlgebra) -> List[SttPair]:
    """All basic support tau-tilting pairs in canonical order"""
    return list(_enumerate_cached(alg))


def enumerate_tau_tilt(alg: NakayamaAlgebra) -> List[SttPair]:
    return [pair for pair in _enumerate_cached(alg) if pair.is_tau_tilting]


def enumerate_ps_tau_tilt(alg: NakayamaAlgebra) -> List[SttPair]:
    return [pair for pair in _enumerate_cached(alg) if not pair.is_tau_tilting]


def np_part(alg: NakayamaAlgebra, module: Iterable[Indec]) -> BasicModule:
    return basic_module(m for m in module if not is_projective(alg, m))


def pr_part(alg: NakayamaAlgebra, module: Iterable[Indec]) -> BasicModule:
    return basic_module(m for m in module if is_projective(alg, m))


def phi(alg: NakayamaAlgebra, killed: Iterable[int]) -> Set[int]:
    """Move each vertex one step down the cycle"""
    if not alg.is_cyclic_connected():
        raise NotCyclicConnected(f"{alg.describe()} is not a connected cyclic algebra")
    return {alg.next_down(v) for v in killed}


def lift_proper(alg: NakayamaAlgebra, pair: SttPair) -> SttPair:
    """Proper pair without projective summands -> tau-tilting module N + phi(e_N)Lambda"""
    if pair.is_tau_tilting or pr_part(alg, pair.module):
        raise NotInDomain("lift needs a proper support tau-tilting pair without projective summands")
    added = (projective(alg, v) for v in phi(alg, pair.killed))
    return SttPair(basic_module(itertools.chain(pair.module, added)), ())


def drop_projectives(alg: NakayamaAlgebra, pair: SttPair) -> SttPair:
    if not pair.is_tau_tilting:
        raise NotInDomain("drop needs a tau-tilting module")
    if not alg.is_cyclic_connected():
        raise NotCyclicConnected(f"{alg.describe()} is not a connected cyclic algebra")
    return make_pair(alg, np_part(alg, pair.module))


def type_a_source(alg: NakayamaAlgebra) -> int:
    """The vertex no arrow ends at; its projective is a summand of every tau-tilting module."""
    if alg.is_zero or not alg.is_linear() or len(components(alg)) != 1:
        raise NotLinear(f"{alg.describe()} is not a connected linear algebra")
    return next(v for v in alg.vertices if alg.up(v) is None)


def type_a_split(alg: NakayamaAlgebra, pair: SttPair) -> Tuple[int, SttPair]:
    """
    Remove the projective at the source from a tau-tilting module.

    Args:
        alg: connected linear algebra
        pair: tau-tilting module over alg

    Returns:
        (i, remainder) where the remainder is tau-tilting over alg/<e_v>, v being the i-th
        vertex from the source, expressed as a pair over alg with killed = (v,)
    """
    source = type_a_source(alg)
    if not pair.is_tau_tilting or is_support_tau_tilting(alg, pair.module) != pair:
        raise NotTauTilting("type_a_split needs a tau-tilting module")
    forced = projective(alg, source)
    if forced not in pair.module:
        raise NotTauTilting(f"P_{source} is missing from a tau-tilting module")
    rest = make_pair(alg, (m for m in pair.module if m != forced))
    if len(rest.killed) != 1:
        raise NotTauTilting("remainder is not sincere on all but one vertex")
    position = alg.path(source, alg.loewy(source)).index(rest.killed[0]) + 1
    return position, rest


def type_a_join(alg: NakayamaAlgebra, position: int, rest: SttPair) -> SttPair:
    source = type_a_source(alg)
    if not 1 <= position <= alg.loewy(source):
        raise NotInDomain(f"position {position} outside [1, {alg.loewy(source)}]")
    vertex = alg.path(source, position)[-1]
    if rest.killed != (vertex,):
        raise NotInDomain(f"remainder must kill exactly vertex {vertex}")
    return make_pair(alg, itertools.chain(rest.module, [projective(alg, source)]))

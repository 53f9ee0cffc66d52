# tiltserver/engine/modcat.py
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple

from errors import DifferentAlgebra
from tiltserver.engine.algebra import NakayamaAlgebra


@dataclass(frozen=True, order=True)
class Indec:
    """An indecomposable module, the uniserial quotient of P_top of Loewy length `length`"""
    top: int
    length: int

    def to_dict(self) -> dict:
        return {"top": self.top, "len": self.length}

    @classmethod
    def from_dict(cls, data: dict) -> "Indec":
        return cls(top=int(data["top"]), length=int(data["len"]))


BasicModule = Tuple[Indec, ...]


def basic_module(summands: Iterable[Indec]) -> BasicModule:
    """Canonical form of a basic module: sorted by (top, length), repeats removed."""
    return tuple(sorted(set(summands)))


def is_valid(alg: NakayamaAlgebra, m: Indec) -> bool:
    return alg.has_vertex(m.top) and 1 <= m.length <= alg.loewy(m.top)


def _require(alg: NakayamaAlgebra, *modules: Indec) -> None:
    for m in modules:
        if not is_valid(alg, m):
            raise DifferentAlgebra(f"({m.top},{m.length}) is not a module over {alg.describe()}")


def comp_factors(alg: NakayamaAlgebra, m: Indec) -> List[int]:
    """Composition factors from the top down"""
    _require(alg, m)
    return alg.path(m.top, m.length)


def socle_vertex(alg: NakayamaAlgebra, m: Indec) -> int:
    return comp_factors(alg, m)[-1]


def is_projective(alg: NakayamaAlgebra, m: Indec) -> bool:
    _require(alg, m)
    return m.length == alg.loewy(m.top)


def projective(alg: NakayamaAlgebra, j: int) -> Indec:
    return Indec(j, alg.loewy(j))


def _witnesses(alg: NakayamaAlgebra, m: Indec, n: Indec) -> List[int]:
    # t such that the length-t top quotient of m is the length-t submodule of n
    _require(alg, m, n)
    factors = alg.path(n.top, n.length)
    return [t for t in range(1, min(m.length, n.length) + 1) if factors[n.length - t] == m.top]


def hom_nonzero(alg: NakayamaAlgebra, m: Indec, n: Indec) -> bool:
    return bool(_witnesses(alg, m, n))


def hom_dimension(alg: NakayamaAlgebra, m: Indec, n: Indec) -> int:
    """dim Hom(m, n) for uniserial modules: one dimension per factorization through a common subquotient"""
    return len(_witnesses(alg, m, n))


def tau(alg: NakayamaAlgebra, m: Indec) -> Optional[Indec]:
    """Auslander-Reiten translate; None for projective modules."""
    if is_projective(alg, m):
        return None
    return Indec(alg.next_down(m.top), m.length)


def is_tau_rigid_indec(alg: NakayamaAlgebra, m: Indec) -> bool:
    if is_projective(alg, m):
        return True
    cycle = alg.cycle_size(m.top)
    return cycle is None or m.length < cycle


def pair_tau_rigid(alg: NakayamaAlgebra, x: Indec, y: Indec) -> bool:
    if not (is_tau_rigid_indec(alg, x) and is_tau_rigid_indec(alg, y)):
        return False
    tau_x, tau_y = tau(alg, x), tau(alg, y)
    if tau_y is not None and hom_nonzero(alg, x, tau_y):
        return False
    if tau_x is not None and hom_nonzero(alg, y, tau_x):
        return False
    return True


def is_tau_rigid_module(alg: NakayamaAlgebra, module: Iterable[Indec]) -> bool:
    summands = list(module)
    if not all(is_tau_rigid_indec(alg, m) for m in summands):
        return False
    return all(
        pair_tau_rigid(alg, summands[a], summands[b])
        for a in range(len(summands))
        for b in range(a + 1, len(summands))
    )


def in_fac(alg: NakayamaAlgebra, x: Indec, module: Iterable[Indec]) -> bool:
    """x is in Fac(module) iff x is a quotient of a single summand."""
    _require(alg, x)
    for m in module:
        _require(alg, m)
        if m.top == x.top and m.length >= x.length:
            return True
    return False


def support(alg: NakayamaAlgebra, module: Iterable[Indec]) -> Set[int]:
    result = set()
    for m in module:
        result.update(comp_factors(alg, m))
    return result


def support_count(alg: NakayamaAlgebra, module: Iterable[Indec]) -> int:
    return len(support(alg, module))


def all_indecs(alg: NakayamaAlgebra) -> List[Indec]:
    return [Indec(v, length) for v in alg.vertices for length in range(1, alg.loewy(v) + 1)]


def all_tau_rigid_indecs(alg: NakayamaAlgebra) -> List[Indec]:
    return [m for m in all_indecs(alg) if is_tau_rigid_indec(alg, m)]


def stacked_label(alg: NakayamaAlgebra, m: Indec) -> str:
    """Composition factors joined top to bottom, e.g. 2/1/3"""
    return "/".join(str(v) for v in comp_factors(alg, m))

from math import comb

import pytest

from tiltserver.engine.algebra import make_cyclic
from tiltserver.engine.geometry import Arc, enumerate_triangulations, tau_tilt_to_triangulation, triangulation_to_tau_tilt
from tiltserver.engine.modcat import Indec
from tiltserver.engine.sequences import (
    SeqA,
    ell_j,
    enumerate_Y,
    enumerate_Z,
    enumerate_Z_restricted,
    in_Z_restricted,
    top_of_module,
    top_of_triangulation,
    x_of_sequence,
)
from tiltserver.engine.tautilt import enumerate_tau_tilt


def test_prefix_profile():
    seq = SeqA((1, 0, 2, 1))
    assert seq.prime == (0, -1, 0, 0)
    assert seq.norm == 0
    assert seq.delta == (1, 0, 1, 1)
    assert seq.prime_at(-1) == 0
    assert SeqA.parse("2, 1, 0") == SeqA((2, 1, 0))
    assert str(SeqA((2, 1, 0))) == "2,1,0"


@pytest.mark.parametrize("a", [(2, 1), (-1, 2, 2), (3, 0, 1)])
def test_sequences_must_sum_to_their_length(a):
    with pytest.raises(ValueError):
        SeqA(a)


def test_small_triangulations():
    assert x_of_sequence(SeqA((2, 1, 0))).arcs == (Arc.proj(1), Arc.inner(2, 1), Arc.proj(2))
    assert set(x_of_sequence(SeqA((0, 3, 0))).arcs) == {Arc.proj(2), Arc.inner(3, 2), Arc.inner(2, 2)}
    assert ell_j(SeqA((0, 3, 0)), 2) == 3
    assert ell_j(SeqA((0, 3, 0)), 1) == 0


def test_eight_gon_example():
    x = x_of_sequence(SeqA((0, 4, 1, 0, 1, 0, 2, 0)))
    assert len(x.arcs) == 8
    for arc in (Arc.proj(2), Arc.proj(3), Arc.inner(8, 2)):
        assert arc in x


@pytest.mark.parametrize("a, modules", [
    ((1, 0, 2, 1), {Indec(1, 4), Indec(3, 1), Indec(3, 4), Indec(4, 4)}),
    ((2, 0, 2, 0), {Indec(1, 4), Indec(3, 4), Indec(1, 1), Indec(3, 1)}),
    ((1, 1, 1, 1), {Indec(v, 4) for v in (1, 2, 3, 4)}),
])
def test_sequences_to_modules(lambda44, a, modules):
    pair = triangulation_to_tau_tilt(x_of_sequence(SeqA(a)), lambda44)
    assert set(pair.module) == modules


def test_enumeration_sizes():
    assert [len(enumerate_Z(n)) for n in range(1, 6)] == [comb(2 * n - 1, n - 1) for n in range(1, 6)]
    assert [len(enumerate_Y(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert enumerate_Z(0) == []
    assert len(enumerate_Z_restricted(3, [1, 2, 3])) == 5


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sequences_and_triangulations_are_inverse(n):
    triangulations = enumerate_triangulations(n)
    assert sorted(top_of_triangulation(x) for x in triangulations) == enumerate_Z(n)
    for x in triangulations:
        assert x_of_sequence(top_of_triangulation(x)) == x
    for seq in enumerate_Z(n):
        assert top_of_triangulation(x_of_sequence(seq)) == seq


def test_restriction_follows_the_longest_arc():
    assert in_Z_restricted(SeqA((0, 3, 0)), [1, 3, 1])
    assert not in_Z_restricted(SeqA((0, 3, 0)), [3, 2, 3])
    with pytest.raises(ValueError):
        in_Z_restricted(SeqA((1, 1, 1, 1, 1)), [3, 3, 3])


def test_top_of_module_matches_top_of_triangulation():
    alg = make_cyclic(4, 4)
    for pair in enumerate_tau_tilt(alg):
        assert top_of_module(pair, 4) == top_of_triangulation(tau_tilt_to_triangulation(pair, alg))

import itertools
from collections import Counter

import networkx as nx
import pytest

from errors import NotCyclicConnected, NotInDomain, NotLinear
from tiltserver.engine.algebra import (
    kupisch_series_cyclic,
    make_cyclic,
    make_cyclic_kupisch,
    make_gamma,
    make_general,
    make_linear,
    zero_algebra,
)
from tiltserver.engine.modcat import (
    Indec,
    all_tau_rigid_indecs,
    is_projective,
    is_tau_rigid_module,
    pair_tau_rigid,
    support,
)
from tiltserver.engine.tautilt import (
    SttPair,
    drop_projectives,
    enumerate_ps_tau_tilt,
    enumerate_stt,
    enumerate_tau_tilt,
    is_support_tau_tilting,
    lift_proper,
    make_pair,
    phi,
    type_a_join,
    type_a_source,
    type_a_split,
)


def test_counts_over_lambda33(lambda33):
    assert len(enumerate_stt(lambda33)) == 20
    assert len(enumerate_tau_tilt(lambda33)) == 10
    assert len(enumerate_ps_tau_tilt(lambda33)) == 10


def test_field_has_two_pairs():
    assert enumerate_stt(make_cyclic(1, 1)) == [
        SttPair((), (1,)),
        SttPair((Indec(1, 1),), ()),
    ]


def test_zero_algebra_has_the_empty_pair():
    assert enumerate_stt(zero_algebra()) == [SttPair((), ())]


def test_linear_a3_has_catalan_many_tilting_modules(path3):
    assert len(enumerate_tau_tilt(path3)) == 5
    assert len(enumerate_stt(path3)) == 14


def test_semisimple_algebra_counts_subsets():
    assert len(enumerate_stt(make_cyclic(3, 1))) == 8
    assert len(enumerate_tau_tilt(make_cyclic(3, 1))) == 1


def test_enumeration_is_canonical(lambda33):
    pairs = enumerate_stt(lambda33)
    assert pairs == sorted(pairs)
    assert len(set(pairs)) == len(pairs)


@pytest.mark.parametrize("alg", [make_cyclic(3, 3), make_cyclic(4, 2), make_gamma(4, 3), make_cyclic_kupisch([2, 3, 3])])
def test_killed_vertices_are_the_non_support(alg):
    for pair in enumerate_stt(alg):
        assert set(pair.killed) == set(alg.vertices) - support(alg, pair.module)
        assert len(pair.module) + len(pair.killed) == len(alg)


def test_support_tau_tilting_check(lambda33):
    assert is_support_tau_tilting(lambda33, [Indec(1, 1), Indec(1, 2)]) == SttPair(
        (Indec(1, 1), Indec(1, 2)), (2,)
    )
    assert is_support_tau_tilting(lambda33, [Indec(1, 1), Indec(2, 1)]) is None
    assert is_support_tau_tilting(lambda33, [Indec(1, 3)]) is None
    full = is_support_tau_tilting(lambda33, [Indec(v, 3) for v in (1, 2, 3)])
    assert full is not None and full.is_tau_tilting


@pytest.mark.parametrize("series", [s for s in kupisch_series_cyclic(3, 5) if min(s) >= 3])
def test_every_tau_tilting_module_has_a_projective_summand(series):
    alg = make_cyclic_kupisch(series)
    for pair in enumerate_tau_tilt(alg):
        assert any(is_projective(alg, m) for m in pair.module)


def test_pair_json_round_trip(lambda33):
    for pair in enumerate_stt(lambda33):
        assert SttPair.from_dict(pair.to_dict()) == pair


def test_phi_moves_down_the_cycle(lambda33, path3):
    assert phi(lambda33, [1, 2]) == {3, 1}
    with pytest.raises(NotCyclicConnected):
        phi(path3, [1])


@pytest.mark.parametrize("alg", [make_cyclic(3, 3), make_cyclic(2, 4), make_cyclic_kupisch([3, 4, 4])])
def test_lift_and_drop_are_inverse(alg):
    tau = enumerate_tau_tilt(alg)
    proper = enumerate_ps_tau_tilt(alg)
    assert len(proper) == len(tau)
    assert sorted(lift_proper(alg, pair) for pair in proper) == tau
    for pair in tau:
        assert lift_proper(alg, drop_projectives(alg, pair)) == pair


def test_lift_and_drop_domains(lambda33, path3):
    with pytest.raises(NotInDomain):
        lift_proper(lambda33, enumerate_tau_tilt(lambda33)[0])
    with pytest.raises(NotInDomain):
        drop_projectives(lambda33, enumerate_ps_tau_tilt(lambda33)[0])
    with pytest.raises(NotCyclicConnected):
        drop_projectives(path3, enumerate_tau_tilt(path3)[0])


def test_phi_lift_and_drop_on_radical_square_zero_cycles():
    semisimple = make_cyclic(3, 1)
    assert phi(semisimple, {1}) == {3}
    assert phi(make_cyclic(1, 1), {1}) == {1}
    empty = SttPair((), (1, 2, 3))
    everything = lift_proper(semisimple, empty)
    assert everything == SttPair(tuple(Indec(v, 1) for v in (1, 2, 3)), ())
    assert drop_projectives(semisimple, everything) == empty
    with pytest.raises(NotInDomain):
        lift_proper(semisimple, SttPair((Indec(1, 1),), (2, 3)))


def test_make_pair_does_not_check_rigidity(lambda33):
    pair = make_pair(lambda33, [Indec(1, 1), Indec(2, 1)])
    assert pair.killed == (3,)


def test_type_a_source(path3, lambda33):
    assert type_a_source(path3) == 3
    with pytest.raises(NotLinear):
        type_a_source(lambda33)
    with pytest.raises(NotLinear):
        type_a_source(make_cyclic(2, 1))


def test_type_a_split_positions(path3):
    positions = Counter(type_a_split(path3, pair)[0] for pair in enumerate_tau_tilt(path3))
    assert positions == {1: 2, 2: 1, 3: 2}


@pytest.mark.parametrize("alg", [make_linear([1, 2, 3]), make_gamma(4, 3), make_linear([1, 2, 2, 3])])
def test_type_a_split_and_join_are_inverse(alg):
    source = type_a_source(alg)
    for pair in enumerate_tau_tilt(alg):
        position, rest = type_a_split(alg, pair)
        assert rest.killed == (alg.path(source, position)[-1],)
        assert type_a_join(alg, position, rest) == pair


@pytest.mark.parametrize("alg", [
    make_cyclic(3, 3),
    make_cyclic(4, 4),
    make_cyclic(4, 2),
    make_gamma(4, 3),
    make_cyclic_kupisch([2, 3, 3]),
    make_linear([1, 2, 2, 3]),
])
def test_every_tau_rigid_module_completes_to_a_tau_tilting_module(alg):
    rigid = all_tau_rigid_indecs(alg)
    graph = nx.Graph()
    graph.add_nodes_from(rigid)
    graph.add_edges_from((x, y) for x, y in itertools.combinations(rigid, 2) if pair_tau_rigid(alg, x, y))
    tilting = [set(pair.module) for pair in enumerate_tau_tilt(alg)]
    for clique in nx.enumerate_all_cliques(graph):
        assert is_tau_rigid_module(alg, clique)
        assert any(set(clique) <= module for module in tilting), clique


def test_counts_multiply_over_components():
    # a 3-cycle with loewy 3 next to the path 5 -> 4
    alg = make_general([1, 2, 3, 4, 5], {1: 3, 2: 1, 3: 2, 5: 4}, {1: 3, 2: 3, 3: 3, 4: 1, 5: 2})
    pairs = enumerate_stt(alg)
    assert len(pairs) == len(enumerate_stt(make_cyclic(3, 3))) * len(enumerate_stt(make_linear([1, 2]))) == 100
    assert len(enumerate_tau_tilt(alg)) == 10 * 2
    for pair in pairs:
        assert is_support_tau_tilting(alg, pair.module) == pair

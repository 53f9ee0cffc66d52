from math import comb

import networkx as nx
import pytest

from errors import ArcNotPresent, ArcTooLong, LoewyTooSmall, NotInDomain, NotTauRigid
from tiltserver.engine.algebra import make_cyclic, make_general, make_linear
from tiltserver.engine.geometry import (
    Arc,
    SignedTriangulation,
    Triangulation,
    admissible_arcs,
    arc_slot,
    arc_to_indec,
    compatible,
    enumerate_restricted,
    enumerate_signed,
    enumerate_triangulations,
    fan_count,
    flip,
    flip_graph,
    indec_to_arc,
    signed_to_stt,
    stt_to_signed,
    tau_tilt_to_triangulation,
    triangulation_to_tau_tilt,
)
from tiltserver.engine.modcat import Indec
from tiltserver.engine.poset import mutate
from tiltserver.engine.tautilt import SttPair, enumerate_stt, enumerate_tau_tilt


def test_arc_text_and_json():
    assert str(Arc.proj(2)) == "<*,2>"
    assert str(Arc.inner(8, 2)) == "<8,2>"
    for arc in (Arc.proj(2), Arc.inner(8, 2)):
        assert Arc.from_dict(arc.to_dict()) == arc
    assert Arc.inner(2, 1).length(3) == 2
    assert Arc.inner(1, 1).length(3) == 3


def test_admissible_arcs():
    assert len(admissible_arcs(3)) == 9
    assert len(admissible_arcs(3, [1, 2, 3])) == 6


def test_compatibility():
    assert compatible(Arc.proj(1), Arc.proj(2), 3)
    assert compatible(Arc.proj(1), Arc.inner(1, 1), 3)
    assert not compatible(Arc.proj(2), Arc.inner(1, 1), 3)
    assert compatible(Arc.inner(2, 1), Arc.inner(1, 1), 3)
    assert not compatible(Arc.inner(1, 3), Arc.inner(2, 1), 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_triangulation_counts(n):
    triangulations = enumerate_triangulations(n)
    assert len(triangulations) == comb(2 * n - 1, n - 1)
    assert all(len(x.arcs) == n for x in triangulations)


def test_restricted_triangulations_match_modules():
    assert len(enumerate_restricted(3, [3, 3, 3])) == 10
    assert len(enumerate_restricted(3, [1, 2, 3])) == 5
    with pytest.raises(ValueError):
        enumerate_restricted(3, [1, 2])


def test_signed_triangulations_double():
    assert len(enumerate_signed(3)) == 20


def test_arc_module_dictionary(lambda33):
    assert arc_to_indec(Arc.proj(2), lambda33) == Indec(2, 3)
    assert arc_to_indec(Arc.inner(2, 1), lambda33) == Indec(1, 1)
    assert arc_to_indec(Arc.inner(1, 1), lambda33) == Indec(1, 2)
    assert indec_to_arc(Indec(1, 1), lambda33) == Arc.inner(2, 1)
    assert indec_to_arc(Indec(3, 3), lambda33) == Arc.proj(3)


def test_arc_module_dictionary_errors(lambda33):
    with pytest.raises(ArcTooLong):
        arc_to_indec(Arc.inner(1, 1), make_cyclic(3, 2))
    with pytest.raises(NotTauRigid):
        indec_to_arc(Indec(1, 2), make_cyclic(2, 3))
    with pytest.raises(NotInDomain):
        arc_to_indec(Arc.proj(5), make_general([2, 5], {5: 2}, {2: 1, 5: 2}))


@pytest.mark.parametrize("alg", [make_cyclic(3, 3), make_cyclic(4, 4), make_linear([1, 2, 3]), make_cyclic(3, 2)])
def test_modules_and_triangulations_correspond(alg):
    bounds = list(alg.loewy_series)
    triangulations = enumerate_restricted(len(alg), bounds)
    modules = enumerate_tau_tilt(alg)
    assert sorted(tau_tilt_to_triangulation(pair, alg) for pair in modules) == triangulations
    for x in triangulations:
        assert tau_tilt_to_triangulation(triangulation_to_tau_tilt(x, alg), alg) == x


def test_proper_pair_is_not_a_triangulation(lambda33):
    proper = next(pair for pair in enumerate_stt(lambda33) if not pair.is_tau_tilting)
    with pytest.raises(NotInDomain):
        tau_tilt_to_triangulation(proper, lambda33)


def test_signed_self_folded_triangle():
    alg = make_cyclic(2, 2)
    x = Triangulation.of(2, [Arc.proj(2), Arc.inner(2, 2)])
    assert signed_to_stt(SignedTriangulation(x, "-"), alg) == SttPair((Indec(2, 1),), (1,))
    assert signed_to_stt(SignedTriangulation(x, "+"), alg) == SttPair((Indec(2, 1), Indec(2, 2)), ())


@pytest.mark.parametrize("alg", [make_cyclic(2, 2), make_cyclic(3, 3), make_cyclic(3, 5)])
def test_signed_dictionary_is_a_bijection(alg):
    pairs = enumerate_stt(alg)
    signed = [stt_to_signed(pair, alg) for pair in pairs]
    assert sorted(signed) == enumerate_signed(len(alg), alg.loewy_series)
    for pair, sx in zip(pairs, signed):
        assert signed_to_stt(sx, alg) == pair


def test_signed_dictionary_needs_long_projectives():
    with pytest.raises(LoewyTooSmall):
        signed_to_stt(enumerate_signed(3)[0], make_cyclic(3, 2))


@pytest.mark.parametrize("alg", [make_cyclic(1, 1), make_cyclic(1, 2), make_cyclic(3, 3), make_cyclic(4, 4)])
def test_flip_commutes_with_mutation(alg):
    for sx in enumerate_signed(len(alg)):
        pair = signed_to_stt(sx, alg)
        for arc in sx.triangulation.arcs:
            expected = mutate(alg, pair, arc_slot(sx, arc, alg))
            assert signed_to_stt(flip(sx, arc), alg) == expected


def test_flip_pops_the_sign_of_a_self_folded_triangle():
    x = Triangulation.of(2, [Arc.proj(2), Arc.inner(2, 2)])
    assert flip(SignedTriangulation(x, "+"), Arc.proj(2)) == SignedTriangulation(x, "-")
    with pytest.raises(ArcNotPresent):
        flip(SignedTriangulation(x, "+"), Arc.proj(1))


def test_flip_graph_is_regular():
    graph = flip_graph(3)
    assert graph.number_of_nodes() == 20
    assert all(degree == 3 for _, degree in graph.degree())


def test_fan_count():
    x = Triangulation.of(3, [Arc.proj(1), Arc.proj(2), Arc.inner(2, 1)])
    assert fan_count(x, 2, 1) == 1
    assert fan_count(x, 1, 2) == 0


def test_flip_on_the_one_gon_pops_the_sign():
    x = Triangulation.of(1, [Arc.proj(1)])
    assert enumerate_triangulations(1) == [x]
    assert flip(SignedTriangulation(x, "+"), Arc.proj(1)) == SignedTriangulation(x, "-")
    assert flip(SignedTriangulation(x, "-"), Arc.proj(1)) == SignedTriangulation(x, "+")
    graph = flip_graph(1)
    assert graph.number_of_nodes() == 2
    assert graph.number_of_edges() == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_flip_graph_is_connected_and_regular(n):
    graph = flip_graph(n)
    assert graph.number_of_nodes() == 2 * comb(2 * n - 1, n - 1)
    assert nx.is_connected(graph)
    assert all(degree == n for _, degree in graph.degree())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fan_count_is_bounded_by_the_fan_width(n):
    for x in enumerate_triangulations(n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                width = (j - i) % n or n
                if width < 2:
                    continue
                assert fan_count(x, i, j) <= width - 1
                assert (fan_count(x, i, j) == width - 1) == (Arc.inner(i, j) in x), (x, i, j)

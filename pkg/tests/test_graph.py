from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import from_nx, graphs, to_nx
from zagreb_bounds.errors import CapacityError, GraphRangeError, HypothesisError, ParseError
from zagreb_bounds.graph import (
    HARD_MAX_N,
    CorpusSpec,
    DegreeSequence,
    GammaClass,
    Graph,
    canonical_code,
    complement,
    complete_graph,
    cycle_graph,
    degree_sequence,
    empty_graph,
    enumerate_graphs,
    gamma_membership,
    iso_classes,
    is_connected,
    max_enumeration_n,
    named_gamma_flags,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    to_edge_list,
    to_graph6,
)


# -- construction -------------------------------------------------------------

def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError, match="loop"):
        Graph(2, (0b01, 0))
    with pytest.raises(ValueError, match="symmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_named_families():
    assert complete_graph(5).m == 10
    assert cycle_graph(6).degrees() == [2] * 6
    assert path_graph(4).m == 3
    assert sorted(star_graph(3).degrees()) == [1, 1, 1, 3]
    assert empty_graph(3).m == 0


# -- edge lists ---------------------------------------------------------------

def test_edge_list_path():
    g = parse_edge_list("1 2\n2 3")
    assert g.n == 3 and g.m == 2
    assert degree_sequence(g).degrees == (2, 1, 1)


def test_edge_list_reference_graph(g1):
    assert g1.n == 8 and g1.m == 19
    assert degree_sequence(g1).degrees == (7, 6, 6, 5, 4, 4, 4, 2)


def test_reference_graphs_are_connected(g1, g2, g3):
    for g in (g1, g2, g3):
        assert is_connected(g) and min(g.degrees()) >= 1


def test_edge_list_header_and_comments():
    g = parse_edge_list("# a triangle plus an isolated vertex\nn 4\n1 2  # first\n2 3\n\n3 1\n")
    assert g.n == 4 and g.m == 3
    assert degree_sequence(g).delta == 0


@pytest.mark.parametrize(
    "text, err, msg",
    [
        ("1 1", ParseError, "loop not allowed"),
        ("1 x", ParseError, "not an integer"),
        ("1 2 3", ParseError, "two vertex labels"),
        ("n 3\n1 4", GraphRangeError, "exceeds"),
        ("n 3\nn 3\n1 2", ParseError, "repeated"),
        ("", ParseError, "vertex count"),
        ("0 1", ParseError, "positive"),
    ],
)
def test_edge_list_errors(text, err, msg):
    with pytest.raises(err, match=msg):
        parse_edge_list(text)


def test_range_error_is_a_parse_error():
    assert issubclass(GraphRangeError, ParseError)


@given(graphs(min_n=1, max_n=8))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


# -- graph6 -------------------------------------------------------------------

def test_graph6_small_codes():
    k3 = parse_graph6("Bw")
    assert k3.n == 3 and k3.m == 3
    assert to_graph6(complete_graph(3)) == "Bw"
    one = parse_graph6("@")
    assert one.n == 1 and one.m == 0
    assert parse_graph6(">>graph6<<Bw") == k3


def test_graph6_round_trip_n4():
    for g in enumerate_graphs(CorpusSpec(4, 4, connected_only=False, min_degree_positive=False)):
        assert parse_graph6(to_graph6(g)) == g


@given(graphs(min_n=1, max_n=9))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expected
    assert from_nx(nx.from_graph6_bytes(expected.encode())) == g


def test_graph6_large_n_header():
    g = path_graph(70)
    s = to_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("text", ["", "B", "Bw?", "B\x7f", "B ", "~??"])
def test_graph6_errors(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


# -- degrees and complements --------------------------------------------------

def test_degree_sequence_positions(g2):
    ds = degree_sequence(g2)
    assert (ds.Delta, ds.d2, ds.d_nminus1, ds.delta) == (6, 5, 3, 2)
    assert ds.d(1) == ds.Delta and ds.d(ds.n) == ds.delta
    with pytest.raises(HypothesisError):
        ds.d(0)
    with pytest.raises(HypothesisError):
        ds.d(9)


def test_degree_sequence_complete():
    ds = degree_sequence(complete_graph(4))
    assert ds.degrees == (3, 3, 3, 3) and ds.is_regular


def test_degree_sequence_validation():
    with pytest.raises(ValueError):
        DegreeSequence((1, 2))  # not non-increasing
    with pytest.raises(ValueError):
        DegreeSequence((2, 1))  # odd sum
    assert DegreeSequence.from_degrees([1, 2, 1]).degrees == (2, 1, 1)


def test_complement_examples(g1):
    assert complement(complete_graph(5)) == empty_graph(5)
    assert complement(complement(g1)) == g1
    c5 = cycle_graph(5)
    assert nx.is_isomorphic(to_nx(complement(c5)), to_nx(c5))


@given(graphs(min_n=1, max_n=9))
def test_graph_invariants(g):
    ds = degree_sequence(g)
    assert sum(ds.degrees) == 2 * g.m  # handshake
    gc = complement(g)
    assert complement(gc) == g
    assert degree_sequence(gc).degrees == tuple(sorted((g.n - 1 - d for d in ds.degrees), reverse=True))
    assert is_connected(g) == nx.is_connected(to_nx(g))


# -- Gamma classes ------------------------------------------------------------

def test_gamma_membership_examples(g1):
    k4 = complete_graph(4)
    assert all(gamma_membership(k4).values())
    star = star_graph(3)
    assert GammaClass(2, 4).contains(star)
    assert not GammaClass(1, 2).contains(star)
    assert not GammaClass(2, 7).contains(g1)


def test_gamma_class_parameters():
    with pytest.raises(ValueError):
        GammaClass(3, 3)
    with pytest.raises(ValueError):
        GammaClass(3, 2)
    with pytest.raises(ValueError):
        GammaClass(1, 5).contains(complete_graph(4))


def test_named_gamma_flags_star():
    flags = named_gamma_flags(star_graph(3))
    assert flags["2,n"] and not flags["1,n"] and not flags["1,n-1"]


# -- enumeration --------------------------------------------------------------

def test_enumeration_small_counts():
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(3, 3, connected_only=False, min_degree_positive=False))) == 8
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(3, 3))) == 4
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(4, 4, dedup_isomorphic=True))) == 6
    single = list(enumerate_graphs(CorpusSpec(1, 1, min_degree_positive=False)))
    assert single == [empty_graph(1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_dedup_matches_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
    ours = list(enumerate_graphs(CorpusSpec(n, n, connected_only=False, dedup_isomorphic=True,
                                            min_degree_positive=False)))
    assert len(ours) == len(atlas)
    connected = [g for g in ours if is_connected(g)]
    assert len(connected) == sum(nx.is_connected(h) for h in atlas)


def test_dedup_n7_counts():
    reps = iso_classes(7)
    assert len(reps) == 1044
    assert sum(is_connected(g) for g in reps) == 853


def test_dedup_classes_pairwise_distinct_n5():
    reps = iso_classes(5)
    for a, b in itertools.combinations(reps, 2):
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=7))
def test_canonical_code_is_invariant(g):
    code = canonical_code(g)
    for perm in itertools.islice(itertools.permutations(range(g.n)), 0, 720, 37):
        h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_code(h) == code


def test_labeled_order_is_bitmask_order():
    codes = [to_graph6(g) for g in enumerate_graphs(CorpusSpec(3, 3, connected_only=False, min_degree_positive=False))]
    assert codes[0] == "B?" and codes[-1] == "Bw" and len(codes) == 8


@pytest.mark.parametrize("count", [1, 2, 3, 5])
def test_shards_partition_corpus(count):
    spec = CorpusSpec(3, 5)
    whole = [to_graph6(g) for g in enumerate_graphs(spec)]
    parts = [to_graph6(g) for i in range(count) for g in enumerate_graphs(spec, (i, count))]
    assert sorted(parts) == sorted(whole)
    assert len(parts) == len(whole)


def test_capacity_guard(monkeypatch):
    with pytest.raises(CapacityError):
        enumerate_graphs(CorpusSpec(3, 12))
    monkeypatch.setenv("ZB_MAX_N", "5")
    assert max_enumeration_n() == 5
    with pytest.raises(CapacityError):
        enumerate_graphs(CorpusSpec(3, 6))
    monkeypatch.setenv("ZB_MAX_N", "40")
    assert max_enumeration_n() == HARD_MAX_N


def test_corpus_spec_validation():
    with pytest.raises(ValueError):
        CorpusSpec(5, 4)
    assert "dedup" in CorpusSpec(3, 7, dedup_isomorphic=True).describe()

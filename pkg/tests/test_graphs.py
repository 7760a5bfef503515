"""graph6 codec, families, enumeration and structural predicates.

The codec oracle is networkx's graph6 implementation; spec-level examples
were hand-decoded from the format definition first.
"""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngbounds.graphs import (FamilyError, FamilySpec, Graph, Graph6Error,
                             basic_props, classify_structure, complement,
                             enumerate_labeled, family, is_complete_graph,
                             is_path_graph, make_family, parse_graph6,
                             stream_from_lines, to_graph6, triangle_size)


def edges_of(g: Graph) -> set:
    return set(g.edges())


# --- graph6 decode: hand-derived byte layouts ------------------------------

def test_parse_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.m == 6


def test_parse_empty4():
    g = parse_graph6("C?")
    assert g.n == 4 and g.m == 0


def test_parse_path4():
    # 'h' = 104 -> 41 = 101001: edges 01, 12, 23
    g = parse_graph6("Ch")
    assert g.n == 4
    assert edges_of(g) == {(0, 1), (1, 2), (2, 3)}


def test_parse_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0


def test_encode_examples():
    assert to_graph6(family("complete", 4)) == "C~"
    assert to_graph6(family("empty", 4)) == "C?"
    assert to_graph6(family("path", 4)) == "Ch"


@pytest.mark.parametrize("bad, fragment", [
    ("", "empty"),
    ("C", "truncated"),
    ("C~~", "trailing"),
    (chr(20) + "~", "malformed"),
    ("~???", "long-form"),
    ("?", "empty vertex set"),
    ("A~", "padding"),
])
def test_parse_errors(bad, fragment):
    with pytest.raises(Graph6Error, match=fragment):
        parse_graph6(bad)


def test_to_graph6_size_cap():
    with pytest.raises(Graph6Error, match="unsupported size"):
        to_graph6(Graph(63, 0))


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_codec_against_networkx_exhaustive():
    for n in range(2, 6):
        for bits in range(1 << triangle_size(n)):
            g = Graph(n, bits)
            mine = to_graph6(g)
            ref = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
            assert mine == ref
            assert parse_graph6(mine) == g


@given(st.integers(1, 8), st.data())
@settings(max_examples=200, deadline=None)
def test_roundtrip_property(n, data):
    bits = data.draw(st.integers(0, (1 << triangle_size(n)) - 1))
    g = Graph(n, bits)
    assert parse_graph6(to_graph6(g)) == g


def test_header_line_stripped():
    stream = stream_from_lines([">>graph6<<", "C~", "", "C?"])
    assert [g.m for g in stream] == [6, 0]
    inline = stream_from_lines([">>graph6<<C~"])
    assert [g.m for g in inline] == [6]


# --- complement --------------------------------------------------------------

def test_complement_examples():
    assert complement(family("complete", 4)) == family("empty", 4)
    c5 = family("cycle", 5)
    assert complement(c5).m == 5
    assert sorted(complement(c5).degrees()) == [2] * 5
    p4 = family("path", 4)
    assert complement(p4).m == 3
    assert sorted(complement(p4).degrees()) == sorted(p4.degrees())


@given(st.integers(1, 7), st.data())
@settings(max_examples=200, deadline=None)
def test_complement_involution(n, data):
    bits = data.draw(st.integers(0, (1 << triangle_size(n)) - 1))
    g = Graph(n, bits)
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == n * (n - 1) // 2


# --- families ----------------------------------------------------------------

def test_complete_split():
    g = family("complete_split", 5, 3)
    assert g.m == 7
    # clique of 2 joined to 3 independent vertices
    props = basic_props(g)
    assert props.connected
    assert sorted(props.degrees) == [2, 2, 2, 4, 4]


def test_complete_split_parameter_check():
    with pytest.raises(FamilyError):
        family("complete_split", 5, 5)
    with pytest.raises(FamilyError):
        family("complete_split", 5, 0)


def test_join_clique_empty_equals_complete_split():
    assert family("join_clique_empty", 2, 3) == family("complete_split", 5, 3)


def test_paley5_is_pentagon():
    g = family("paley", 5)
    assert g.m == 5
    assert basic_props(g).degrees == (2,) * 5
    assert basic_props(g).connected


@pytest.mark.parametrize("p", [2, 3, 7, 9, 11, 15, 21])
def test_paley_rejects_bad_parameters(p):
    with pytest.raises(FamilyError):
        family("paley", p)


def test_paley_selfcomplementary_degree_and_edges():
    for p in (5, 13, 17):
        g = family("paley", p)
        gc = complement(g)
        assert sorted(g.degrees()) == sorted(gc.degrees())
        assert g.m == gc.m


def test_complete_bipartite():
    g = family("complete_bipartite", 2, 3)
    assert g.m == 6
    assert basic_props(g).bipartite


def test_complete_multipartite_and_star():
    assert family("complete_multipartite", 1, 1, 1, 2) == family("complete_split", 5, 2)
    assert family("star", 5) == family("complete_bipartite", 1, 4)


def test_family_kind_validation():
    with pytest.raises(FamilyError):
        make_family(FamilySpec("banana", (3,)))
    with pytest.raises(FamilyError):
        make_family(FamilySpec("path", (0,)))


# --- enumeration and streams -------------------------------------------------

@pytest.mark.parametrize("n, count", [(3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    stream = enumerate_labeled(n)
    assert stream.count == count
    seen = set()
    for g in stream:
        assert g.n == n
        seen.add(g.bits)
    assert len(seen) == count


def test_enumeration_cap():
    with pytest.raises(ValueError, match="cap"):
        enumerate_labeled(9)


def test_stream_split_preserves_indexing():
    stream = enumerate_labeled(4)
    whole = list(stream.indexed())
    for k in (1, 3, 7):
        parts = stream.split(k)
        joined = [item for part in parts for item in part.indexed()]
        assert joined == whole


def test_g6_stream_split():
    lines = [to_graph6(Graph(4, b)) for b in range(20)]
    stream = stream_from_lines(lines)
    whole = list(stream.indexed())
    parts = stream.split(3)
    joined = [item for part in parts for item in part.indexed()]
    assert joined == whole


# --- predicates ---------------------------------------------------------------

def test_basic_props_examples():
    c5 = basic_props(family("cycle", 5))
    assert (c5.m, c5.connected, c5.triangle_free, c5.bipartite) == (5, True, True, False)
    assert not basic_props(family("complete", 4)).triangle_free
    k23 = basic_props(family("complete_bipartite", 2, 3))
    assert k23.bipartite and k23.triangle_free and k23.connected


def test_classify_k33():
    tags = classify_structure(family("complete_bipartite", 3, 3))
    assert {"complete_bipartite", "complete_multipartite", "regular",
            "semiregular_bipartite"} <= tags


def test_classify_paley5_conference():
    assert "conference_srg" in classify_structure(family("paley", 5))
    assert "conference_srg" in classify_structure(family("paley", 13))


def test_classify_k5_minus_edge():
    g = family("complete", 5).with_edge(0, 1, False)
    tags = classify_structure(g)
    assert "complete_multipartite" in tags
    assert "complete_split" in tags
    assert "complete_bipartite" not in tags


def test_classify_complete_bipartite_range():
    for a in range(1, 5):
        for b in range(a, 5):
            tags = classify_structure(family("complete_bipartite", a, b))
            assert "complete_bipartite" in tags


def test_classify_negative_cases():
    assert "complete_multipartite" not in classify_structure(family("path", 4))
    assert "complete_multipartite" not in classify_structure(family("empty", 4))
    assert "complete_split" not in classify_structure(family("cycle", 4))
    # C4 = K22 is complete bipartite though
    assert "complete_bipartite" in classify_structure(family("cycle", 4))


def test_path_and_complete_predicates():
    assert is_path_graph(family("path", 5))
    assert not is_path_graph(family("cycle", 5))
    assert not is_path_graph(family("star", 4))
    assert is_complete_graph(family("complete", 6))
    assert not is_complete_graph(family("path", 3))


def test_delete_vertex():
    g = family("cycle", 5).delete_vertex(0)
    assert g.n == 4 and g.m == 3
    assert is_path_graph(g)

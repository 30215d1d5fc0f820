import pytest
from hypothesis import given, settings

from xtar.bitset import full, members, vset
from xtar.errors import FamilyError, Graph6Error
from xtar.families import (
    complete, corona, cycle, double_star, family, grl, h_family, hr_family, hypercube,
    parse_family, parse_graph_input, path, paw, star,
)
from xtar.graph import Graph, closed_neighborhood, components_within, emit_graph6, parse_graph6

from strategies import graphs


# Hand-decoded: header byte = n + 63; body bits run over the upper triangle
# column by column, (0,1), (0,2), (1,2), (0,3), ... , six per byte, offset 63.
def test_parse_k2():
    g = parse_graph6("A_")  # '_' = 95 - 63 = 32 = 0b100000 -> edge (0,1)
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_parse_k4():
    g = parse_graph6("C~")  # '~' = 63 = 0b111111 -> all six pairs
    assert g == complete(4)


def test_parse_d_record():
    # '?' = 0b000000, '{' = 0b111100 -> pairs (0,4),(1,4),(2,4),(3,4)
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert emit_graph6(g) == "D?{"


def test_emit_small():
    assert emit_graph6(complete(2)) == "A_"
    assert emit_graph6(Graph(1, (0,))) == "@"


def test_header_is_optional():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("C~~", 2),       # one body byte too many
    ("C", 1),         # body missing
    ("Dxx", 2),       # nonzero padding in the last byte
    ("A!", 1),        # byte below 63
])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_parse_rejects_large_order():
    # 4-byte header encoding n = 65
    text = "~" + chr(63) + chr(63 + 1) + chr(63 + 1) + "?" * ((65 * 64 // 2 + 5) // 6)
    with pytest.raises(Graph6Error, match="exceeds"):
        parse_graph6(text)


def test_multibyte_header_round_trip():
    g = path(63)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@settings(max_examples=200)
@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g
    assert emit_graph6(parse_graph6(text)) == text


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))       # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))       # loop
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))      # neighbor out of range


def test_closed_neighborhood():
    assert closed_neighborhood(star(3), vset([0])) == vset([0, 1, 2, 3])
    assert closed_neighborhood(cycle(5), vset([0])) == vset([4, 0, 1])
    assert closed_neighborhood(path(4), vset([1, 2])) == full(4)


def test_components_within():
    assert components_within(path(4), vset([0, 2, 3])) == [vset([0]), vset([2, 3])]
    assert components_within(path(4), 0) == []
    assert components_within(complete(4), full(4)) == [full(4)]


def test_h2_edge_list():
    # one-based edge list
    one_based = [(3, 1), (1, 4), (4, 3), (3, 2), (2, 6), (6, 8), (8, 7), (7, 5), (5, 8),
                 (7, 6), (6, 5), (5, 1), (1, 2), (2, 4)]
    expected = Graph.from_edges(8, [(u - 1, v - 1) for u, v in one_based])
    assert h_family(2) == expected


def test_star_and_corona():
    assert star(3).edges() == [(0, 1), (0, 2), (0, 3)]
    g = corona(complete(3), 2)
    assert g.n == 9 and g.num_edges() == 3 + 6
    assert [g.degree(v) for v in range(3)] == [4, 4, 4]
    assert all(g.degree(v) == 1 for v in range(3, 9))


def test_grl_and_hr():
    g = grl(5, 2)
    assert g.n == 7 and g.num_edges() == 10 + 2
    h = hr_family(4)
    assert h.n == 10
    assert h.adj[6] == h.adj[7] == h.adj[8] == h.adj[9] == vset([3, 4, 5])


@pytest.mark.parametrize("bad", ["h:1", "grl:5,4", "grl:2,1", "cycle:2", "nosuch:3", "star", "hypercube:7"])
def test_family_errors(bad):
    with pytest.raises(FamilyError):
        parse_family(bad)


def test_descriptors():
    assert parse_family("K4") == complete(4)
    assert parse_family("cycle:6+0-3") == cycle(6).add_edge(0, 3)
    assert parse_family("corona:K3,2") == corona(complete(3), 2)
    assert parse_family("ds:2,2") == double_star(2, 2)
    assert family("h", 3) == h_family(3)
    assert parse_graph_input("paw") == paw()
    assert parse_graph_input("C~") == complete(4)


@given(graphs(max_n=10))
def test_family_free_graphs_satisfy_invariants(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in members(g.adj[v]):
            assert g.adj[u] >> v & 1


def test_named_families_satisfy_invariants():
    for g in [complete(6), path(7), cycle(8), star(5), paw(), double_star(2, 3), hypercube(3),
              corona(cycle(4), 3), grl(6, 3), h_family(4), hr_family(5)]:
        Graph(g.n, g.adj)  # re-validates symmetry, irreflexivity, range


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=20))
def test_graph6_agrees_with_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert emit_graph6(g) == theirs
    back = nx.from_graph6_bytes(theirs.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


@pytest.mark.parametrize("g", [path(63), cycle(64), complete(40), star(62)])
def test_large_graph6_agrees_with_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert emit_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_chord_suffix():
    assert parse_family("cycle6+chord") == cycle(6).add_edge(0, 3)
    assert parse_family("C7+chord") == cycle(7).add_edge(0, 3)
    with pytest.raises(FamilyError):
        parse_family("path:6+chord")

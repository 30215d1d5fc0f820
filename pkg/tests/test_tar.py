import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xtar.bitset import vset
from xtar.errors import IsolatedVertexError
from xtar.families import complete, cycle, h_family, hypercube, path, paw, star
from xtar.graph import Graph
from xtar.tar import (
    build_tar, degree_stats, interval_property_check, is_bipartite, is_hypercube, is_interval,
    level_components, level_report, tar_cartesian, tar_to_dict, thresholds, to_dot,
)
from xtar.xsets import build_profile

import oracles
from strategies import graphs

H2_LEVEL5 = [
    "1,2,3,4,7", "1,2,3,4,8", "1,2,3,5,7", "1,2,3,5,8", "1,2,3,6,7", "1,2,3,6,8", "1,2,3,7",
    "1,2,3,7,8", "1,2,3,8", "1,2,4,5,7", "1,2,4,5,8", "1,2,4,6,7", "1,2,4,6,8", "1,2,4,7",
    "1,2,4,7,8", "1,2,4,8", "1,3,4,5,7", "1,3,4,5,8", "1,3,4,6,7", "1,3,4,6,8", "1,3,4,7",
    "1,3,4,7,8", "1,3,4,8", "1,3,5,6,7", "1,3,5,6,8", "1,3,5,7,8", "1,3,6,7,8", "1,4,5,6,7",
    "1,4,5,6,8", "1,4,5,7,8", "1,4,6,7,8", "2,3,4,5,7", "2,3,4,5,8", "2,3,4,6,7", "2,3,4,6,8",
    "2,3,4,7", "2,3,4,7,8", "2,3,4,8", "2,3,5,6,7", "2,3,5,6,8", "2,3,5,7,8", "2,3,6,7,8",
    "2,4,5,6,7", "2,4,5,6,8", "2,4,5,7,8", "2,4,6,7,8", "3,4,5,6,7", "3,4,5,6,8", "3,4,5,7,8",
    "3,4,6,7,8", "3,5,6,7", "3,5,6,7,8", "3,5,6,8", "3,5,7,8", "3,6,7,8", "4,5,6,7",
    "4,5,6,7,8", "4,5,6,8", "4,5,7,8", "4,6,7,8",
]


def from_labels(labels):
    return {vset(int(x) - 1 for x in s.split(",")) for s in labels}


def nx_tar(tar):
    t = nx.Graph()
    t.add_nodes_from(range(len(tar)))
    t.add_edges_from(tar.edges())
    return t


def test_star_tar_is_star_times_k2():
    tar = build_tar(build_profile(star(3), "zf"))
    expected = {vset(s) for s in [(1, 2), (1, 3), (2, 3), (1, 2, 3), (0, 1, 2), (0, 1, 3),
                                  (0, 2, 3), (0, 1, 2, 3)]}
    assert set(tar.vertices) == expected
    k13k2 = nx.cartesian_product(nx.star_graph(3), nx.complete_graph(2))
    assert nx.is_isomorphic(nx_tar(tar), k13k2)


def test_paw_adds_two_sets():
    a = set(build_tar(build_profile(star(3), "zf")).vertices)
    b = set(build_tar(build_profile(paw(), "zf")).vertices)
    assert b - a == {vset([0, 2]), vset([0, 3])} and a <= b


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph_tar_is_star(n):
    p = build_profile(complete(n), "zf")
    assert nx.is_isomorphic(nx_tar(build_tar(p)), nx.star_graph(n))
    assert thresholds(p) == (n, n)


def test_h2_level5_sets_and_components():
    p = build_profile(h_family(2), "zf")
    tar = build_tar(p, cap=5)
    assert set(tar.vertices) == from_labels(H2_LEVEL5)
    comps = level_components(p, 5)
    assert sorted(map(len, comps)) == [30, 30]
    assert not nx.is_connected(nx_tar(tar))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7, no_isolated=True), st.sampled_from(["zf", "dom", "psd", "pd"]))
def test_thresholds_match_networkx(g, rule):
    assert thresholds(build_profile(g, rule)) == oracles.thresholds(g, rule)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7, no_isolated=True), st.sampled_from(["zf", "dom"]))
def test_structure_of_full_tar(g, rule):
    p = build_profile(g, rule)
    tar = build_tar(p)
    assert degree_stats(tar) == (g.n, g.n - p.upper_x)
    assert is_bipartite(tar)
    assert not is_hypercube(tar)
    assert nx.is_connected(nx_tar(tar))


def test_level_report_counts():
    p = build_profile(cycle(5), "zf")
    levels = level_report(p)
    assert [lv.k for lv in levels] == [2, 3, 4, 5]
    assert [lv.num_sets for lv in levels] == [5, 15, 20, 21]
    assert [lv.connected for lv in levels] == [False, True, True, True]


def test_thresholds_reject_isolated_vertices():
    with pytest.raises(IsolatedVertexError):
        thresholds(build_profile(Graph.from_edges(3, [(0, 1)]), "zf"))


def test_hypercube_recognition():
    # the TAR of an edgeless one-vertex part is a single point; the full cube is built directly
    cube = build_profile(Graph(1, (0,)), "zf")
    tar = build_tar(cube)
    assert len(tar) == 1
    assert not is_interval([0b0, 0b11])
    assert is_interval([0b00, 0b01, 0b10, 0b11])


def test_interval_property_on_examples():
    for g in [cycle(6), hypercube(3), h_family(2), paw()]:
        tar = build_tar(build_profile(g, "zf"))
        assert interval_property_check(tar, 2).passed
        assert interval_property_check(tar, 3).passed


def _union(g1, g2):
    return g1.disjoint_union(g2)


@pytest.mark.parametrize("g1, g2", [(complete(2), complete(2)), (complete(3), path(3)),
                                    (star(3), cycle(4))])
def test_cartesian_product_of_components(g1, g2):
    t1 = build_tar(build_profile(g1, "zf"))
    t2 = build_tar(build_profile(g2, "zf"))
    whole = build_tar(build_profile(_union(g1, g2), "zf"))
    prod = tar_cartesian(t1, t2)
    assert set(prod.vertices) == set(whole.vertices)
    assert set(map(frozenset, prod.edges())) == set(map(frozenset, whole.edges()))
    assert nx.is_isomorphic(nx_tar(whole), nx.cartesian_product(nx_tar(t1), nx_tar(t2)))


def test_dot_export():
    dot = to_dot(build_tar(build_profile(star(3), "zf")))
    assert dot.startswith("graph tar {")
    assert dot.count(" -- ") == 10  # 3 spokes x 2 layers + 4 rungs
    assert '"{0,1,2,3}"' in dot or "{0,1,2,3}" in dot


def test_json_export():
    p = build_profile(cycle(4), "zf")
    data = tar_to_dict(p)
    json.dumps(data)
    assert data["rule"] == "zf"
    assert data["num_sets"] == len(data["sets"]) == p.total
    assert data["x0"] == 3 and data["underline_x0"] == 3
    assert [lv["k"] for lv in data["levels"]] == [2, 3, 4]
    capped = tar_to_dict(p, cap=2)
    assert capped["num_sets"] == 4 and capped["edges"] == []


@pytest.mark.long
def test_graphs_with_separated_thresholds_up_to_order_8():
    from xtar.canon import certificate, enumerate_nonisomorphic
    from xtar.families import hr_family

    found = []
    for n in range(2, 9):
        for g in enumerate_nonisomorphic(n, allow_long=True):
            lower, x0 = thresholds(build_profile(g, "zf"))
            if lower < x0:
                found.append(g.label)
    assert found == ["G?N~v{", "G?{~nk"]
    assert certificate(hr_family(2)) in found

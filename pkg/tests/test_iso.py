from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xtar.bitset import full, vset
from xtar.canon import enumerate_nonisomorphic
from xtar.errors import IsolatedVertexError
from xtar.families import (
    complete, corona, cycle, double_star, grl, hr_family, hr_twins, path, paw, star, zfpoly_g,
    zfpoly_h,
)
from xtar.graph import Graph
from xtar.iso import (
    Bijection, brute_tar_iso, irrelevant_vertices, nu_map,
    tar_isomorphic, twin_classes, twin_deletion_check,
)
from xtar.survey import uniqueness_survey
from xtar.tar import build_tar
from xtar.xsets import build_profile

import oracles
from strategies import graph_and_perm, graphs


def nx_tar(g, rule="zf"):
    return oracles.tar_nx(oracles.x_sets(g, rule))


def test_irrelevant_vertices():
    assert irrelevant_vertices(build_profile(star(4), "zf")) == vset([0])
    assert irrelevant_vertices(build_profile(corona(complete(3), 2), "zf")) == vset([0, 1, 2])
    assert irrelevant_vertices(build_profile(cycle(5), "zf")) == 0
    assert irrelevant_vertices(build_profile(grl(4, 2), "pd")) == vset([4, 5])


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=7, no_isolated=True))
def test_no_domination_irrelevant_vertices(g):
    assert irrelevant_vertices(build_profile(g, "dom")) == 0


def test_nu_map_on_star():
    p = build_profile(star(3), "zf")
    assert nu_map(p, vset([0]))
    assert not nu_map(p, vset([1]))


def _assert_valid(b, p, q):
    assert sorted(b.forward) == list(range(p.n))
    assert {b.image(s) for s in p.minimal_sets} == set(q.minimal_sets)
    assert {b.image(s) for s in p.all_sets()} == q.set_family


@settings(max_examples=80, deadline=None)
@given(graph_and_perm(min_n=2, max_n=8, no_isolated=True), st.sampled_from(["zf", "dom", "psd"]))
def test_relabeled_graph_is_tar_isomorphic(gp, rule):
    g, perm = gp
    h = g.relabel(perm)
    verdict = tar_isomorphic(g, h, rule)
    assert verdict.isomorphic
    _assert_valid(verdict.bijection, build_profile(g, rule), build_profile(h, rule))


def test_chord_keeps_identity():
    verdict = tar_isomorphic(cycle(6), cycle(6).add_edge(0, 3), "zf")
    assert verdict.isomorphic and verdict.bijection.is_identity


def test_witnesses():
    v = tar_isomorphic(star(3), paw(), "zf")
    assert not v.isomorphic and v.witness.startswith("polynomial")
    v = tar_isomorphic(zfpoly_g(), zfpoly_h(), "zf")
    assert v.witness == "upper_x: 3 vs 4"
    v = tar_isomorphic(path(3), path(4), "zf")
    assert v.witness.startswith("n:")
    d = v.as_dict()
    assert d["isomorphic"] is False and d["bijection"] is None


def test_isolated_vertices_rejected():
    with pytest.raises(IsolatedVertexError):
        tar_isomorphic(Graph.from_edges(3, [(0, 1)]), path(3), "zf")


def test_bijection_helpers():
    b = Bijection.from_forward([2, 0, 1])
    assert b.image(0b001) == 0b100 and b.inverse == (1, 2, 0)
    assert Bijection.identity(4).is_identity


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=5, no_isolated=True), graphs(min_n=2, max_n=5, no_isolated=True))
def test_brute_matches_networkx(g, h):
    t1, t2 = build_tar(build_profile(g, "zf")), build_tar(build_profile(h, "zf"))
    assert brute_tar_iso(t1, t2) == nx.is_isomorphic(nx_tar(g), nx_tar(h))


@pytest.mark.parametrize("n", [3, 4])
def test_decision_matches_networkx_on_all_pairs(n):
    gs = list(enumerate_nonisomorphic(n))
    tars = [nx_tar(g) for g in gs]
    for i, j in combinations(range(len(gs)), 2):
        assert tar_isomorphic(gs[i], gs[j], "zf").isomorphic == nx.is_isomorphic(tars[i], tars[j])


def _nx_unique_count(n):
    gs = list(enumerate_nonisomorphic(n))
    tars = [nx_tar(g) for g in gs]
    return sum(
        1 for i in range(len(gs))
        if not any(i != j and nx.is_isomorphic(tars[i], tars[j]) for j in range(len(gs))))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_survey_matches_networkx_oracle(n):
    res = uniqueness_survey(n, "zf")
    assert res.unique == _nx_unique_count(n)


def test_survey_row_and_jobs():
    a = uniqueness_survey(5, "zf")
    b = uniqueness_survey(5, "zf", jobs=2)
    assert a.row() == b.row() == "23 7 0.3043"
    assert sorted(map(sorted, a.classes)) == sorted(map(sorted, b.classes))
    assert sum(map(len, a.classes)) == a.total


def test_twin_classes():
    assert twin_classes(star(3)) == [vset([0]), vset([1, 2, 3])]


@pytest.mark.parametrize("r", [3, 4])
def test_twin_deletion_on_hr(r):
    report = twin_deletion_check(hr_family(r), vset(hr_twins(r)))
    assert report.passed, report.failures


def test_double_star_counterexample():
    g = double_star(2, 2)
    u1 = 2
    assert build_profile(g, "zf").x_number == 2
    sub, _ = g.induced(full(g.n) & ~(1 << u1))
    assert build_profile(sub, "zf").x_number == 2
    with pytest.raises(ValueError):
        twin_deletion_check(g, vset([2, 3]))


def test_twin_check_rejects_non_twins():
    with pytest.raises(ValueError):
        twin_deletion_check(star(4), vset([0, 1, 2]))

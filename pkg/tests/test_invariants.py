import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupgraph.errors import SizeBound
from groupgraph.graphs import Graph, build_graph
from groupgraph.groups import (
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    GeneralizedQuaternion,
    Symmetric,
    build_group,
)
from groupgraph.invariants import (
    PerfectnessParams,
    chromatic_number,
    clique_number,
    comparability_coloring,
    diameter_and_components,
    domination_number,
    exact_coloring,
    find_odd_hole,
    independence_number,
    invariant_report,
    is_proper_coloring,
    maximal_cliques,
    perfectness_check,
    power_omega_chi_formula,
)

import oracles


def make_graph(n, edges, kind="test"):
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return Graph(tuple(range(n)), adj, kind)


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return n, edges


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


@given(small_graphs())
@settings(max_examples=150, deadline=None)
def test_clique_and_independence_match_oracle(data):
    n, edges = data
    g = make_graph(n, edges)
    res = clique_number(g)
    assert res.size == oracles.max_clique(n, edges)
    assert len(res.witness) == res.size
    assert all(g.has_edge(a, b) for i, a in enumerate(res.witness) for b in res.witness[i + 1:])
    comp = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in set(edges)]
    assert independence_number(g).size == oracles.max_clique(n, comp)


@given(small_graphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_chromatic_matches_oracle(data):
    n, edges = data
    g = make_graph(n, edges)
    chi = chromatic_number(g)
    assert chi == oracles.chromatic(n, edges)
    colors = exact_coloring(g)
    assert is_proper_coloring(g, colors) and len(set(colors)) == chi
    assert clique_number(g).size <= chi


@given(small_graphs())
@settings(max_examples=150, deadline=None)
def test_domination_and_distance_match_oracle(data):
    n, edges = data
    g = make_graph(n, edges)
    dom = domination_number(g)
    assert dom.exact and dom.value == oracles.domination(n, edges)
    covered = set(dom.witness)
    for v in dom.witness:
        covered |= set(g.neighbors(v))
    assert covered == set(range(n))
    dists = [oracles.distances_from(n, edges, s) for s in range(n)]
    comps = len({frozenset(d) for d in dists})
    diam, count = diameter_and_components(g)
    assert count == comps
    if comps == 1:
        assert diam == max(max(d.values()) for d in dists)
    else:
        assert diam == math.inf


@given(small_graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_odd_hole_finder_matches_oracle(data):
    n, edges = data
    g = make_graph(n, edges)
    hole = find_odd_hole(g, max_length=9)
    assert (hole is not None) == oracles.has_induced_odd_cycle(n, edges, (5, 7, 9))
    if hole is not None:
        k = len(hole)
        assert k % 2 == 1
        sub = g.induced(hole)
        assert sub.edge_count == k and all(len(sub.neighbors(v)) == 2 for v in sub.labels)


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_maximal_cliques_are_maximal_and_complete(data):
    n, edges = data
    g = make_graph(n, edges)
    cliques = maximal_cliques(g)
    assert cliques == sorted(cliques)
    covered = set()
    for c in cliques:
        members = set(c)
        covered |= {(a, b) for a in c for b in c if a < b}
        assert all(g.has_edge(a, b) for a in c for b in c if a < b)
        assert not any(all(g.has_edge(v, a) for a in c) for v in range(n) if v not in members)
    assert set(g.edges()) <= covered
    assert max(len(c) for c in cliques) == clique_number(g).size


def test_holes():
    assert find_odd_hole(make_graph(5, cycle(5))) is not None
    assert find_odd_hole(make_graph(7, cycle(7))) is not None
    assert find_odd_hole(make_graph(9, cycle(9))) is not None
    assert find_odd_hole(make_graph(11, cycle(11))) is None
    assert find_odd_hole(make_graph(4, cycle(4))) is None
    assert find_odd_hole(make_graph(6, cycle(6))) is None


def test_perfectness_detects_c5_and_antihole():
    v = perfectness_check(make_graph(5, cycle(5)))
    assert not v.perfect and v.reason == "odd-hole" and v.label == "counterexample"
    anti = make_graph(7, cycle(7)).complement()
    v = perfectness_check(anti)
    assert not v.perfect and v.reason == "odd-antihole"


def test_perfectness_on_power_graph_records_params():
    g = build_graph(build_group(Cyclic(12)), "power")
    v = perfectness_check(g, PerfectnessParams(samples=20, seed=3))
    assert v.perfect and v.label == "perfect-sampled"
    assert v.as_dict()["params"]["seed"] == 3


def test_c12_power_invariants():
    G = build_group(Cyclic(12))
    g = build_graph(G, "power")
    assert clique_number(g).size == 9
    assert chromatic_number(g) == 9
    dom = domination_number(g)
    assert dom.value == 1 and dom.exact
    assert diameter_and_components(g) == (2, 1)
    f = power_omega_chi_formula(G)
    assert (f.exponent, f.best_chain, f.value) == (12, (1, 3, 6, 12), 9)


FROZEN = {
    # label: (omega, chi) of the power graph, from the subset / colouring oracles
    "C12": (9, 9),
    "Q8": (4, 4),
    "C2xC2": (2, 2),
    "S3": (3, 3),
}

SPECS = {
    "C12": Cyclic(12),
    "Q8": GeneralizedQuaternion(8),
    "C2xC2": DirectProduct((Cyclic(2), Cyclic(2))),
    "S3": Symmetric(3),
}


@pytest.mark.parametrize("label", FROZEN)
def test_frozen_power_invariants(label):
    G = build_group(SPECS[label])
    g = build_graph(G, "power")
    omega, chi = FROZEN[label]
    assert clique_number(g).size == omega
    assert chromatic_number(g) == chi
    assert power_omega_chi_formula(G).value == omega
    assert domination_number(g).value == 1
    assert diameter_and_components(g)[0] == 2


def test_c2xc2_independence():
    g = build_graph(build_group(DirectProduct((Cyclic(2), Cyclic(2)))), "power")
    assert independence_number(g).size == 3


@pytest.mark.parametrize("spec", [
    Cyclic(1), Cyclic(7), Cyclic(30), Dihedral(12), GeneralizedQuaternion(16), Symmetric(4), Alternating(4),
    ElementaryAbelian(3, 2), DirectProduct((Cyclic(3), Cyclic(9))),
], ids=lambda s: s.label)
def test_chain_formula_against_oracle(spec):
    G = build_group(spec)
    table = oracles.table_of(G)
    present = {oracles.order(table, x) for x in range(G.order)}
    f = power_omega_chi_formula(G)
    assert f.value == oracles.chain_formula(f.exponent, present)
    assert f.best_chain[0] == 1 and f.best_chain[-1] == f.exponent
    assert all(b % a == 0 for a, b in zip(f.best_chain, f.best_chain[1:]))
    assert f.value == clique_number(build_graph(G, "power")).size


@pytest.mark.parametrize("spec", [Cyclic(12), Symmetric(4), GeneralizedQuaternion(16), Dihedral(12)],
                         ids=lambda s: s.label)
def test_comparability_coloring(spec):
    G = build_group(spec)
    g = build_graph(G, "power")
    colors = comparability_coloring(G)
    assert is_proper_coloring(g, colors)
    assert max(colors) == clique_number(g).size
    assert set(colors) == set(range(1, max(colors) + 1))


def test_size_bounds():
    g = make_graph(130, [])
    with pytest.raises(SizeBound):
        chromatic_number(g)
    assert chromatic_number(g, limit=None) == 1
    # a certifying hint lifts the limit
    g2 = build_graph(build_group(Cyclic(200)), "power")
    hint = comparability_coloring(build_group(Cyclic(200)))
    assert chromatic_number(g2, hint=hint) == clique_number(g2).size


def test_domination_inexact_flag():
    n = 70
    g = make_graph(n, [(i, i + 1) for i in range(n - 1)])
    dom = domination_number(g)
    assert not dom.exact and dom.value >= math.ceil(n / 3)


def test_invariant_report_dict():
    G = build_group(Symmetric(3))
    report = invariant_report(build_graph(G, "power"), G, PerfectnessParams(samples=10))
    d = report.as_dict()
    assert (d["omega"], d["chi"], d["gamma"], d["diameter"], d["components"]) == (3, 3, 1, 2, 1)
    assert d["perfectness"]["verdict"] == "perfect-sampled"
    disconnected = invariant_report(build_graph(G, "power", "exclude"), probe_perfectness=False).as_dict()
    assert disconnected["diameter"] == "inf" and "perfectness" not in disconnected


@given(st.integers(min_value=2, max_value=60))
@settings(max_examples=30, deadline=None)
def test_cyclic_power_graph_omega_le_chi(n):
    G = build_group(Cyclic(n))
    g = build_graph(G, "power")
    omega = clique_number(g).size
    colors = comparability_coloring(G)
    assert is_proper_coloring(g, colors)
    assert omega == max(colors) == power_omega_chi_formula(G).value

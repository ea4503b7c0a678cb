from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from holokit import named
from holokit.errors import InputError
from holokit.graphs import (
    bowtie,
    complete_minus_edge,
    connected_graphs,
    elimination_tower,
    graph_arrangement,
    has_k4,
    is_closed_subgraph,
    triangles,
    wheel,
)
from holokit.holonomy import (
    DecompositionReport,
    HolonomyPresentation,
    decomposability,
    exponent_scan,
    graded_dims,
    graph_holonomy,
    holonomy_presentation,
    ideal_I_dims,
    ideal_J_dims,
    is_closed,
    kohno_series,
    lcs_series,
    lfs_series,
    local_dims,
    partition_report,
    subalgebra_ideal_dims,
    tower_series,
    verify_tower,
)
from holokit.lie import LiePresentation
from holokit.matroid import Graph, SetArrangement, complete_graph
from holokit.series import witt
from corpus import corpus_arrangements

ARRS = corpus_arrangements()
IDS = [n for n, _ in ARRS]


def h_of(name):
    return holonomy_presentation(named.catalog(name))


# -- presentation -----------------------------------------------------------

def test_empty_arrangement_presentation():
    h = holonomy_presentation(SetArrangement.from_blocks("1234", []))
    assert len(h.presentation.relations) == comb(4, 2)
    assert all(len(r) == 1 for r in h.presentation.relations)


def test_single_block_presentation():
    h = holonomy_presentation(SetArrangement.from_blocks("123", ["123"]))
    p = h.presentation
    assert p.relations == (
        (((0, 1), 1), ((0, 2), 1)),
        (((0, 1), -1), ((1, 2), 1)),
        (((0, 2), -1), ((1, 2), -1)),
    )
    assert [p.relation_text(k) for k in range(3)] == ["[1,2] + [1,3]", "-[1,2] + [2,3]", "-[1,3] - [2,3]"]
    assert h.block_index == {("1", "2", "3"): (0, 1, 2)}


def test_fano_presentation():
    h = h_of("fano")
    assert len(h.presentation.relations) == 21
    assert all(len(r) == 2 for r in h.presentation.relations)


@pytest.mark.parametrize("name,a", ARRS, ids=IDS)
def test_relation_count(name, a):
    h = holonomy_presentation(a)
    inside = sum(comb(len(b), 2) for b in a.blocks)
    assert len(h.presentation.relations) == sum(len(b) for b in a.blocks) + comb(len(a.elements), 2) - inside


def test_presentation_json_round_trip():
    h = h_of("roos")
    assert HolonomyPresentation.from_json(h.to_json()) == h
    bad = h.to_json()
    bad["presentation"] = LiePresentation(8).to_json()
    with pytest.raises(InputError):
        HolonomyPresentation.from_json(bad)


# -- local algebras ---------------------------------------------------------

def test_local_dims_examples():
    assert list(local_dims(3, 6)) == [3, 1, 2, 3, 6, 9]
    assert list(local_dims(4, 6)) == [4, 3, 8, 18, 48, 116]
    assert list(local_dims(("a", "b", "c", "d", "e"), 1)) == [5]
    with pytest.raises(InputError):
        local_dims(2, 3)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_local_dims_match_engine(k):
    elems = [str(i) for i in range(k)]
    h = holonomy_presentation(SetArrangement.from_blocks(elems, [elems]))
    assert graded_dims(h, 5) == local_dims(k, 5)


# -- closed subsets ---------------------------------------------------------

def test_is_closed_examples():
    fano = named.catalog("fano")
    assert is_closed(fano.blocks, fano)
    assert is_closed([("1", "2", "3")], fano)
    k4 = named.catalog("k4")
    for t in k4.blocks:
        assert is_closed([t], k4)
    ex = named.catalog("example7")
    assert not is_closed([("1", "5", "6"), ("2", "5", "7")], ex)


@st.composite
def graph_and_triangles(draw):
    n = draw(st.integers(3, 6))
    verts = [str(i) for i in range(n)]
    pairs = list(combinations(verts, 2))
    g = Graph.from_edges(draw(st.lists(st.sampled_from(pairs), unique=True, min_size=3)), verts)
    tris = triangles(g)
    chosen = draw(st.lists(st.sampled_from(tris), unique=True)) if tris else []
    return g, chosen


@given(graph_and_triangles())
def test_graph_closedness_matches_block_closedness(data):
    g, chosen = data
    a = graph_arrangement(g)
    supp = set(a.support(chosen))
    inside = [t for t in triangles(g) if set(t) <= supp]
    block = is_closed(chosen, a)
    edge = is_closed_subgraph(g, supp) and sorted(inside) == sorted(chosen)
    assert block == edge


# -- decomposability and the ideals ----------------------------------------

def test_decomposability_examples():
    single = holonomy_presentation(SetArrangement.from_blocks("123", ["123"]))
    assert decomposability(single).decomposable
    k4 = decomposability(h_of("k4"))
    assert not k4.decomposable and k4.witnesses
    assert decomposability(graph_holonomy(bowtie())).decomposable


def test_report_json_round_trip():
    rep = decomposability(h_of("k4"))
    assert DecompositionReport.from_json(rep.to_json()) == rep


def test_ideal_I_examples():
    assert list(ideal_I_dims(h_of("k4"), 3)) == [0, 0, 2]
    assert list(ideal_I_dims(h_of("roos"), 6)) == [0, 0, 1, 1, 1, 1]
    assert list(ideal_I_dims(graph_holonomy(bowtie()), 5)) == [0] * 5
    with pytest.raises(InputError):
        ideal_I_dims(h_of("k4"), 1)


def test_ideal_J():
    fano = h_of("fano")
    singletons = [[b] for b in fano.arrangement.blocks]
    assert ideal_J_dims(fano, singletons, 5) == ideal_I_dims(fano, 5)
    assert list(ideal_J_dims(fano, [fano.arrangement.blocks], 5)) == [0] * 5
    with pytest.raises(InputError, match="not closed"):
        ideal_J_dims(fano, [fano.arrangement.blocks[:1], fano.arrangement.blocks[1:]], 4)
    with pytest.raises(InputError, match="in no part"):
        ideal_J_dims(fano, [fano.arrangement.blocks[:1]], 4)


def test_ideal_J_two_k4s_at_a_vertex():
    # two K4 sharing a vertex: each K4's triangles form a closed part
    left = [(a, b) for a, b in combinations("1234", 2)]
    right = [(a, b) for a, b in combinations("4567", 2)]
    g = Graph.from_edges(left + right)
    h = graph_holonomy(g)
    parts = [[t for t in h.arrangement.blocks if set("".join(t)) <= set("1234-")],
             [t for t in h.arrangement.blocks if set("".join(t)) <= set("4567-")]]
    assert list(ideal_J_dims(h, parts, 5)) == [0] * 5
    rep = partition_report(h, parts)
    assert rep.decomposable and rep.consistent
    assert any(ideal_I_dims(h, 4))


def test_subalgebra_ideal():
    fano = h_of("fano")
    dims = subalgebra_ideal_dims(fano, ["1", "2", "3"], 5)
    assert dims[1] == 4
    assert list(dims)[1:] == [witt(4, d) for d in range(2, 6)]
    single = holonomy_presentation(SetArrangement.from_blocks("1234", ["1234"]))
    assert list(subalgebra_ideal_dims(single, "1234", 4)) == [0] * 4
    with pytest.raises(InputError):
        subalgebra_ideal_dims(fano, ["1", "2", "4"], 3)


# -- series predictions -----------------------------------------------------

def test_kohno_examples():
    assert list(kohno_series(2, 4)) == [1] * 5
    assert list(kohno_series(4, 3)) == [1, 6, 25, 90]
    assert list(kohno_series(3, 3)) == [1, 3, 7, 15]
    with pytest.raises(InputError):
        kohno_series(1, 3)


def test_verify_tower_examples():
    assert verify_tower(h_of("fano"), [4, 2, 1], 5).ok
    assert verify_tower(h_of("k4"), [3, 2, 1], 5).ok
    bad = verify_tower(h_of("nonfano"), [4, 2, 1], 5)
    assert not bad.ok and bad.first_mismatch == 2
    with pytest.raises(InputError):
        verify_tower(h_of("fano"), [4, 2], 3)


def test_exponent_scan():
    assert exponent_scan([]) == []
    rep = exponent_scan([("K5", complete_graph(5)), ("W4", wheel(4))])
    assert rep[0].exponents == ((1, 1), (2, 1), (3, 1), (4, 1)) and not rep[0].flagged
    assert rep[1].flagged == ((1, 0),) and not rep[1].negative
    assert not any(e.negative for e in exponent_scan(connected_graphs(5)))


# -- corpus invariants ------------------------------------------------------

@pytest.mark.parametrize("name,a", ARRS, ids=IDS)
def test_arrangement_invariants(name, a):
    h = holonomy_presentation(a)
    D = 4 if len(a.elements) > 8 else 5
    eta = graded_dims(h, D)
    locs = [local_dims(b, D) for b in a.blocks]
    for d in range(2, D + 1):
        assert eta[d] >= sum(l[d] for l in locs)
    assert eta[2] == sum(comb(len(b) - 1, 2) for b in a.blocks)
    rep = decomposability(h, D)
    assert rep.consistent
    for b in a.blocks:
        sub = subalgebra_ideal_dims(h, b, D)
        loc = local_dims(b, D)
        assert all(sub[d] + loc[d] == eta[d] for d in range(1, D + 1))


@pytest.mark.parametrize("g", connected_graphs(5), ids=lambda g: f"{len(g.vertices)}v{len(g.edges)}e")
def test_graph_invariants(g):
    h = graph_holonomy(g)
    assert decomposability(h).decomposable == (not has_k4(g))
    try:
        ranks = elimination_tower(g)
    except Exception:
        ranks = None
    if ranks is not None:
        assert verify_tower(h, ranks, 5).ok
        assert tower_series(ranks, 5) == lfs_series(g, 5)


def _split(g, v):
    adj = g.adjacency()
    nb = adj[v]
    V = [e for e in g.edges if v in e[:2]]
    K = [e for e in g.edges if e[0] in nb and e[1] in nb]
    g1 = Graph(tuple(x for x in g.vertices if x == v or x in nb), tuple(V + K))
    g2 = Graph(tuple(x for x in g.vertices if x != v), tuple(e for e in g.edges if v not in e[:2]))
    k = Graph(tuple(x for x in g.vertices if x in nb), tuple(K))
    return g1, g2, k


@pytest.mark.parametrize("g", [g for g in connected_graphs(5) if len(g.vertices) >= 3] + [bowtie()],
                         ids=lambda g: f"{len(g.vertices)}v{len(g.edges)}e")
def test_vertex_split_pushout(g):
    for v in g.vertices:
        g1, g2, k = _split(g, v)
        assert is_closed_subgraph(g, g1.edge_labels) and is_closed_subgraph(g, g2.edge_labels)
        assert is_closed_subgraph(g1, k.edge_labels) and is_closed_subgraph(g2, k.edge_labels)
        dg, d1, d2, dk = (graded_dims(graph_holonomy(x), 5) for x in (g, g1, g2, k))
        assert all(dg[d] == d1[d] + d2[d] - dk[d] for d in range(1, 6))


def test_lfs_series_matches_engine_on_extras():
    for g in (bowtie(), wheel(4), complete_minus_edge(5)):
        assert lcs_series(graph_holonomy(g), 5) == lfs_series(g, 5)

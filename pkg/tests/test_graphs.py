import json
from collections import Counter

import pytest

from redwords import (
    Permutation,
    Word,
    all_permutations,
    bfs_distance,
    build_graph,
    column_inversions,
    diameter,
    export,
    graph_from_json,
    is_connected,
    min_braid_count,
    min_inv_w0,
    super_tableau,
    super_word,
    to_dot,
    to_json,
    validate_ranked_poset,
    word_inversions,
)

from conftest import (
    EDGE_GRID_42153,
    EDGE_GRID_4321,
    TABLEAU_GRID_4321,
    WORD_GRID_42153,
    WORD_GRID_4321,
    grid_edges,
    tableau_4321,
)


def _key(element):
    return element.entries if hasattr(element, "entries") else tuple(element)


def edge_triples(g):
    """Graph edges as (element, element, label) with a canonical pair order."""
    return normalize(
        (g.vertices[u], g.vertices[v], label) for u, v, label in g.edges
    )


def normalize(triples):
    out = set()
    for a, b, label in triples:
        if _key(b) < _key(a):
            a, b = b, a
        out.add((a, b, label))
    return out


def test_word_graph_42153_matches_reference_figure():
    g = build_graph(Permutation([4, 2, 1, 5, 3]), "words")
    assert len(g.vertices) == 11
    assert len(g.edges) == 13
    assert edge_triples(g) == normalize(grid_edges(WORD_GRID_42153, EDGE_GRID_42153))
    labels = Counter(label for _, _, label in g.edges)
    assert labels == Counter(
        ["c4", "b3", "c3", "c4", "c1", "c2", "c3", "c1", "c4", "b4", "c2", "c1", "c3"]
    )


def test_word_graph_4321_matches_reference_figure():
    g = build_graph(Permutation([4, 3, 2, 1]), "words")
    assert len(g.vertices) == 16
    assert len(g.edges) == 18
    assert edge_triples(g) == normalize(grid_edges(WORD_GRID_4321, EDGE_GRID_4321))


def test_tableau_graph_4321_matches_reference_figure():
    g = build_graph(Permutation([4, 3, 2, 1]), "tableaux")
    assert len(g.vertices) == 16
    assert len(g.edges) == 18
    frozen = grid_edges(TABLEAU_GRID_4321, EDGE_GRID_4321, make=tableau_4321)
    assert edge_triples(g) == normalize(frozen)


def test_identity_graph():
    g = build_graph(Permutation.identity(3), "words")
    assert g.vertices == (Word(),)
    assert g.edges == ()
    assert g.ranks == (0,)
    assert diameter(g) == 0
    results = validate_ranked_poset(g)
    assert all(r.passed for r in results)


def test_vertex_budget():
    with pytest.raises(ValueError):
        build_graph(Permutation([4, 3, 2, 1]), "words", max_vertices=5)
    with pytest.raises(ValueError):
        build_graph(Permutation([4, 3, 2, 1]), "tableaux", max_vertices=5)
    with pytest.raises(ValueError):
        build_graph(Permutation([4, 3, 2, 1]), "chains")


def test_bfs_distance():
    g = build_graph(Permutation([4, 3, 2, 1]), "words")
    rho, sigma = Word([1, 2, 1, 3, 2, 1]), Word([1, 3, 2, 1, 3, 2])
    assert bfs_distance(g, rho, rho) == 0
    assert bfs_distance(g, rho, sigma) == 4
    assert min_braid_count(g, rho, sigma) == 2
    assert min_braid_count(g, rho, rho) == 0
    with pytest.raises(ValueError):
        bfs_distance(g, rho, Word([9, 9]))


def test_distances_equal_inversions():
    for w in all_permutations(4):
        g = build_graph(w, "words")
        pi = super_word(w)
        for rho in g.vertices:
            assert bfs_distance(g, rho, pi) == word_inversions(rho)


def test_braid_counts_equal_column_inversions():
    for w in all_permutations(4):
        g = build_graph(w, "tableaux")
        top = super_tableau(w)
        for t in g.vertices:
            assert min_braid_count(g, t, top) == column_inversions(t)


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 7)])
def test_diameter_small(n, expected):
    g = build_graph(Permutation.longest(n), "words")
    assert diameter(g) == expected == min_inv_w0(n)
    assert diameter(g, w0_shortcut=True) == expected


def test_diameter_shortcut_rejects_other_permutations():
    g = build_graph(Permutation([4, 2, 1, 5, 3]), "words")
    with pytest.raises(ValueError):
        diameter(g, w0_shortcut=True)


def test_connected_and_ranked():
    for w in all_permutations(4):
        for model in ("words", "tableaux"):
            g = build_graph(w, model)
            assert is_connected(g)
            assert all(r.passed for r in validate_ranked_poset(g))


def test_dot_export():
    g = build_graph(Permutation.identity(2), "words")
    dot = to_dot(g)
    assert dot.splitlines()[0] == "graph {"
    assert dot.count(" -- ") == 0
    g5 = build_graph(Permutation([4, 2, 1, 5, 3]), "words")
    dot5 = to_dot(g5)
    labels = Counter()
    for line in dot5.splitlines():
        if " -- " in line:
            labels[line.split('label="')[1].rstrip('"];')] += 1
    assert labels == Counter(
        {"c4": 3, "c1": 3, "c3": 3, "c2": 2, "b3": 1, "b4": 1}
    )


def test_json_round_trip():
    for model in ("words", "tableaux"):
        g = build_graph(Permutation([4, 3, 2, 1]), model)
        text = export(g, "json")
        payload = json.loads(text)
        assert payload["model"] == model
        assert payload["w"] == "4,3,2,1"
        assert len(payload["vertices"]) == 16
        assert len(payload["edges"]) == 18
        assert graph_from_json(text) == g
    with pytest.raises(ValueError):
        export(g, "gexf")

"""Move graphs on reduced words or balanced tableaux: construction, BFS
distances, braid-count minimization over shortest paths, diameter, ranked
poset validation, and DOT/JSON export.

Vertices are deduplicated and ordered by their canonical text forms, never
by structural hashing.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable

from .bijection import Move, tableau_to_word
from .diagrams import Filling, super_tableau
from .perms import Permutation
from .report import CheckResult
from .tableaux import _iter_sbt, psi, tab_inversions
from .words import Word, iter_reduced_words, super_word, word_inversions

Vertex = Word | Filling

DEFAULT_VERTEX_BUDGET = 10**6


class MoveGraph:
    """Undirected simple graph whose edges are single nontrivial moves,
    with a rank (inversion number) per vertex."""

    def __init__(
        self,
        model: str,
        w: Permutation,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple[int, int, str]],
        ranks: Iterable[int],
    ):
        self.model = model
        self.w = w
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        self.edges: tuple[tuple[int, int, str], ...] = tuple(edges)
        self.ranks: tuple[int, ...] = tuple(ranks)
        self._index = {v: k for k, v in enumerate(self.vertices)}
        self._adjacency: list[list[tuple[int, bool]]] = [
            [] for _ in self.vertices
        ]
        for u, v, label in self.edges:
            braid = label.startswith("b")
            self._adjacency[u].append((v, braid))
            self._adjacency[v].append((u, braid))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MoveGraph)
            and self.model == other.model
            and self.w == other.w
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.ranks == other.ranks
        )

    def __repr__(self) -> str:
        return (
            f"MoveGraph(model={self.model!r}, w={self.w}, "
            f"|V|={len(self.vertices)}, |E|={len(self.edges)})"
        )

    def index_of(self, vertex: Vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise ValueError(f"vertex not in graph: {vertex}") from None

    def neighbors(self, idx: int) -> list[tuple[int, bool]]:
        return self._adjacency[idx]

    def element_text(self, idx: int) -> str:
        v = self.vertices[idx]
        return str(v) if isinstance(v, Word) else v.to_text()


def _moves_for(ell: int) -> list[Move]:
    return [Move("c", i) for i in range(1, ell)] + [
        Move("b", i) for i in range(2, ell)
    ]


def build_graph(
    w: Permutation,
    model: str = "words",
    max_vertices: int = DEFAULT_VERTEX_BUDGET,
) -> MoveGraph:
    """Full move graph on R(w) or on the balanced tableaux of w.

    Refuses to enumerate past ``max_vertices``.  Edge labels carry the
    right-to-left index (words) or entry value (tableaux) of the move, so
    the two models are comparable under the matching bijection.
    """
    if model not in ("words", "tableaux"):
        raise ValueError(f"unknown model: {model!r}")
    vertices: list[Vertex] = []
    source = iter_reduced_words(w) if model == "words" else _iter_sbt(w)
    for element in source:
        vertices.append(element)
        if len(vertices) > max_vertices:
            raise ValueError(
                f"vertex budget exceeded: more than {max_vertices} elements"
            )
    if model == "tableaux":
        vertices.sort(key=lambda f: f.entries)
        ranks = [tab_inversions(f) for f in vertices]
    else:
        pi = super_word(w)
        ranks = [word_inversions(word, _super=pi) for word in vertices]

    index = {v: k for k, v in enumerate(vertices)}
    edges: set[tuple[int, int, str]] = set()
    for k, element in enumerate(vertices):
        for move in _moves_for(len(element)):
            other = (
                move.on_word(element) if model == "words" else move.on_tableau(element)
            )
            if other == element:
                continue
            j = index[other]
            edges.add((min(k, j), max(k, j), move.label))
    return MoveGraph(model, w, vertices, sorted(edges), ranks)


def _bfs(g: MoveGraph, source: int) -> list[int]:
    dist = [-1] * len(g.vertices)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, _ in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_distance(g: MoveGraph, a: Vertex, b: Vertex) -> int:
    """Shortest-path length between two vertices."""
    ia, ib = g.index_of(a), g.index_of(b)
    dist = _bfs(g, ia)
    if dist[ib] < 0:
        raise ValueError("vertices are not connected")
    return dist[ib]


def min_braid_count(g: MoveGraph, a: Vertex, b: Vertex) -> int:
    """Minimum number of braid-labeled edges over all shortest paths."""
    ia, ib = g.index_of(a), g.index_of(b)
    dist = _bfs(g, ia)
    if dist[ib] < 0:
        raise ValueError("vertices are not connected")
    order = sorted(range(len(g.vertices)), key=lambda v: dist[v])
    best = [0] * len(g.vertices)
    for v in order:
        if v == ia or dist[v] < 0:
            continue
        best[v] = min(
            best[u] + (1 if braid else 0)
            for u, braid in g.neighbors(v)
            if dist[u] == dist[v] - 1
        )
    return best[ib]


def is_connected(g: MoveGraph) -> bool:
    if not g.vertices:
        return True
    return all(d >= 0 for d in _bfs(g, 0))


def diameter(g: MoveGraph, w0_shortcut: bool = False) -> int:
    """Largest BFS distance between any two vertices.

    With ``w0_shortcut`` (valid for the longest permutation only) the
    all-pairs sweep is replaced by one BFS between the super element and
    its complement, which attains the diameter.
    """
    if w0_shortcut:
        if g.w != Permutation.longest(g.w.n):
            raise ValueError("shortcut applies only to the longest permutation")
        top = super_tableau(g.w)
        bottom = psi(top)
        if g.model == "tableaux":
            return bfs_distance(g, top, bottom)
        return bfs_distance(g, super_word(g.w), tableau_to_word(bottom))
    best = 0
    for source in range(len(g.vertices)):
        dist = _bfs(g, source)
        if min(dist) < 0:
            raise ValueError("graph is not connected")
        best = max(best, max(dist))
    return best


def validate_ranked_poset(g: MoveGraph) -> list[CheckResult]:
    """Rank sanity for the move graph: edges step ranks by one, a single
    rank-zero vertex exists, covers go down, and rank equals the BFS
    distance to the rank-zero vertex."""
    results = []

    bad_edge = next(
        (
            (u, v)
            for u, v, _ in g.edges
            if abs(g.ranks[u] - g.ranks[v]) != 1
        ),
        None,
    )
    results.append(
        CheckResult(
            "edges_step_rank_by_one",
            bad_edge is None,
            None if bad_edge is None else f"edge {bad_edge}",
        )
    )

    zeros = [k for k, r in enumerate(g.ranks) if r == 0]
    results.append(
        CheckResult(
            "unique_rank_zero",
            len(zeros) == 1,
            None if len(zeros) == 1 else f"rank-0 vertices: {len(zeros)}",
        )
    )

    uncovered = next(
        (
            k
            for k, r in enumerate(g.ranks)
            if r > 0 and not any(g.ranks[v] == r - 1 for v, _ in g.neighbors(k))
        ),
        None,
    )
    results.append(
        CheckResult(
            "covers_descend",
            uncovered is None,
            None if uncovered is None else f"vertex {uncovered}",
        )
    )

    if len(zeros) == 1:
        dist = _bfs(g, zeros[0])
        mismatch = next(
            (k for k in range(len(g.vertices)) if dist[k] != g.ranks[k]), None
        )
        results.append(
            CheckResult(
                "rank_is_distance_to_zero",
                mismatch is None,
                None if mismatch is None else f"vertex {mismatch}",
            )
        )
    else:
        results.append(
            CheckResult("rank_is_distance_to_zero", False, "no unique rank-0 vertex")
        )
    return results


def to_dot(g: MoveGraph) -> str:
    """Graphviz text: undirected, nodes annotated with rank, edges with the
    move label."""
    lines = ["graph {"]
    for k in range(len(g.vertices)):
        lines.append(
            f'  {k} [label="{g.element_text(k)}" rank={g.ranks[k]}];'
        )
    for u, v, label in g.edges:
        lines.append(f'  {u} -- {v} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(g: MoveGraph) -> str:
    payload = {
        "model": g.model,
        "w": str(g.w),
        "vertices": [
            {"id": k, "elem": g.element_text(k), "rank": g.ranks[k]}
            for k in range(len(g.vertices))
        ],
        "edges": [{"u": u, "v": v, "move": label} for u, v, label in g.edges],
    }
    return json.dumps(payload, indent=2)


def export(g: MoveGraph, format: str) -> str:
    if format == "dot":
        return to_dot(g)
    if format == "json":
        return to_json(g)
    raise ValueError(f"unknown format: {format!r}")


def graph_from_json(text: str) -> MoveGraph:
    """Rebuild a graph from its JSON export."""
    payload = json.loads(text)
    model = payload["model"]
    w = Permutation.from_text(payload["w"])
    parse = Word.from_text if model == "words" else Filling.from_text
    records = sorted(payload["vertices"], key=lambda rec: rec["id"])
    vertices = [parse(rec["elem"]) for rec in records]
    ranks = [rec["rank"] for rec in records]
    edges = [(e["u"], e["v"], e["move"]) for e in payload["edges"]]
    return MoveGraph(model, w, vertices, edges, ranks)

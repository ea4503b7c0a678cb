"""Graph arrangements: cliques, triangles, simplicial elimination, small-graph corpora."""
from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Iterable

from .errors import NotChordalError
from .matroid import Graph, SetArrangement


def maximal_cliques(g: Graph) -> list[tuple[str, ...]]:
    """Maximal cliques by Bron-Kerbosch with Tomita pivoting, in vertex order."""
    adj = g.adjacency()
    order = {v: i for i, v in enumerate(g.vertices)}
    out: list[tuple[str, ...]] = []

    def expand(r: list[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r, key=order.__getitem__)))
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -order[u]))
        for v in sorted(p - adj[pivot], key=order.__getitem__):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(g.vertices), set())
    return sorted(out, key=lambda c: [order[v] for v in c])


def clique_counts(g: Graph) -> list[int]:
    """``counts[k]`` = number of complete subgraphs on k vertices (k = 0..ω).

    Every clique is enumerated once, by extending with higher-ordered common
    neighbours only.
    """
    adj = g.adjacency()
    order = {v: i for i, v in enumerate(g.vertices)}
    counts = [1]

    def grow(size: int, cand: list[str]) -> None:
        if len(counts) <= size:
            counts.append(0)
        counts[size] += 1
        for k, v in enumerate(cand):
            grow(size + 1, [w for w in cand[k + 1:] if w in adj[v]])

    verts = sorted(g.vertices, key=order.__getitem__)
    for k, v in enumerate(verts):
        grow(1, [w for w in verts[k + 1:] if w in adj[v]])
    return counts


def kappa(g: Graph) -> list[int]:
    """``kappa[s]`` = number of complete subgraphs on s + 1 vertices, s = 0..ω-1."""
    return clique_counts(g)[1:]


def has_k4(g: Graph) -> bool:
    counts = clique_counts(g)
    return len(counts) > 4 and counts[4] > 0


def triangles(g: Graph) -> list[tuple[str, str, str]]:
    """Triangles as edge-label triples, ordered by their vertex triples."""
    adj = g.adjacency()
    lab = g.edge_between()
    out = []
    for a, b, c in combinations(g.vertices, 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            out.append((lab[frozenset((a, b))], lab[frozenset((a, c))], lab[frozenset((b, c))]))
    return out


def graph_arrangement(g: Graph) -> SetArrangement:
    """The set-arrangement on the edges whose blocks are the triangles."""
    return SetArrangement.from_blocks(g.edge_labels, triangles(g))


def is_closed_subgraph(g: Graph, edges: Iterable[str]) -> bool:
    """True when every triangle with two edges in ``edges`` has its third there too."""
    h = set(edges)
    for tri in triangles(g):
        if sum(e in h for e in tri) == 2:
            return False
    return True


def is_simplicial(adj: dict[str, set[str]], v: str) -> bool:
    return all(b in adj[a] for a, b in combinations(sorted(adj[v]), 2))


def elimination_tower(g: Graph) -> list[int]:
    """Ranks of the free Lie algebras from repeated simplicial-vertex removal.

    At each step the lowest-ordered simplicial vertex is removed and its
    current degree recorded; isolated vertices contribute nothing.
    """
    adj = {v: set(n) for v, n in g.adjacency().items()}
    remaining = list(g.vertices)
    ranks = []
    while remaining:
        for v in remaining:
            if is_simplicial(adj, v):
                break
        else:
            raise NotChordalError(
                f"no simplicial vertex among {remaining}: the graph is not chordal", remaining)
        if adj[v]:
            ranks.append(len(adj[v]))
        for u in adj.pop(v):
            adj[u].discard(v)
        remaining.remove(v)
    return ranks


def lfs_exponents(g: Graph) -> list[tuple[int, int]]:
    """``(j, e_j)`` with e_j = Σ_{s>=j} (-1)^(s-j) C(s, j) κ_s, for 1 <= j <= ω - 1."""
    k = kappa(g)
    top = len(k) - 1
    return [(j, sum((-1) ** (s - j) * comb(s, j) * k[s] for s in range(j, top + 1)))
            for j in range(1, top + 1)]


# ---------------------------------------------------------------------------
# corpora


def _canonical(n: int, edges: frozenset) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def _connected(n: int, edges) -> bool:
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for u, v in edges:
            for x, y in ((u, v), (v, u)):
                if x == a and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == n


def connected_graphs(max_vertices: int) -> list[Graph]:
    """All connected simple graphs on 1..max_vertices vertices up to isomorphism.

    Exhaustive with a permutation canonical form, so only sensible for
    ``max_vertices <= 6``.
    """
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for m in range(len(pairs) + 1):
            for es in combinations(pairs, m):
                if not _connected(n, es):
                    continue
                key = _canonical(n, frozenset(es))
                if key in seen:
                    continue
                seen.add(key)
                verts = [str(i + 1) for i in range(n)]
                out.append(Graph.from_edges([(verts[a], verts[b]) for a, b in key], verts))
    return out


def bowtie() -> Graph:
    """Two triangles sharing one vertex."""
    return Graph.from_edges([("1", "2"), ("1", "3"), ("2", "3"), ("3", "4"), ("3", "5"), ("4", "5")])


def wheel(k: int) -> Graph:
    """Hub ``0`` joined to a k-cycle ``1..k``."""
    rim = [str(i) for i in range(1, k + 1)]
    edges = [("0", v) for v in rim] + [(rim[i], rim[(i + 1) % k]) for i in range(k)]
    return Graph.from_edges(edges, ["0"] + rim)


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge 1-2 removed."""
    verts = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges([(u, v) for u, v in combinations(verts, 2) if (u, v) != ("1", "2")], verts)


def cycle(k: int) -> Graph:
    verts = [str(i) for i in range(1, k + 1)]
    return Graph.from_edges([(verts[i], verts[(i + 1) % k]) for i in range(k)], verts)


def path(k: int) -> Graph:
    """Path with k edges."""
    verts = [str(i) for i in range(1, k + 2)]
    return Graph.from_edges([(verts[i], verts[i + 1]) for i in range(k)], verts)

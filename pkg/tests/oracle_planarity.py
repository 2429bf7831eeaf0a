"""Independent brute-force planarity oracle for the test suite.

A graph is planar iff no sequence of edge contractions produces a graph with
a 5-clique or a complete-bipartite 3+3 subgraph. Contractions plus subgraph
tests cover arbitrary minors because clique/bipartite detection already
quantifies over vertex and edge deletions. Exponential, memoized on canonical
key; intended for graphs with at most 7 vertices.
"""

from itertools import combinations

from fixchain.canon import canonical_key
from fixchain.graph import Graph


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Merge v into u (uv must be an edge), dropping parallels and loops."""
    edges = set()
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            edges.add((min(a2, b2), max(a2, b2)))
    keep = [x for x in range(g.n) if x != v]
    remap = {x: i for i, x in enumerate(keep)}
    return Graph.from_edges(g.n - 1, [(remap[a], remap[b]) for a, b in edges])


def _has_clique(g: Graph, size: int) -> bool:
    if g.n < size:
        return False
    for combo in combinations(range(g.n), size):
        if all(g.has_edge(a, b) for a, b in combinations(combo, 2)):
            return True
    return False


def _has_k33_subgraph(g: Graph) -> bool:
    if g.n < 6:
        return False
    for left in combinations(range(g.n), 3):
        rest = [x for x in range(g.n) if x not in left]
        for right in combinations(rest, 3):
            if all(g.has_edge(a, b) for a in left for b in right):
                return True
    return False


_memo: dict[tuple[int, int], bool] = {}


def _has_forbidden_minor(g: Graph) -> bool:
    key = (g.n, canonical_key(g))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    found = _has_clique(g, 5) or _has_k33_subgraph(g)
    if not found:
        for u, v in g.edges():
            if _has_forbidden_minor(_contract(g, u, v)):
                found = True
                break
    _memo[key] = found
    return found


def oracle_is_planar(g: Graph) -> bool:
    if g.n <= 4:
        return True
    return not _has_forbidden_minor(g)

"""Built-in graphs: generic builders plus the named fixture library.

Fixture names are part of the CLI contract (``fixture:<name>``). Each entry
documents its structure; several reproduce small configurations where color
fixation phenomena are known to occur.
"""

from __future__ import annotations

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(*sizes: int) -> Graph:
    parts: list[list[int]] = []
    base = 0
    for s in sizes:
        parts.append(list(range(base, base + s)))
        base += s
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    return Graph.from_edges(base, edges)


def wheel(rim: int) -> Graph:
    """Cycle of length ``rim`` plus a hub adjacent to every rim vertex."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(rim, i) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between the two sides."""
    off = g.n
    edges = list(g.edges())
    edges += [(u + off, v + off) for u, v in h.edges()]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def mycielski(g: Graph) -> Graph:
    """Mycielski construction: raises the chromatic number, preserves triangle-freeness."""
    n = g.n
    edges = list(g.edges())
    for v in range(n):
        edges += [(n + v, u) for u in g.neighbors(v)]
        edges.append((n + v, 2 * n))
    return Graph.from_edges(2 * n + 1, edges)


def stacked_triangulation(inserts: list[tuple[int, int, int]]) -> Graph:
    """Planar 3-tree: triangle 0,1,2 plus one vertex per insert, joined to its face."""
    n = 3
    edges = [(0, 1), (0, 2), (1, 2)]
    for face in inserts:
        edges += [(n, f) for f in face]
        n += 1
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------
# named fixtures
# ----------------------------------------------------------------------

def fig1() -> Graph:
    """Triangle {0,1,2} with two non-adjacent apexes 3,4 joined to all of it.

    The unique non-adjacent pair {3,4} is color identical at palette 4, forms
    the only fixation chain, and is not joinable (the join would be K5).
    """
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2),
                                (3, 0), (3, 1), (3, 2),
                                (4, 0), (4, 1), (4, 2)])


def fig2_left() -> Graph:
    """P3: 2-chromatic; every edge is a fixation embrace of its two endpoints."""
    return path(3)


def fig2_middle() -> Graph:
    """3-chromatic gadget where 0 and 1 are non-adjacent yet never share a color.

    Vertices 3,4 are adjacent and both joined to 0 and to 5, forcing
    color(0) == color(5); the edge 5-1 then forces color(0) != color(1).
    Vertex 2 is adjacent to exactly 0 and 1, so ({0,1},{2}) is a fixation
    pair at palette 3 but not an embrace (the induced {0,1} is edgeless).
    """
    return Graph.from_edges(6, [(3, 4), (0, 3), (0, 4), (5, 3), (5, 4),
                                (1, 5), (0, 2), (1, 2)])


def fig2_right() -> Graph:
    """K4: two disjoint edges joined completely; also a triangle plus an apex."""
    return complete(4)


def fig3() -> Graph:
    """Profile fixture: reference triangle {0,1,2}, pinned apex 3, loose triangle {4,5,6}.

    Vertex 3 dominates the reference and is forced to the fourth color; the
    triangle {4,5,6} avoids that color through 3 and is partially pinned by
    the edges 0-5 and 1-6, leaving profiles {0,1,2}, {1,2}, {0,2} relative to
    the reference, so the triangle is fixed as a whole but not pointwise.
    """
    return Graph.from_edges(7, [(0, 1), (0, 2), (1, 2),
                                (0, 3), (1, 3), (2, 3),
                                (4, 5), (4, 6), (5, 6),
                                (3, 4), (3, 5), (3, 6),
                                (0, 5), (1, 6)])


def fig4_bottom_left() -> Graph:
    """Planar 3-tree on 7 vertices (repeated stacking over the edge 1-2)."""
    return stacked_triangulation([(0, 1, 2), (1, 2, 3), (1, 2, 4), (1, 2, 5)])


def fig4_bottom_middle() -> Graph:
    """Planar 3-tree on 6 vertices (one stack in each face at vertex 3)."""
    return stacked_triangulation([(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def fig4_bottom_right() -> Graph:
    """Planar 3-tree on 6 vertices (repeated stacking over the edge 0-1)."""
    return stacked_triangulation([(0, 1, 2), (0, 1, 3), (0, 1, 4)])


def fig7() -> Graph:
    """Two disjoint triangles with overlapping dominators: one chain of three vertices.

    Vertex 6 dominates triangle {0,1,2}, vertex 8 dominates triangle {3,4,5},
    and vertex 7 dominates both, so 6, 7, 8 are the vertex nodes of a single
    fixation chain. Planar and 4-chromatic; no vertex-node pair is joinable.
    """
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    edges += [(6, i) for i in (0, 1, 2)]
    edges += [(7, i) for i in (0, 1, 2, 3, 4, 5)]
    edges += [(8, i) for i in (3, 4, 5)]
    return Graph.from_edges(9, edges)


def grotzsch() -> Graph:
    """Mycielski of C5: triangle-free, non-planar, chromatic number 4."""
    return mycielski(cycle(5))


def k5() -> Graph:
    return complete(5)


def octahedron() -> Graph:
    """K2,2,2: maximal planar; the three non-adjacent pairs are not joinable."""
    return complete_multipartite(2, 2, 2)


FIXTURES = {
    "fig1": fig1,
    "fig2_left": fig2_left,
    "fig2_middle": fig2_middle,
    "fig2_right": fig2_right,
    "fig3": fig3,
    "fig4_bottom_left": fig4_bottom_left,
    "fig4_bottom_middle": fig4_bottom_middle,
    "fig4_bottom_right": fig4_bottom_right,
    "fig7": fig7,
    "grotzsch": grotzsch,
    "k5": k5,
    "octahedron": octahedron,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        known = ", ".join(sorted(FIXTURES))
        raise ValueError(f"unknown fixture {name!r}; available: {known}") from None

"""Canonical labeling for small graphs.

Support machinery for isomorph-free exhaustive generation: an
individualization-refinement search over equitable partitions yielding, for
each graph, a canonical adjacency key (the maximum upper-triangle bitstring
over admissible relabelings). Automorphisms discovered as equal-key leaves
prune sibling branches. Intended for the generation range (n <= 10);
correctness, not asymptotics, is the design goal.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Equitable refinement: split cells by neighbor counts until stable.

    Cell order is a function of (cell index, count signature) only, so two
    isomorphic configurations refine in parallel.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        sig = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                row = adj[v]
                sig[v] = (ci, tuple((row & m).bit_count() for m in masks))
        new_cells: list[tuple[int, ...]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                new_cells.append(tuple(groups[key]))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _adjacency_key(adj: tuple[int, ...], perm: list[int]) -> int:
    """Upper-triangle bitstring of the graph relabeled so perm[i] becomes i."""
    key = 0
    n = len(perm)
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            key = (key << 1) | (row >> perm[j] & 1)
    return key


def canonical_key(g: Graph) -> int:
    """Isomorphism-invariant integer key: max adjacency bitstring over leaves."""
    return key_for_adjacency(g.n, g.adj)


def key_for_adjacency(n: int, adj: tuple[int, ...]) -> int:
    """canonical_key on raw (n, adjacency masks); skips Graph construction."""
    if n <= 1:
        return 0
    initial = _refine(adj, [tuple(range(n))])

    best_key = -1
    best_perm: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def orbit(vstart: int, fixed: list[int]) -> set[int]:
        gens = [a for a in autos if all(a[x] == x for x in fixed)]
        seen = {vstart}
        frontier = [vstart]
        while frontier:
            x = frontier.pop()
            for a in gens:
                y = a[x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def search(cells: list[tuple[int, ...]], fixed: list[int]) -> None:
        nonlocal best_key, best_perm
        if all(len(c) == 1 for c in cells):
            perm = [c[0] for c in cells]
            key = _adjacency_key(adj, perm)
            if key > best_key:
                best_key = key
                best_perm = perm
            elif key == best_key and best_perm is not None:
                sigma = [0] * n
                for i in range(n):
                    sigma[perm[i]] = best_perm[i]
                t = tuple(sigma)
                if any(t[i] != i for i in range(n)) and t not in autos:
                    autos.append(t)
            return
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        tried: list[int] = []
        for v in cells[target]:
            if any(v in orbit(d, fixed) for d in tried):
                continue
            child = (cells[:target] + [(v,)] +
                     [tuple(x for x in cells[target] if x != v)] +
                     cells[target + 1:])
            search(_refine(adj, child), fixed + [v])
            tried.append(v)

    search(initial, [])
    return best_key


def graph_from_key(n: int, key: int) -> Graph:
    """Rebuild the graph whose upper-triangle bitstring (row-major) is key."""
    adj = [0] * n
    bits = n * (n - 1) // 2
    pos = bits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if key >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    return graph_from_key(g.n, canonical_key(g))

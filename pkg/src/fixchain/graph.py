"""Immutable small-graph core.

Graphs are simple and undirected, capped at 64 vertices so adjacency rows fit
in machine-width bitmasks. All mutators return new graphs. The only I/O this
module speaks is the graph6 text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

# An odd cycle is stored as a canonical vertex tuple: lowest vertex first,
# direction chosen so the second entry is smaller than the last.
OddCycle = tuple[int, ...]


class Graph6ParseError(ValueError):
    """Malformed graph6 input; the message names the offending byte offset."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside supported range 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_triangle_free(self) -> bool:
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if v > u and self.adj[u] & self.adj[v]:
                    return False
        return True

    def triangles(self) -> list[tuple[int, int, int]]:
        """All 3-cliques as sorted vertex triples."""
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if v <= u:
                    continue
                for w in _bits(self.adj[u] & self.adj[v]):
                    if w > v:
                        out.append((u, v, w))
        return out

    # ------------------------------------------------------------------
    # derived graphs
    # ------------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with the edge u-v added; errors if it already exists."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"cannot add self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        """New graph without v; remaining vertices are relabeled order-preserving."""
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep)[0]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph plus the old->new vertex mapping."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        remap = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            row = 0
            for u in _bits(self.adj[v]):
                if u in remap:
                    row |= 1 << remap[u]
            adj.append(row)
        return Graph(len(vs), tuple(adj)), remap

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ----------------------------------------------------------------------
# graph6 codec
# ----------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the optional ``>>graph6<<`` header. Raises Graph6ParseError with
    the byte offset of the first offending character.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 input (byte 0)")
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"out-of-range graph6 character at byte {off}")
    pos = 0
    if data[0] == 126:  # long form size prefix
        if len(data) < 4:
            raise Graph6ParseError(f"truncated length prefix at byte {len(data)}")
        if data[1] == 126:
            raise Graph6ParseError("8-byte length prefix at byte 1 exceeds supported sizes")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit (byte 0)")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6ParseError(f"truncated edge data at byte {len(data)}")
    if len(data) - pos > nbytes:
        raise Graph6ParseError(f"trailing garbage at byte {pos + nbytes}")
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            chunk = data[pos + bit // 6] - 63
            if chunk >> (5 - bit % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    # padding bits must be zero
    if nbits % 6:
        last = data[pos + nbytes - 1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6ParseError(f"nonzero padding bits at byte {pos + nbytes - 1}")
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        prefix = [63 + n]
    else:
        prefix = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for c in range(0, len(bits), 6):
        val = 0
        for b in bits[c:c + 6]:
            val = (val << 1) | b
        body.append(63 + val)
    return bytes(prefix + body).decode("ascii")


# ----------------------------------------------------------------------
# joins and odd cycles
# ----------------------------------------------------------------------

def complete_join_exists(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True when every vertex of s is adjacent to every vertex of t.

    The sets must be nonempty and disjoint.
    """
    smask = vertex_mask(s)
    tmask = vertex_mask(t)
    if not smask or not tmask:
        raise ValueError("complete_join_exists requires nonempty sets")
    if smask & tmask:
        raise ValueError("complete_join_exists requires disjoint sets")
    if (smask | tmask) >> g.n:
        raise ValueError("vertex out of range")
    for v in _bits(smask):
        if tmask & ~g.adj[v]:
            return False
    return True


def canonical_cycle(vertices: Iterable[int]) -> OddCycle:
    """Normalize a cyclic vertex sequence: min vertex first, smaller neighbor second."""
    seq = list(vertices)
    if len(seq) != len(set(seq)):
        raise ValueError("cycle repeats a vertex")
    if len(seq) < 3:
        raise ValueError("cycle needs at least 3 vertices")
    start = seq.index(min(seq))
    rot = seq[start:] + seq[:start]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def validate_odd_cycle(g: Graph, cycle: OddCycle) -> None:
    """Check the odd-cycle invariants: odd length >= 3, distinct, consecutive edges."""
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        raise ValueError(f"cycle length {len(cycle)} is not odd and >= 3")
    if len(set(cycle)) != len(cycle):
        raise ValueError("cycle repeats a vertex")
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % len(cycle)]):
            raise ValueError(f"missing cycle edge ({v},{cycle[(i + 1) % len(cycle)]})")


def odd_cycles_dominated_by(g: Graph, v: int, max_len: int | None = None,
                            deadline=None) -> list[OddCycle]:
    """All simple odd cycles whose vertices lie entirely in N(v).

    Cycles need not be induced. Each cycle is reported once in canonical
    rotation (lowest vertex first, smaller second neighbor), sorted by
    (length, vertex tuple). ``max_len`` caps the cycle length.
    """
    g._check_vertex(v)
    hood = g.adj[v]
    members = _bits(hood)
    out: list[OddCycle] = []
    if len(members) < 3:
        return out
    cap = max_len if max_len is not None else len(members)

    for start in members:
        # Enumerate simple paths from `start` using only larger vertices of
        # the neighborhood; closing edge back to `start` completes a cycle.
        allowed = hood & ~((1 << (start + 1)) - 1)
        stack: list[tuple[list[int], int]] = [([start], 1 << start)]
        while stack:
            if deadline is not None:
                deadline.check()
            path, visited = stack.pop()
            last = path[-1]
            if len(path) >= 3 and len(path) % 2 == 1 and g.adj[last] >> start & 1:
                if path[1] < path[-1]:
                    out.append(tuple(path))
            if len(path) >= cap:
                continue
            for nxt in _bits(g.adj[last] & allowed & ~visited):
                stack.append((path + [nxt], visited | 1 << nxt))
    out.sort(key=lambda c: (len(c), c))
    return out

"""Color fixation machinery.

A fixation pair is a pair of disjoint nonempty vertex sets (s, t), completely
joined to each other, whose color sets are disjoint and together exhaust the
palette in every proper k-coloring. Because of the complete join the color
sets are automatically disjoint, so the quantified condition reduces to
``|colors(s) | colors(t)| == k`` in every coloring.

Chains connect vertices through dominated odd cycles: vertex v and odd cycle
C are incident when C lies entirely inside the neighborhood of v. Connected
components of that incidence structure with at least two vertex nodes are the
fixation chains of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations

from .coloring import (UncolorableError, chromatic_number, color_profile,
                       color_tuples, enumerate_colorings, is_critical,
                       is_k_colorable, ColorProfile)
from .deadline import Deadline, check
from .graph import (Graph, OddCycle, _bits, complete_join_exists,
                    odd_cycles_dominated_by)


class FixatorClass(str, Enum):
    """Taxonomy of a directed fixator -> fixee pair by the shape of its sides."""

    ODD_CYCLE_TO_VERTEX = "odd_cycle->vertex"
    EDGE_TO_EDGE = "edge->edge"
    VERTEX_TO_ODD_CYCLE = "vertex->odd_cycle"
    OTHER = "other"


@dataclass(frozen=True)
class FixationPair:
    """Unordered fixation pair, stored with the smaller side (by size, then
    lexicographically) first.

    j is the common size of colors(s) when that size is the same in every
    proper k-coloring, else None. embrace means j is constant, induced(s) is
    j-critical and induced(t) is (k-j)-critical. structural means the induced
    chromatic numbers of the sides already sum to k, which forces the pair
    condition without inspecting colorings.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]
    k: int
    j: int | None
    embrace: bool
    structural: bool

    def flipped(self) -> "FixationPair":
        jj = None if self.j is None else self.k - self.j
        return FixationPair(s=self.t, t=self.s, k=self.k, j=jj,
                            embrace=self.embrace, structural=self.structural)


def _oriented(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (a, b) if (len(a), a) < (len(b), b) else (b, a)


def fixation_pairs(g: Graph, k: int, max_side: int = 4,
                   deadline: Deadline | None = None) -> list[FixationPair]:
    """All fixation pairs of g at palette size k with both sides <= max_side.

    Candidates are the completely joined disjoint set pairs; one canonical
    enumeration pass discards every candidate that fails the palette-exhaustion
    condition in some coloring. Raises UncolorableError when g has no proper
    k-coloring.
    """
    if k < 1:
        raise ValueError("palette size must be at least 1")
    if max_side < 1:
        raise ValueError("max_side must be at least 1")
    n = g.n

    # candidate generation: s, then t among the common neighbors of s
    cands: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for size_s in range(1, min(max_side, n) + 1):
        for s in combinations(range(n), size_s):
            check(deadline)
            common = (1 << n) - 1
            for v in s:
                common &= g.adj[v]
            if not common:
                continue
            pool = _bits(common)
            for size_t in range(1, min(max_side, len(pool)) + 1):
                for t in combinations(pool, size_t):
                    if (len(s), s) < (len(t), t):
                        cands.append((s, t))

    if not cands:
        if not is_k_colorable(g, k, deadline):
            raise UncolorableError(f"graph admits no proper {k}-coloring")
        return []

    # one pass over canonical colorings; track attained |colors(s)| range
    alive: list[list] = [[s, t, k + 1, -1] for s, t in cands]
    saw = False
    for cols in color_tuples(g, k, canonical=True, deadline=deadline):
        saw = True
        cm = [1 << c for c in cols]
        nxt = []
        for rec in alive:
            s, t, lo, hi = rec
            ms = 0
            for v in s:
                ms |= cm[v]
            mt = 0
            for v in t:
                mt |= cm[v]
            if (ms | mt).bit_count() != k:
                continue
            js = ms.bit_count()
            rec[2] = js if js < lo else lo
            rec[3] = js if js > hi else hi
            nxt.append(rec)
        alive = nxt
        if not alive:
            break
    if not saw:
        raise UncolorableError(f"graph admits no proper {k}-coloring")

    pairs = []
    for s, t, lo, hi in alive:
        check(deadline)
        j = lo if lo == hi else None
        ind_s, _ = g.induced_subgraph(s)
        ind_t, _ = g.induced_subgraph(t)
        structural = chromatic_number(ind_s, deadline) + chromatic_number(ind_t, deadline) == k
        embrace = (j is not None
                   and is_critical(ind_s, j, "vertex", deadline)
                   and is_critical(ind_t, k - j, "vertex", deadline))
        pairs.append(FixationPair(s=s, t=t, k=k, j=j,
                                  embrace=embrace, structural=structural))
    pairs.sort(key=lambda p: (p.s, p.t))
    return pairs


def audit_fixation_pair(g: Graph, k: int, s, t,
                        deadline: Deadline | None = None) -> bool:
    """Re-verify the pair condition through the public full enumeration.

    Independent of the candidate/survivor machinery in fixation_pairs: checks
    the complete join explicitly and walks every (not only canonical) coloring
    with plain set arithmetic.
    """
    svs = tuple(sorted(set(s)))
    tvs = tuple(sorted(set(t)))
    if not complete_join_exists(g, svs, tvs):
        return False
    saw = False
    for coloring in enumerate_colorings(g, k, deadline=deadline):
        saw = True
        cs = {coloring.colors[v] for v in svs}
        ct = {coloring.colors[v] for v in tvs}
        if cs & ct or len(cs | ct) != k:
            return False
    if not saw:
        raise UncolorableError(f"graph admits no proper {k}-coloring")
    return True


def _spans_cycle(g: Graph, side: tuple[int, ...]) -> bool:
    """True iff the induced subgraph on side has a Hamiltonian cycle."""
    size = len(side)
    first = side[0]
    for perm in permutations(side[1:]):
        seq = (first,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)):
            return True
    return False


def side_shape(g: Graph, side: tuple[int, ...]) -> str | None:
    """Shape of a pair side: 'vertex', 'edge', 'odd_cycle', or None."""
    if len(side) == 1:
        return "vertex"
    if len(side) == 2:
        return "edge" if g.has_edge(side[0], side[1]) else None
    if len(side) % 2 == 1 and _spans_cycle(g, side):
        return "odd_cycle"
    return None


def classify_pair(g: Graph, fixator: tuple[int, ...],
                  fixee: tuple[int, ...]) -> FixatorClass:
    """Taxonomy class of a directed fixator -> fixee pair."""
    shapes = (side_shape(g, tuple(fixator)), side_shape(g, tuple(fixee)))
    if shapes == ("odd_cycle", "vertex"):
        return FixatorClass.ODD_CYCLE_TO_VERTEX
    if shapes == ("edge", "edge"):
        return FixatorClass.EDGE_TO_EDGE
    if shapes == ("vertex", "odd_cycle"):
        return FixatorClass.VERTEX_TO_ODD_CYCLE
    return FixatorClass.OTHER


def direct_fixator_class(g: Graph, pair: FixationPair) -> FixatorClass:
    """Taxonomy class of pair read as s -> t (s the fixator, t the fixee)."""
    return classify_pair(g, pair.s, pair.t)


def is_fixed_as_whole(g: Graph, k: int, side, reference,
                      profile: ColorProfile | None = None,
                      deadline: Deadline | None = None) -> bool:
    """Whole-set fixation of side relative to a reference clique.

    Requires induced(side) to be critical for its chromatic number j, the
    union of the side's profiles (over reference-fixed colorings) to have
    exactly j colors, and some vertex of the side to attain the whole union.
    """
    svs = tuple(sorted(set(side)))
    if not svs:
        raise ValueError("side must be nonempty")
    if profile is None:
        profile = color_profile(g, k, reference, deadline)
    elif profile.k != k:
        raise ValueError("profile palette disagrees with k")
    ind, _ = g.induced_subgraph(svs)
    j = chromatic_number(ind, deadline)
    if j == 0 or not is_critical(ind, j, "vertex", deadline):
        return False
    union = profile.union_over(svs)
    if len(union) != j:
        return False
    return any(profile.of(v) == union for v in svs)


@dataclass(frozen=True)
class FixationChain:
    """Connected component of the vertex / dominated-odd-cycle incidences.

    vertex_nodes are the dominating vertices, cycle_nodes the dominated odd
    cycles (canonical vertex tuples), links the incidences (v, cycle) of the
    component. Only components with >= 2 vertex nodes are chains.
    """

    vertex_nodes: tuple[int, ...]
    cycle_nodes: tuple[OddCycle, ...]
    links: tuple[tuple[int, OddCycle], ...]


def build_fixation_chains(g: Graph, *, max_cycle_len: int | None = None,
                          fixation_aware: bool = False, k: int | None = None,
                          deadline: Deadline | None = None) -> list[FixationChain]:
    """Fixation chains of g.

    Structural mode (default) links v to every odd cycle inside N(v). With
    fixation_aware=True an incidence survives only when ({v}, cycle vertices)
    actually satisfies the palette-exhaustion condition at palette k (default:
    the chromatic number); that mode raises UncolorableError when g has no
    proper k-coloring.
    """
    incid: list[tuple[int, OddCycle]] = []
    for v in range(g.n):
        for cyc in odd_cycles_dominated_by(g, v, max_cycle_len, deadline):
            incid.append((v, cyc))

    if fixation_aware and incid:
        kk = chromatic_number(g, deadline) if k is None else k
        alive = set(range(len(incid)))
        saw = False
        for cols in color_tuples(g, kk, canonical=True, deadline=deadline):
            saw = True
            cm = [1 << c for c in cols]
            for idx in list(alive):
                v, cyc = incid[idx]
                m = cm[v]
                for x in cyc:
                    m |= cm[x]
                if m.bit_count() != kk:
                    alive.discard(idx)
            if not alive:
                break
        if not saw:
            raise UncolorableError(f"graph admits no proper {kk}-coloring")
        incid = [incid[i] for i in sorted(alive)]

    # union-find over vertex nodes ("v", x) and cycle nodes ("c", cyc)
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v, cyc in incid:
        for node in (("v", v), ("c", cyc)):
            parent.setdefault(node, node)
        union(("v", v), ("c", cyc))

    groups: dict = {}
    for v, cyc in incid:
        groups.setdefault(find(("v", v)), []).append((v, cyc))

    chains = []
    for links in groups.values():
        vs = tuple(sorted({v for v, _ in links}))
        if len(vs) < 2:
            continue
        cycles = tuple(sorted({c for _, c in links}, key=lambda c: (len(c), c)))
        chains.append(FixationChain(
            vertex_nodes=vs,
            cycle_nodes=cycles,
            links=tuple(sorted(links, key=lambda l: (l[0], len(l[1]), l[1])))))
    chains.sort(key=lambda ch: ch.vertex_nodes)
    return chains


def same_chain(g: Graph, u: int, v: int, *, max_cycle_len: int | None = None,
               fixation_aware: bool = False, k: int | None = None,
               deadline: Deadline | None = None) -> bool:
    """True iff u and v are vertex nodes of one and the same fixation chain."""
    if u == v:
        raise ValueError("same_chain expects two distinct vertices")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ValueError(f"vertex {w} out of range for a {g.n}-vertex graph")
    chains = build_fixation_chains(g, max_cycle_len=max_cycle_len,
                                   fixation_aware=fixation_aware, k=k,
                                   deadline=deadline)
    return any(u in ch.vertex_nodes and v in ch.vertex_nodes for ch in chains)

"""Exhaustive proper-coloring engine.

Universal statements ("in every proper k-coloring ...") are decided by
explicit enumeration with backtracking. Vertices are colored in descending
degree order, which keeps the search deterministic and prunes early. An
optional reference clique of k-1 mutually adjacent vertices is fixed to
colors 0..k-2 in list order, collapsing color-permutation symmetry so that
per-vertex attainable-color profiles become informative.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .deadline import Deadline
from .graph import Graph, _bits

ReferenceClique = tuple[int, ...]


class UncolorableError(ValueError):
    """Raised by coloring-quantified operations when no proper k-coloring exists."""


@dataclass(frozen=True)
class Coloring:
    """A proper coloring: colors[v] is the color of vertex v, each in 0..k-1."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        for c in self.colors:
            if not 0 <= c < self.k:
                raise ValueError(f"color {c} outside palette 0..{self.k - 1}")

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Vertex partition induced by the coloring, in a canonical order."""
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            groups.setdefault(c, []).append(v)
        return tuple(sorted(tuple(members) for members in groups.values()))


@dataclass(frozen=True)
class ColorProfile:
    """Per-vertex sets of attainable colors over an enumeration of colorings."""

    k: int
    reference: ReferenceClique | None
    color_sets: tuple[frozenset[int], ...]

    def of(self, v: int) -> frozenset[int]:
        return self.color_sets[v]

    def union_over(self, vertices) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for v in vertices:
            out |= self.color_sets[v]
        return out

    def is_fixed(self, v: int) -> bool:
        """True when v attains exactly one color."""
        return len(self.color_sets[v]) == 1


def validate_reference(g: Graph, k: int, reference: Sequence[int]) -> ReferenceClique:
    """Check that reference is an ordered (k-1)-clique of g."""
    ref = tuple(reference)
    if len(ref) != k - 1:
        raise ValueError(f"reference clique must have exactly k-1={k - 1} vertices, got {len(ref)}")
    if len(set(ref)) != len(ref):
        raise ValueError("reference clique repeats a vertex")
    for v in ref:
        g._check_vertex(v)
    for a, b in combinations(ref, 2):
        if not g.has_edge(a, b):
            raise ValueError(f"reference vertices {a} and {b} are not adjacent")
    return ref


def color_tuples(g: Graph, k: int, *, reference: Sequence[int] | None = None,
                 canonical: bool = False,
                 deadline: Deadline | None = None) -> Iterator[tuple[int, ...]]:
    """Low-level enumeration of proper colorings as vertex-indexed tuples.

    With ``canonical=True`` only one representative per color-permutation
    orbit is produced (colors appear in first-use order along the internal
    vertex ordering); this preserves any color-permutation-invariant
    property. ``canonical`` and ``reference`` are mutually exclusive.
    """
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    if canonical and reference is not None:
        raise ValueError("canonical enumeration and a reference clique are mutually exclusive")
    ref: tuple[int, ...] = ()
    if reference is not None:
        ref = validate_reference(g, k, reference)

    n = g.n
    if n == 0:
        yield ()
        return
    if k == 0:
        return

    rset = set(ref)
    rest = sorted((v for v in range(n) if v not in rset),
                  key=lambda v: (-g.adj[v].bit_count(), v))
    order = list(ref) + rest
    pos_of = {v: i for i, v in enumerate(order)}
    earlier = []
    for i, v in enumerate(order):
        earlier.append([pos_of[u] for u in _bits(g.adj[v]) if pos_of[u] < i])
    nref = len(ref)
    full = (1 << k) - 1

    col = [0] * n
    hi = [-1] * (n + 1)  # hi[i]: max color used among positions < i
    cand = [0] * n

    def allowed(pos: int) -> int:
        forbidden = 0
        for q in earlier[pos]:
            forbidden |= 1 << col[q]
        a = full & ~forbidden
        if pos < nref:
            a &= 1 << pos
        elif canonical:
            a &= (1 << (hi[pos] + 2)) - 1
        return a

    out = [0] * n
    pos = 0
    cand[0] = allowed(0)
    while pos >= 0:
        if deadline is not None:
            deadline.check()
        a = cand[pos]
        if not a:
            pos -= 1
            continue
        low = a & -a
        cand[pos] = a ^ low
        c = low.bit_length() - 1
        col[pos] = c
        hi[pos + 1] = c if c > hi[pos] else hi[pos]
        if pos + 1 == n:
            for i, v in enumerate(order):
                out[v] = col[i]
            yield tuple(out)
            continue
        pos += 1
        cand[pos] = allowed(pos)


def enumerate_colorings(g: Graph, k: int, reference: Sequence[int] | None = None,
                        deadline: Deadline | None = None) -> Iterator[Coloring]:
    """Yield every proper k-coloring of g exactly once, lazily.

    With a reference clique, only colorings assigning color i to reference
    vertex i are produced. Output order is deterministic.
    """
    if k < 1:
        raise ValueError("palette size must be at least 1")
    for cols in color_tuples(g, k, reference=reference, deadline=deadline):
        yield Coloring(cols, k)


def is_k_colorable(g: Graph, k: int, deadline: Deadline | None = None) -> bool:
    return next(color_tuples(g, k, canonical=True, deadline=deadline), None) is not None


def chromatic_number(g: Graph, deadline: Deadline | None = None) -> int:
    """Least k admitting a proper k-coloring: 0 for the empty graph, 1 if edgeless."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        if is_k_colorable(g, k, deadline):
            return k
    raise AssertionError("unreachable: complete graphs are n-colorable")


def color_identical_pairs(g: Graph, k: int,
                          deadline: Deadline | None = None) -> list[tuple[int, int]]:
    """Non-adjacent pairs {u,v} that receive equal colors in every proper k-coloring.

    Raises UncolorableError when g has no proper k-coloring. Enumeration is
    canonical (color identity is invariant under color permutation) and stops
    as soon as the candidate set empties.
    """
    candidates = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    saw_coloring = False
    for cols in color_tuples(g, k, canonical=True, deadline=deadline):
        saw_coloring = True
        candidates = [(u, v) for u, v in candidates if cols[u] == cols[v]]
        if not candidates:
            break
    if not saw_coloring:
        raise UncolorableError(f"graph admits no proper {k}-coloring")
    return candidates


def color_profile(g: Graph, k: int, reference: Sequence[int] | None = None,
                  deadline: Deadline | None = None) -> ColorProfile:
    """Attainable colors per vertex over all proper k-colorings.

    Without a reference clique the profile of every vertex of a k-colorable
    graph is the full palette (color permutations reach every color), so the
    enumeration is skipped after one witness coloring. With a reference the
    profile is accumulated over the reference-fixed enumeration.
    """
    if reference is None:
        if not is_k_colorable(g, k, deadline):
            raise UncolorableError(f"graph admits no proper {k}-coloring")
        return ColorProfile(k=k, reference=None,
                            color_sets=tuple(frozenset(range(k)) for _ in range(g.n)))
    ref = validate_reference(g, k, reference)
    masks = [0] * g.n
    saw = False
    for cols in color_tuples(g, k, reference=ref, deadline=deadline):
        saw = True
        for v, c in enumerate(cols):
            masks[v] |= 1 << c
    if not saw:
        raise UncolorableError(f"graph admits no proper {k}-coloring with the given reference")
    sets = tuple(frozenset(_bits(m)) for m in masks)
    return ColorProfile(k=k, reference=ref, color_sets=sets)


def is_critical(g: Graph, j: int, mode: Literal["vertex", "edge"] = "vertex",
                deadline: Deadline | None = None) -> bool:
    """True iff chromatic_number(g) == j and every deletion (per mode) lowers it."""
    if j < 1:
        raise ValueError("criticality threshold must be at least 1")
    if mode not in ("vertex", "edge"):
        raise ValueError(f"unknown deletion mode {mode!r}")
    if chromatic_number(g, deadline) != j:
        return False
    if mode == "vertex":
        return all(is_k_colorable(g.delete_vertex(v), j - 1, deadline)
                   for v in range(g.n))
    return all(is_k_colorable(g.delete_edge(u, v), j - 1, deadline)
               for u, v in g.edges())


def is_uniquely_k_colorable(g: Graph, k: int,
                            deadline: Deadline | None = None) -> bool:
    """True iff all proper k-colorings induce one and the same vertex partition."""
    first = None
    for cols in color_tuples(g, k, canonical=True, deadline=deadline):
        part = Coloring(cols, k).classes()
        if first is None:
            first = part
        elif part != first:
            return False
    if first is None:
        raise UncolorableError(f"graph admits no proper {k}-coloring")
    return True

"""Planarity and edge joinability.

Two non-adjacent vertices are joinable when the graph stays planar after
adding the edge between them; the question is only posed for planar input
graphs. The planarity decision is delegated to networkx's left-right
planarity test behind cheap edge-count shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .graph import Graph


class NonplanarGraphError(ValueError):
    """Joinability was queried on a non-planar input graph."""


class JoinReason(str, Enum):
    ADJACENT = "adjacent"
    NONPLANAR_AFTER_JOIN = "nonplanar_after_join"
    JOINABLE = "joinable"


@dataclass(frozen=True)
class JoinabilityResult:
    u: int
    v: int
    joinable: bool
    reason: JoinReason


def _to_networkx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    """Planarity of a simple graph."""
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    ok, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return ok


def joinable(g: Graph, u: int, v: int) -> JoinabilityResult:
    """Classify the pair {u,v}: adjacent, joinable, or nonplanar after joining.

    Requires a planar input graph and u != v.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("joinability needs two distinct vertices")
    if not is_planar(g):
        raise NonplanarGraphError("joinability is defined only for planar graphs")
    if g.has_edge(u, v):
        return JoinabilityResult(u, v, False, JoinReason.ADJACENT)
    if is_planar(g.add_edge(u, v)):
        return JoinabilityResult(u, v, True, JoinReason.JOINABLE)
    return JoinabilityResult(u, v, False, JoinReason.NONPLANAR_AFTER_JOIN)

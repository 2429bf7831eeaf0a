"""Corpus campaigns: isomorph-free generation, per-claim falsification checks,
and deterministic structured reports.

Severity contract: ``violations`` are hard assertions (mathematically
guaranteed facts; any entry is an engine defect), ``findings`` record the
outcomes of contested claims and never fail a run. Reports are deterministic
for a fixed corpus and config: result lists are sorted and timing lives in a
single field excluded from the report body.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, replace
from itertools import combinations
from multiprocessing import Pool

from ._version import ENGINE_VERSION
from .canon import graph_from_key, key_for_adjacency
from .coloring import chromatic_number, color_identical_pairs, color_profile
from .deadline import Deadline, GraphTimeout
from .fixation import (FixatorClass, build_fixation_chains, classify_pair,
                       fixation_pairs, is_fixed_as_whole, side_shape)
from .fixtures import grotzsch
from .graph import Graph, parse_graph6, to_graph6
from .planarity import joinable, is_planar

_GEN_CACHE: dict[int, list[Graph]] = {}


def generate_small_graphs(n: int, deadline: Deadline | None = None) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on n vertices.

    Augments every class on n-1 vertices by one new vertex with every possible
    neighborhood and deduplicates by canonical key. Results are cached per n
    and returned sorted by canonical key.
    """
    if not 1 <= n <= 10:
        raise ValueError(f"builtin generation supports 1 <= n <= 10, got {n}")
    cached = _GEN_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 1:
        result = [Graph(1, (0,))]
    else:
        seen: set[int] = set()
        bit = 1 << (n - 1)
        for parent in generate_small_graphs(n - 1, deadline):
            base = list(parent.adj)
            for hood in range(1 << (n - 1)):
                if deadline is not None:
                    deadline.check()
                adj = base + [hood]
                rest = hood
                while rest:
                    low = rest & -rest
                    adj[low.bit_length() - 1] |= bit
                    rest ^= low
                seen.add(key_for_adjacency(n, tuple(adj)))
        result = [graph_from_key(n, key) for key in sorted(seen)]
    _GEN_CACHE[n] = result
    return result


# ----------------------------------------------------------------------
# corpus selection
# ----------------------------------------------------------------------

_PLAIN_FILTERS = ("planar", "connected", "triangle_free")


def _parse_filter(token: str) -> tuple[str, int | None]:
    t = token.strip().lower().replace("-", "_")
    if t in _PLAIN_FILTERS:
        return t, None
    if t.startswith("chromatic="):
        try:
            k = int(t.split("=", 1)[1])
        except ValueError:
            raise ValueError(f"bad chromatic filter {token!r}") from None
        if k < 1:
            raise ValueError("chromatic filter needs a positive number")
        return "chromatic", k
    raise ValueError(f"unknown corpus filter {token!r}")


def _chromatic_from(filters: tuple[str, ...]) -> int | None:
    for token in filters:
        name, val = _parse_filter(token)
        if name == "chromatic":
            return val
    return None


@dataclass(frozen=True)
class CorpusSpec:
    """Graph source plus filters, evaluated left to right per graph.

    Exactly one of builtin_max (all isomorphism classes on 1..builtin_max
    vertices) and path (graph6 file, one graph per line) must be set.
    """

    builtin_max: int | None = None
    path: str | None = None
    filters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if (self.builtin_max is None) == (self.path is None):
            raise ValueError("corpus needs exactly one source: builtin_max or path")
        if self.builtin_max is not None and not 1 <= self.builtin_max <= 10:
            raise ValueError("builtin corpus is capped at 10 vertices")
        normalized = []
        for token in self.filters:
            name, val = _parse_filter(token)
            normalized.append(name if val is None else f"{name}={val}")
        object.__setattr__(self, "filters", tuple(normalized))

    def chromatic_filter(self) -> int | None:
        return _chromatic_from(self.filters)

    def describe(self) -> str:
        src = (f"builtin n<={self.builtin_max}" if self.builtin_max is not None
               else f"file {self.path}")
        return src + (" | " + ", ".join(self.filters) if self.filters else "")

    def graph6_lines(self) -> list[str]:
        """Unfiltered graph source as graph6 strings, validated up front."""
        if self.builtin_max is not None:
            out = []
            for n in range(1, self.builtin_max + 1):
                out.extend(to_graph6(g) for g in generate_small_graphs(n))
            return out
        with open(self.path, encoding="ascii") as fh:
            lines = [line.strip() for line in fh]
        lines = [line for line in lines if line]
        for line in lines:
            parse_graph6(line)
        return lines


def _passes_filters(g: Graph, filters: tuple[str, ...],
                    deadline: Deadline | None) -> bool:
    for token in filters:
        name, val = _parse_filter(token)
        if name == "planar":
            ok = is_planar(g)
        elif name == "connected":
            ok = g.is_connected()
        elif name == "triangle_free":
            ok = g.is_triangle_free()
        else:
            ok = chromatic_number(g, deadline) == val
        if not ok:
            return False
    return True


# ----------------------------------------------------------------------
# configuration and reports
# ----------------------------------------------------------------------

FORMATS = ("human", "structured", "tabular")
DIRECTIONS = ("forward", "converse", "both")


def _jobs_from_env() -> int:
    raw = os.environ.get("FIXCHAIN_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"FIXCHAIN_JOBS must be an integer, got {raw!r}") from None
    return max(1, jobs)


@dataclass(frozen=True)
class Config:
    """Engine knobs shared by the CLI and the harness checks."""

    palette: int | None = None
    max_side: int = 4
    cycle_cap: int | None = None
    timeout_ms: int = 10_000
    jobs: int | None = None  # None: FIXCHAIN_JOBS env var, default 1
    format: str = "human"
    direction: str = "both"

    def __post_init__(self) -> None:
        for name in ("palette", "max_side", "cycle_cap", "timeout_ms", "jobs"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {', '.join(DIRECTIONS)}")

    def effective_jobs(self) -> int:
        return self.jobs if self.jobs is not None else _jobs_from_env()


def _item_sort_key(item: dict) -> tuple:
    return (item.get("graph6", ""), json.dumps(item, sort_keys=True))


@dataclass
class CheckReport:
    check: str
    corpus: str
    scanned: int
    violations: list[dict]
    findings: list[dict]
    timeouts: list[str]
    elapsed_ms: int
    version: str
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def body(self) -> dict:
        """Everything except timing; byte-stable for a fixed corpus + config."""
        return {
            "check": self.check,
            "corpus": self.corpus,
            "scanned": self.scanned,
            "violations": self.violations,
            "findings": self.findings,
            "timeouts": self.timeouts,
            "version": self.version,
            "notes": list(self.notes),
        }

    def findings_json(self) -> bytes:
        return json.dumps(self.findings, sort_keys=True, indent=1).encode("ascii")

    def to_structured(self) -> str:
        doc = self.body()
        doc["elapsed_ms"] = self.elapsed_ms
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_tabular(self) -> str:
        rows = []
        for kind, items in (("violation", self.violations), ("finding", self.findings)):
            for item in items:
                extra = {k: v for k, v in item.items() if k not in ("graph6", "detail")}
                detail = f"{kind}: {item.get('detail', '')}"
                if extra:
                    detail += " " + json.dumps(extra, sort_keys=True, separators=(",", ":"))
                rows.append(f"{item.get('graph6', '')}\t{self.check}\t{detail}")
        for g6 in self.timeouts:
            rows.append(f"{g6}\t{self.check}\ttimeout")
        return "\n".join(rows)

    def to_human(self) -> str:
        lines = [
            f"check:      {self.check}",
            f"corpus:     {self.corpus}",
            f"scanned:    {self.scanned}",
            f"violations: {len(self.violations)}",
        ]
        for item in self.violations:
            lines.append(f"  {item.get('graph6', '')}  {_human_detail(item)}")
        lines.append(f"findings:   {len(self.findings)}")
        for item in self.findings:
            lines.append(f"  {item.get('graph6', '')}  {_human_detail(item)}")
        lines.append(f"timeouts:   {len(self.timeouts)}")
        for g6 in self.timeouts:
            lines.append(f"  {g6}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append(f"elapsed:    {self.elapsed_ms} ms")
        lines.append(f"version:    {self.version}")
        lines.append(f"result:     {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return self.to_structured()
        if fmt == "tabular":
            return self.to_tabular()
        return self.to_human()


def _human_detail(item: dict) -> str:
    extra = {k: v for k, v in item.items() if k not in ("graph6", "detail")}
    detail = str(item.get("detail", ""))
    if extra:
        detail += "  " + json.dumps(extra, sort_keys=True, separators=(",", ":"))
    return detail


# ----------------------------------------------------------------------
# per-graph check bodies
# ----------------------------------------------------------------------

def _theorem1_graph(g: Graph, g6: str, cfg: Config, k: int,
                    deadline: Deadline | None) -> tuple[list, list]:
    violations = []
    for u, v in color_identical_pairs(g, k, deadline):
        if joinable(g, u, v).joinable:
            violations.append({"graph6": g6, "pair": [u, v],
                               "detail": "color-identical pair is joinable"})
    return violations, []


def _lemma1_graph(g: Graph, g6: str, cfg: Config, k: int,
                  deadline: Deadline | None) -> tuple[list, list]:
    findings = []
    pairs = fixation_pairs(g, k, cfg.max_side, deadline)
    sides = sorted({p.s for p in pairs} | {p.t for p in pairs})
    sides = [s for s in sides if len(s) >= 2]
    if not sides:
        return [], []
    refs = [c for c in combinations(range(g.n), k - 1)
            if all(g.has_edge(a, b) for a, b in combinations(c, 2))]
    profiles: dict = {}
    for side in sides:
        sset = set(side)
        for ref in refs:
            if sset & set(ref):
                continue
            prof = profiles.get(ref)
            if prof is None:
                prof = color_profile(g, k, ref, deadline)
                profiles[ref] = prof
            fixed = [v for v in side if prof.is_fixed(v)]
            if len(fixed) < 2:
                continue
            if is_fixed_as_whole(g, k, side, ref, profile=prof, deadline=deadline):
                continue
            for u, v in combinations(fixed, 2):
                if not g.has_edge(u, v):
                    findings.append({"graph6": g6, "pair": [u, v],
                                     "side": list(side), "reference": list(ref),
                                     "detail": "non-adjacent independently fixed vertices"})
    return [], findings


def _lemma23_graph(g: Graph, g6: str, cfg: Config, k: int,
                   deadline: Deadline | None) -> tuple[list, list]:
    findings = []
    for pair in fixation_pairs(g, k, cfg.max_side, deadline):
        for fixator, fixee in ((pair.s, pair.t), (pair.t, pair.s)):
            if classify_pair(g, fixator, fixee) is not FixatorClass.OTHER:
                continue
            shape = side_shape(g, fixee)
            if shape == "vertex":
                findings.append({"graph6": g6, "fixator": list(fixator),
                                 "fixee": list(fixee),
                                 "detail": "vertex fixee whose direct fixator is not an odd cycle"})
            elif shape == "odd_cycle":
                findings.append({"graph6": g6, "fixator": list(fixator),
                                 "fixee": list(fixee),
                                 "detail": "odd-cycle fixee whose direct fixator is not a vertex"})
    return [], findings


def _lemma4_graph(g: Graph, g6: str, cfg: Config, k: int,
                  deadline: Deadline | None) -> tuple[list, list]:
    violations, findings = [], []
    ci = color_identical_pairs(g, k, deadline)
    chains = build_fixation_chains(g, max_cycle_len=cfg.cycle_cap, deadline=deadline)
    if cfg.direction in ("forward", "both"):
        ciset = set(ci)
        for chain in chains:
            for u, v in combinations(chain.vertex_nodes, 2):
                if g.has_edge(u, v):
                    violations.append({"graph6": g6, "pair": [u, v],
                                       "detail": "adjacent vertex nodes in one chain"})
                elif (u, v) not in ciset:
                    violations.append({"graph6": g6, "pair": [u, v],
                                       "detail": "same-chain vertex nodes are not color identical"})
    if cfg.direction in ("converse", "both"):
        node_sets = [set(chain.vertex_nodes) for chain in chains]
        for u, v in ci:
            if not any(u in s and v in s for s in node_sets):
                findings.append({"graph6": g6, "pair": [u, v],
                                 "detail": "color-identical pair shares no fixation chain"})
    return violations, findings


def _lemma5_graph(g: Graph, g6: str, cfg: Config, k: int,
                  deadline: Deadline | None) -> tuple[list, list]:
    findings = []
    for chain in build_fixation_chains(g, max_cycle_len=cfg.cycle_cap, deadline=deadline):
        for u, v in combinations(chain.vertex_nodes, 2):
            if not g.has_edge(u, v) and joinable(g, u, v).joinable:
                findings.append({"graph6": g6, "pair": [u, v],
                                 "detail": "chain vertex nodes are joinable"})
    return [], findings


def _corollary1_graph(g: Graph, g6: str, cfg: Config, k: int,
                      deadline: Deadline | None) -> tuple[list, list]:
    fragment = corollary_experiment(g, deadline=deadline)
    return fragment["violations"], []


_CHECK_FNS = {
    "theorem1": _theorem1_graph,
    "lemma1": _lemma1_graph,
    "lemma2_lemma3": _lemma23_graph,
    "lemma4": _lemma4_graph,
    "lemma5": _lemma5_graph,
    "corollary1": _corollary1_graph,
}

_REQUIRED_FILTERS = {
    "theorem1": frozenset({"planar", "chromatic=4"}),
    "lemma1": frozenset({"chromatic=4"}),
    "lemma2_lemma3": frozenset({"chromatic=4"}),
    "lemma4": frozenset({"chromatic=4"}),
    "lemma5": frozenset({"planar", "chromatic=4"}),
    "corollary1": frozenset({"chromatic=5"}),
}


def _worker(task: tuple[str, str, tuple[str, ...], Config]) -> dict:
    check_name, g6, filters, cfg = task
    deadline = Deadline.after_ms(cfg.timeout_ms)
    try:
        g = parse_graph6(g6)
        if not _passes_filters(g, filters, deadline):
            return {"status": "skipped", "graph6": g6}
        k = _chromatic_from(filters)
        violations, findings = _CHECK_FNS[check_name](g, g6, cfg, k, deadline)
        return {"status": "ok", "graph6": g6,
                "violations": violations, "findings": findings}
    except GraphTimeout:
        return {"status": "timeout", "graph6": g6}


def _scan(check_name: str, corpus: CorpusSpec, cfg: Config,
          notes: tuple[str, ...] = ()) -> CheckReport:
    missing = _REQUIRED_FILTERS[check_name] - set(corpus.filters)
    if missing:
        raise ValueError(f"check {check_name} requires corpus filters: "
                         + ", ".join(sorted(missing)))
    start = time.monotonic()
    tasks = [(check_name, g6, corpus.filters, cfg) for g6 in corpus.graph6_lines()]
    jobs = cfg.effective_jobs()
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            chunk = max(1, len(tasks) // (jobs * 8))
            results = pool.map(_worker, tasks, chunksize=chunk)
    else:
        results = [_worker(task) for task in tasks]

    scanned = 0
    violations: list[dict] = []
    findings: list[dict] = []
    timeouts: list[str] = []
    for res in results:
        if res["status"] == "ok":
            scanned += 1
            violations.extend(res["violations"])
            findings.extend(res["findings"])
        elif res["status"] == "timeout":
            timeouts.append(res["graph6"])
    violations.sort(key=_item_sort_key)
    findings.sort(key=_item_sort_key)
    timeouts.sort()
    elapsed = int((time.monotonic() - start) * 1000)
    return CheckReport(check=check_name, corpus=corpus.describe(), scanned=scanned,
                       violations=violations, findings=findings, timeouts=timeouts,
                       elapsed_ms=elapsed, version=ENGINE_VERSION, notes=notes)


# ----------------------------------------------------------------------
# public checks
# ----------------------------------------------------------------------

LEMMA1_PROXY_NOTE = (
    "operational reading: for each fixation-pair side with at least two vertices "
    "and each reference clique disjoint from it, a side vertex whose profile "
    "relative to the reference is a single color counts as independently fixed; "
    "when the side is not fixed as a whole, every non-adjacent pair of such "
    "vertices is recorded as a finding"
)


def check_theorem1(corpus: CorpusSpec, config: Config | None = None) -> CheckReport:
    """No color-identical pair of a planar 4-chromatic graph is joinable."""
    return _scan("theorem1", corpus, config or Config())


def check_lemma1(corpus: CorpusSpec, config: Config | None = None) -> CheckReport:
    """Adjacency of independently fixed vertices, under the documented proxy."""
    return _scan("lemma1", corpus, config or Config(), notes=(LEMMA1_PROXY_NOTE,))


def check_lemma2_lemma3(corpus: CorpusSpec, config: Config | None = None) -> CheckReport:
    """Taxonomy survey: vertex fixees want odd-cycle fixators and vice versa."""
    return _scan("lemma2_lemma3", corpus, config or Config())


def check_lemma4(corpus: CorpusSpec, direction: str = "both",
                 config: Config | None = None) -> CheckReport:
    """Same chain vs color identity; forward half is a hard assertion."""
    cfg = replace(config or Config(), direction=direction)
    return _scan("lemma4", corpus, cfg)


def check_lemma5(corpus: CorpusSpec, config: Config | None = None) -> CheckReport:
    """Joinability survey over chain vertex nodes (findings, never failures)."""
    return _scan("lemma5", corpus, config or Config())


def check_corollary1(corpus: CorpusSpec, config: Config | None = None) -> CheckReport:
    """Edge deletions of 5-chromatic graphs that drop to 4 force CI endpoints."""
    return _scan("corollary1", corpus, config or Config())


def corollary_experiment(g: Graph, deadline: Deadline | None = None) -> dict:
    """Per-edge outcomes for one 5-chromatic graph.

    For every edge uv with chromatic_number(g - uv) == 4 the endpoints must be
    color identical at palette 4; a miss is recorded as a violation.
    """
    if chromatic_number(g, deadline) != 5:
        raise ValueError("corollary experiment expects a 5-chromatic graph")
    g6 = to_graph6(g)
    edges_out: list[dict] = []
    violations: list[dict] = []
    for u, v in g.edges():
        h = g.delete_edge(u, v)
        chi = chromatic_number(h, deadline)
        entry: dict = {"edge": [u, v], "chromatic_after_delete": chi}
        if chi == 4:
            identical = (u, v) in color_identical_pairs(h, 4, deadline)
            entry["endpoints_color_identical"] = identical
            if not identical:
                violations.append({"graph6": g6, "edge": [u, v],
                                   "detail": "chromatic drop to 4 without color-identical endpoints"})
        edges_out.append(entry)
    return {"graph6": g6, "edges": edges_out, "violations": violations}


def check_grotzsch(config: Config | None = None) -> CheckReport:
    """Facts and conjecture outcomes for the triangle-free 4-chromatic fixture.

    Asserts the chromatic number, triangle-freeness and nonplanarity; records
    the fixation-pair and color-identical-pair counts as findings only.
    """
    cfg = config or Config()
    start = time.monotonic()
    g = grotzsch()
    g6 = to_graph6(g)
    deadline = Deadline.after_ms(cfg.timeout_ms)
    violations: list[dict] = []
    findings: list[dict] = []
    timeouts: list[str] = []
    try:
        if chromatic_number(g, deadline) != 4:
            violations.append({"graph6": g6, "detail": "chromatic number is not 4"})
        if not g.is_triangle_free():
            violations.append({"graph6": g6, "detail": "fixture contains a triangle"})
        if is_planar(g):
            violations.append({"graph6": g6, "detail": "fixture is planar"})
        pairs = fixation_pairs(g, 4, cfg.max_side, deadline)
        ci = color_identical_pairs(g, 4, deadline)
        findings.append({"graph6": g6, "count": len(pairs),
                         "detail": f"fixation pairs at palette 4, sides up to {cfg.max_side}: {len(pairs)}"})
        findings.append({"graph6": g6, "count": len(ci),
                         "detail": f"color-identical pairs at palette 4: {len(ci)}"})
    except GraphTimeout:
        timeouts.append(g6)
    elapsed = int((time.monotonic() - start) * 1000)
    return CheckReport(check="grotzsch", corpus="fixture grotzsch", scanned=1,
                       violations=violations, findings=findings, timeouts=timeouts,
                       elapsed_ms=elapsed, version=ENGINE_VERSION)

"""Command-line surface: single-graph analysis, pairwise joinability queries,
and corpus check campaigns.

Graph arguments accept a graph6 literal, a path to a file (graph6 line or an
edge list: first line "n", then one "u v" pair per line, 0-indexed), or a
named built-in fixture as ``fixture:<name>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import chromatic_number, color_identical_pairs
from .deadline import Deadline, GraphTimeout
from .fixation import build_fixation_chains, direct_fixator_class, fixation_pairs
from .fixtures import FIXTURES, fixture
from .graph import Graph, parse_graph6, to_graph6
from .harness import (DIRECTIONS, FORMATS, Config, CorpusSpec, check_corollary1,
                      check_grotzsch, check_lemma1, check_lemma2_lemma3,
                      check_lemma4, check_lemma5, check_theorem1)
from .planarity import NonplanarGraphError, is_planar, joinable


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"edge-list files start with a vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}; expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def load_graph(spec: str) -> Graph:
    """Resolve a CLI graph argument: fixture:<name>, a file path, or graph6."""
    if spec.startswith("fixture:"):
        return fixture(spec[len("fixture:"):])
    if os.path.exists(spec):
        with open(spec, encoding="ascii") as fh:
            text = fh.read()
        stripped = [ln.strip() for ln in text.splitlines()]
        stripped = [ln for ln in stripped if ln and not ln.startswith("#")]
        # graph6 bytes are all >= '?' (0x3f), so a leading integer means edge list
        if stripped and stripped[0].split()[0].lstrip("-").isdigit():
            return parse_edge_list(text)
        if not stripped:
            raise ValueError("empty graph file")
        return parse_graph6(stripped[0])
    return parse_graph6(spec)


def _config_from(args: argparse.Namespace) -> Config:
    return Config(palette=getattr(args, "palette", None),
                  max_side=args.max_side,
                  cycle_cap=args.cycle_cap,
                  timeout_ms=args.timeout_ms,
                  jobs=getattr(args, "jobs", None),
                  format=args.format,
                  direction=getattr(args, "direction", "both"))


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------

def _analysis_document(g: Graph, cfg: Config) -> dict:
    deadline = Deadline.after_ms(cfg.timeout_ms)
    chi = chromatic_number(g, deadline)
    k = cfg.palette if cfg.palette is not None else chi
    planar = is_planar(g)
    ci = color_identical_pairs(g, k, deadline)
    pairs = fixation_pairs(g, k, cfg.max_side, deadline)
    chains = build_fixation_chains(g, max_cycle_len=cfg.cycle_cap, deadline=deadline)
    doc = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "chromatic_number": chi,
        "palette": k,
        "planar": planar,
        "triangle_free": g.is_triangle_free(),
        "color_identical_pairs": [list(p) for p in ci],
        "fixation_pairs": [{
            "s": list(p.s), "t": list(p.t), "j": p.j,
            "embrace": p.embrace, "structural": p.structural,
            "class_s_to_t": direct_fixator_class(g, p).value,
            "class_t_to_s": direct_fixator_class(g, p.flipped()).value,
        } for p in pairs],
        "chains": [{
            "vertex_nodes": list(c.vertex_nodes),
            "cycle_nodes": [list(cyc) for cyc in c.cycle_nodes],
        } for c in chains],
    }
    if planar:
        doc["ci_joinability"] = [{
            "pair": [u, v],
            "verdict": joinable(g, u, v).reason.value,
        } for u, v in ci]
    else:
        doc["ci_joinability"] = "skipped: graph is not planar"
    return doc


def _analysis_human(doc: dict) -> str:
    lines = [
        f"graph:           {doc['graph6']}  (n={doc['n']}, m={doc['m']})",
        f"chromatic:       {doc['chromatic_number']}",
        f"palette:         {doc['palette']}",
        f"planar:          {'yes' if doc['planar'] else 'no'}",
        f"triangle-free:   {'yes' if doc['triangle_free'] else 'no'}",
        f"color-identical pairs: {len(doc['color_identical_pairs'])}",
    ]
    for u, v in doc["color_identical_pairs"]:
        lines.append(f"  ({u},{v})")
    lines.append(f"fixation pairs (sides up to config): {len(doc['fixation_pairs'])}")
    for p in doc["fixation_pairs"]:
        lines.append(f"  s={tuple(p['s'])} t={tuple(p['t'])} j={p['j']}"
                     f" embrace={'yes' if p['embrace'] else 'no'}"
                     f" structural={'yes' if p['structural'] else 'no'}"
                     f" class={p['class_s_to_t']}")
    lines.append(f"chains: {len(doc['chains'])}")
    for c in doc["chains"]:
        cycles = "; ".join(str(tuple(cyc)) for cyc in c["cycle_nodes"])
        lines.append(f"  vertex nodes {tuple(c['vertex_nodes'])}  cycles {cycles}")
    if isinstance(doc["ci_joinability"], str):
        lines.append(f"joinability: {doc['ci_joinability']}")
    else:
        lines.append("joinability of color-identical pairs:")
        for item in doc["ci_joinability"]:
            u, v = item["pair"]
            verdict = {"adjacent": "adjacent",
                       "joinable": "joinable",
                       "nonplanar_after_join": "not-joinable"}[item["verdict"]]
            lines.append(f"  ({u},{v}): {verdict}")
    return "\n".join(lines)


def _analysis_tabular(doc: dict) -> str:
    g6 = doc["graph6"]
    rows = []
    for key in ("n", "m", "chromatic_number", "palette", "planar", "triangle_free"):
        rows.append(f"{g6}\t{key}\t{doc[key]}")
    for u, v in doc["color_identical_pairs"]:
        rows.append(f"{g6}\tci_pair\t{u},{v}")
    for p in doc["fixation_pairs"]:
        rows.append(f"{g6}\tfixation_pair\t" + json.dumps(p, sort_keys=True, separators=(",", ":")))
    for c in doc["chains"]:
        rows.append(f"{g6}\tchain\t" + json.dumps(c, sort_keys=True, separators=(",", ":")))
    if isinstance(doc["ci_joinability"], list):
        for item in doc["ci_joinability"]:
            u, v = item["pair"]
            rows.append(f"{g6}\tci_joinability\t{u},{v}: {item['verdict']}")
    return "\n".join(rows)


def cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    g = load_graph(args.graph)
    doc = _analysis_document(g, cfg)
    if cfg.format == "structured":
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif cfg.format == "tabular":
        print(_analysis_tabular(doc))
    else:
        print(_analysis_human(doc))
    return 0


# ----------------------------------------------------------------------
# check
# ----------------------------------------------------------------------

def _corpus_from(args: argparse.Namespace) -> CorpusSpec:
    if (args.builtin is None) == (args.input is None):
        raise ValueError("supply exactly one corpus source: --builtin N or --input FILE")
    # fixed evaluation order, cheapest predicate first
    filters: list[str] = []
    if args.connected:
        filters.append("connected")
    if args.triangle_free:
        filters.append("triangle_free")
    if args.planar:
        filters.append("planar")
    if args.chromatic is not None:
        filters.append(f"chromatic={args.chromatic}")
    return CorpusSpec(builtin_max=args.builtin, path=args.input, filters=tuple(filters))


def cmd_check(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    if args.check == "grotzsch":
        if args.builtin is not None or args.input is not None:
            raise ValueError("check grotzsch runs on its built-in fixture; corpus flags do not apply")
        report = check_grotzsch(cfg)
    else:
        corpus = _corpus_from(args)
        if args.check == "theorem1":
            report = check_theorem1(corpus, cfg)
        elif args.check == "lemma1":
            report = check_lemma1(corpus, cfg)
        elif args.check in ("lemma2", "lemma3"):
            report = check_lemma2_lemma3(corpus, cfg)
        elif args.check == "lemma4":
            report = check_lemma4(corpus, args.direction, cfg)
        elif args.check == "lemma5":
            report = check_lemma5(corpus, cfg)
        else:
            report = check_corollary1(corpus, cfg)
    print(report.render(cfg.format))
    return 0 if report.passed else 1


# ----------------------------------------------------------------------
# joinable
# ----------------------------------------------------------------------

def cmd_joinable(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    result = joinable(g, args.u, args.v)
    print({"adjacent": "adjacent",
           "joinable": "joinable",
           "nonplanar_after_join": "not-joinable"}[result.reason.value])
    return 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _add_engine_options(p: argparse.ArgumentParser, with_palette: bool = True) -> None:
    if with_palette:
        p.add_argument("--palette", type=int, default=None,
                       help="palette size override (default: the chromatic number)")
    p.add_argument("--max-side", type=int, default=4,
                   help="largest fixation-pair side searched (default 4)")
    p.add_argument("--cycle-cap", type=int, default=None,
                   help="cap on dominated odd-cycle length for chains")
    p.add_argument("--timeout-ms", type=int, default=10_000,
                   help="per-graph time budget in milliseconds (default 10000)")
    p.add_argument("--format", choices=FORMATS, default="human",
                   help="output format (default human)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixchain",
        description="Color fixation analysis: color-identical pairs, fixation "
                    "pairs and chains, joinability, and corpus check campaigns.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full analysis of a single graph")
    pa.add_argument("graph", help="graph6 string, file path, or fixture:<name> "
                                  f"(fixtures: {', '.join(sorted(FIXTURES))})")
    _add_engine_options(pa)
    pa.set_defaults(fn=cmd_analyze)

    pc = sub.add_parser("check", help="run a falsification campaign over a corpus")
    pc.add_argument("check", choices=["theorem1", "lemma1", "lemma2", "lemma3",
                                      "lemma4", "lemma5", "corollary1", "grotzsch"])
    pc.add_argument("--builtin", type=int, default=None, metavar="N",
                    help="all isomorphism classes on 1..N vertices (N <= 10)")
    pc.add_argument("--input", default=None, metavar="FILE",
                    help="graph6 corpus file, one graph per line")
    pc.add_argument("--planar", action="store_true", help="keep planar graphs only")
    pc.add_argument("--chromatic", type=int, default=None, metavar="K",
                    help="keep graphs with chromatic number exactly K")
    pc.add_argument("--connected", action="store_true", help="keep connected graphs only")
    pc.add_argument("--triangle-free", action="store_true",
                    help="keep triangle-free graphs only")
    pc.add_argument("--direction", choices=DIRECTIONS, default="both",
                    help="lemma4 only: which implication to test (default both)")
    pc.add_argument("--jobs", type=int, default=None,
                    help="parallel workers (default: FIXCHAIN_JOBS or 1)")
    _add_engine_options(pc, with_palette=False)
    pc.set_defaults(fn=cmd_check)

    pj = sub.add_parser("joinable", help="joinability verdict for one vertex pair")
    pj.add_argument("graph", help="graph6 string, file path, or fixture:<name>")
    pj.add_argument("u", type=int)
    pj.add_argument("v", type=int)
    pj.set_defaults(fn=cmd_joinable)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GraphTimeout:
        print("error: analysis timed out; raise --timeout-ms", file=sys.stderr)
        return 1
    except NonplanarGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

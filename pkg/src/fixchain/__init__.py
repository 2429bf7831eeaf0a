"""Color fixation analysis for small graphs.

Core objects: exact coloring enumeration with reference cliques, color
identical pairs, color fixation pairs / embraces / chains, planarity and
joinability, isomorph-free generation of small-graph corpora, and a
falsification harness that runs each claim as a deterministic check.
"""

from ._version import ENGINE_VERSION as __version__
from .canon import canonical_form, canonical_key, graph_from_key
from .coloring import (Coloring, ColorProfile, UncolorableError,
                       chromatic_number, color_identical_pairs, color_profile,
                       enumerate_colorings, is_critical, is_k_colorable,
                       is_uniquely_k_colorable, validate_reference)
from .deadline import Deadline, GraphTimeout
from .fixation import (FixationChain, FixationPair, FixatorClass,
                       audit_fixation_pair, build_fixation_chains,
                       classify_pair, direct_fixator_class, fixation_pairs,
                       is_fixed_as_whole, same_chain, side_shape)
from .fixtures import FIXTURES, fixture
from .graph import (Graph, Graph6ParseError, canonical_cycle,
                    complete_join_exists, odd_cycles_dominated_by,
                    parse_graph6, to_graph6, validate_odd_cycle)
from .harness import (CheckReport, Config, CorpusSpec, check_corollary1,
                      check_grotzsch, check_lemma1, check_lemma2_lemma3,
                      check_lemma4, check_lemma5, check_theorem1,
                      corollary_experiment, generate_small_graphs)
from .planarity import (JoinabilityResult, JoinReason, NonplanarGraphError,
                        is_planar, joinable)

__all__ = [
    "__version__",
    "Coloring", "ColorProfile", "UncolorableError",
    "chromatic_number", "color_identical_pairs", "color_profile",
    "enumerate_colorings", "is_critical", "is_k_colorable",
    "is_uniquely_k_colorable", "validate_reference",
    "Deadline", "GraphTimeout",
    "FixationChain", "FixationPair", "FixatorClass",
    "audit_fixation_pair", "build_fixation_chains", "classify_pair",
    "direct_fixator_class", "fixation_pairs", "is_fixed_as_whole",
    "same_chain", "side_shape",
    "FIXTURES", "fixture",
    "Graph", "Graph6ParseError", "canonical_cycle", "complete_join_exists",
    "odd_cycles_dominated_by", "parse_graph6", "to_graph6", "validate_odd_cycle",
    "CheckReport", "Config", "CorpusSpec",
    "check_corollary1", "check_grotzsch", "check_lemma1", "check_lemma2_lemma3",
    "check_lemma4", "check_lemma5", "check_theorem1", "corollary_experiment",
    "generate_small_graphs",
    "canonical_form", "canonical_key", "graph_from_key",
    "JoinabilityResult", "JoinReason", "NonplanarGraphError",
    "is_planar", "joinable",
]

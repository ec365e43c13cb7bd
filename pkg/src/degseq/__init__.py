"""Optimization over degree sequences of graphs, hypergraphs and multihypergraphs."""

from degseq.core import (
    Caps,
    Hypergraph,
    Multihypergraph,
    ObjectiveSpec,
    canonicalize,
    degree_sequence,
    evaluate,
    format_rational,
    is_convex,
    parse_rational,
)
from degseq.optimize import (
    DpSolution,
    linear_opt_hyper,
    linear_opt_multi,
    opt_convex_multi,
    opt_graph_dp,
    opt_multi_dp,
    opt_threshold_dp,
)
from degseq.realize import (
    ThresholdGraph,
    eg_check,
    havel_hakimi_realize,
    is_threshold,
    multi_feasible,
    multi_realize,
    threshold_realize,
)

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "DpSolution",
    "Hypergraph",
    "Multihypergraph",
    "ObjectiveSpec",
    "ThresholdGraph",
    "canonicalize",
    "degree_sequence",
    "eg_check",
    "evaluate",
    "format_rational",
    "havel_hakimi_realize",
    "is_convex",
    "is_threshold",
    "linear_opt_hyper",
    "linear_opt_multi",
    "multi_feasible",
    "multi_realize",
    "opt_convex_multi",
    "opt_graph_dp",
    "opt_multi_dp",
    "opt_threshold_dp",
    "parse_rational",
    "threshold_realize",
]

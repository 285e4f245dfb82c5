"""Belief orderings from an ensemble of credal sets, with a brute-force
vertex oracle, rival single-set baselines and an axiom audit."""

from .decider import Comparison, Decision, TieMode, compare, decide, explain
from .ensemble import Distribution, ensemble_vertices, posterior_ratio, revise
from .evidence import Evidence, PiParam, best_atom, parse_rational, threshold
from .model import ModelFile, dump_model, load_model, read_model
from .oracle import EnumerationTable, decide_by_enumeration
from .relation import Relation, build_relation, export_hasse
from .sentences import (
    Domain,
    Sentence,
    complement,
    implies,
    intersection,
    parse_sentence,
    reduce_common,
    union,
)

__all__ = [
    "Comparison", "Decision", "TieMode", "compare", "decide", "explain",
    "Distribution", "ensemble_vertices", "posterior_ratio", "revise",
    "Evidence", "PiParam", "best_atom", "parse_rational", "threshold",
    "ModelFile", "dump_model", "load_model", "read_model",
    "EnumerationTable", "decide_by_enumeration",
    "Relation", "build_relation", "export_hasse",
    "Domain", "Sentence", "complement", "implies", "intersection",
    "parse_sentence", "reduce_common", "union",
]

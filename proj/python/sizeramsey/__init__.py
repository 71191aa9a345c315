"""Verification engine for size Ramsey numbers.

Thin re-export of the compiled core: graph6 handling, canonical forms,
pattern containment, arrowing decisions with certificates, isomorphism-free
enumeration, and the size Ramsey sweeps.
"""

from ._core import (
    BudgetExceeded,
    Graph,
    PartitionMismatch,
    arrows,
    canonical_form,
    check_coloring,
    contains,
    enumerate_graphs,
    eval_inequality1,
    family,
    is_isomorphic,
    max_matching,
    parse_graph6,
    pattern_graph,
    period3_coloring,
    predicted,
    size_ramsey,
    verify,
    witness,
    write_graph6,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "PartitionMismatch",
    "arrows",
    "canonical_form",
    "check_coloring",
    "contains",
    "enumerate_graphs",
    "eval_inequality1",
    "family",
    "is_isomorphic",
    "max_matching",
    "parse_graph6",
    "pattern_graph",
    "period3_coloring",
    "predicted",
    "size_ramsey",
    "verify",
    "witness",
    "write_graph6",
]

"""Branching and pseudo-branching decompositions of digraphs."""

from ._ndt import (
    BudgetExceeded,
    Digraph,
    HypothesisError,
    InputError,
    UnsupportedCase,
    brute_gamma,
    brute_mad,
    extract_bounded_branching,
    format_digraph,
    fractional_arboricity,
    frank_decompose,
    gen_sharp,
    gen_tree,
    max_average_degree,
    max_in_degree,
    ndt_branching_decompose,
    oracle_decompose,
    parse_digraph,
    pseudo_ndt_decompose,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]

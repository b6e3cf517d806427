"""Finite permutations of atoms in three interchangeable representations.

* :class:`Permutation` -- a finite bijective map (only moved atoms stored);
* :data:`PermExpr` -- a tree of swaps, ``IdE | SwapE | CompE``;
* :class:`Cycle` lists -- disjoint cycles.

Plus group actions (:mod:`finperm.gset`) and support/freshness checks
(:mod:`finperm.nominal`).
"""

from .cycles import (
    Cycle,
    canonical_cycles,
    compute_cycles,
    compute_prefix,
    cycle_to_transpositions,
    cycles_to_expr,
    cycles_to_perm,
    is_closed_prefix,
    is_prefix,
    normalize,
    perm_to_cycles,
    transpositions_to_perm,
)
from .errors import BoundError, ContractError, CycleError, FinPermError, ParseError
from .expr import (
    CompE,
    IdE,
    PermExpr,
    SwapE,
    atoms_of,
    evaluate,
    expr_equiv,
    expr_from_json,
    expr_to_json,
    semantic_support,
    subsumes,
)
from .perm import Permutation, apply, compose, identity, inverse, perm_eq, support, transposition
from .syntax import format_cycles, format_expr, format_term, parse_cycles, parse_expr, parse_term

__all__ = [
    "BoundError", "CompE", "ContractError", "Cycle", "CycleError", "FinPermError", "IdE",
    "ParseError", "PermExpr", "Permutation", "SwapE", "apply", "atoms_of", "canonical_cycles",
    "compose", "compute_cycles", "compute_prefix", "cycle_to_transpositions", "cycles_to_expr",
    "cycles_to_perm", "evaluate", "expr_equiv", "expr_from_json", "expr_to_json", "format_cycles",
    "format_expr", "format_term", "identity", "inverse", "is_closed_prefix", "is_prefix",
    "normalize", "parse_cycles", "parse_expr", "parse_term", "perm_eq", "perm_to_cycles",
    "semantic_support", "subsumes", "support", "transposition", "transpositions_to_perm",
]

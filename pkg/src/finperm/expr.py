"""Transposition expressions: ``Id | Swap a b | Comp p q``.

``Comp(p, q)`` denotes the permutation that applies ``q`` first and then
``p``, so a left-to-right reading of the swaps in an expression is the
usual right-to-left function composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ContractError
from .perm import Atom, AtomSet, Permutation, apply, check_atom


@dataclass(frozen=True)
class IdE:
    def __str__(self) -> str:
        return "id"


@dataclass(frozen=True)
class SwapE:
    a: Atom
    b: Atom

    def __post_init__(self) -> None:
        check_atom(self.a)
        check_atom(self.b)

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


@dataclass(frozen=True)
class CompE:
    left: PermExpr
    right: PermExpr

    def __str__(self) -> str:
        from .syntax import format_expr
        return format_expr(self)


PermExpr = Union[IdE, SwapE, CompE]


def swaps(e: PermExpr) -> Iterator[tuple[Atom, Atom]]:
    """Yield the swaps of ``e`` in left-to-right order.

    Iterative, so long parsed chains do not hit the recursion limit.
    """
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, SwapE):
            yield node.a, node.b
        elif isinstance(node, CompE):
            stack.append(node.right)
            stack.append(node.left)
        elif not isinstance(node, IdE):
            raise TypeError(f"not a permutation expression: {node!r}")


def evaluate(e: PermExpr) -> Permutation:
    """The permutation denoted by ``e``.

    Because ``Comp(p, q)`` means "q then p", ``e`` denotes the product of its
    swaps read left to right. The product is built from the right, tracking
    the preimage of each atom so every swap costs O(1).
    """
    fwd: dict[Atom, Atom] = {}
    bwd: dict[Atom, Atom] = {}
    for a, b in reversed(list(swaps(e))):
        if a == b:
            continue
        # new = swap(a, b) . current: whatever mapped to a now maps to b
        xa, xb = bwd.get(a, a), bwd.get(b, b)
        fwd[xa], fwd[xb] = b, a
        bwd[b], bwd[a] = xa, xb
    return Permutation.from_mapping(fwd)


def atoms_of(e: PermExpr) -> AtomSet:
    """Every atom written in ``e``, including those of ``Swap a a``."""
    found = set()
    for a, b in swaps(e):
        found.add(a)
        found.add(b)
    return frozenset(found)


def semantic_support(e: PermExpr) -> AtomSet:
    p = evaluate(e)
    return frozenset(a for a in atoms_of(e) if apply(p, a) != a)


def subsumes(p: PermExpr, q: PermExpr) -> bool:
    """``q`` agrees with ``p`` on every atom that ``p`` moves.

    Checking only the moved atoms (rather than every written atom) keeps the
    relation transitive: ``Swap 0 0``, ``Id`` and ``Swap 0 1`` would
    otherwise form a chain whose ends disagree at 0.
    """
    fp, fq = evaluate(p), evaluate(q)
    return all(apply(fq, a) == b for a, b in fp.items())


def expr_equiv(p: PermExpr, q: PermExpr) -> bool:
    return subsumes(p, q) and subsumes(q, p)


def depth(e: PermExpr) -> int:
    """Height of the tree counted in nodes; a leaf has depth 1."""
    if isinstance(e, CompE):
        return 1 + max(depth(e.left), depth(e.right))
    return 1


def from_swaps(pairs) -> PermExpr:
    """Right-nested composition of ``Swap`` leaves; ``Id`` for no pairs."""
    pairs = list(pairs)
    if not pairs:
        return IdE()
    result: PermExpr = SwapE(*pairs[-1])
    for a, b in reversed(pairs[:-1]):
        result = CompE(SwapE(a, b), result)
    return result


def expr_to_json(e: PermExpr) -> dict:
    if isinstance(e, IdE):
        return {"op": "id"}
    if isinstance(e, SwapE):
        return {"op": "swap", "a": e.a, "b": e.b}
    if isinstance(e, CompE):
        return {"op": "comp", "left": expr_to_json(e.left), "right": expr_to_json(e.right)}
    raise TypeError(f"not a permutation expression: {e!r}")


def expr_from_json(data) -> PermExpr:
    if not isinstance(data, dict) or "op" not in data:
        raise ContractError(f"expression JSON must be an object with an 'op' field: {data!r}")
    op = data["op"]
    if op == "id":
        return IdE()
    if op == "swap":
        return SwapE(data["a"], data["b"])
    if op == "comp":
        return CompE(expr_from_json(data["left"]), expr_from_json(data["right"]))
    raise ContractError(f"unknown expression op {op!r}")

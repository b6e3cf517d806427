"""Disjoint cycles, orbit prefixes, and normalization of swap expressions.

A cycle is stored as a head atom plus the rest of its orbit. The fueled
functions :func:`compute_prefix` and :func:`compute_cycles` follow the
recursive definitions literally; :func:`perm_to_cycles` supplies enough fuel
(the size of the support) for every computed prefix to be closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, CycleError
from .expr import CompE, IdE, PermExpr, evaluate, from_swaps
from .perm import Atom, Permutation, apply, check_atom, compose, identity, support, transposition

Transpositions = list[tuple[Atom, Atom]]


@dataclass(frozen=True)
class Cycle:
    head: Atom
    tail: tuple[Atom, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", tuple(self.tail))

    @classmethod
    def of(cls, *atoms: Atom) -> Cycle:
        if not atoms:
            raise ContractError("a cycle needs at least one atom")
        return cls(atoms[0], atoms[1:])

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return (self.head, *self.tail)

    @property
    def last(self) -> Atom:
        return self.tail[-1] if self.tail else self.head

    def is_duplicate_free(self) -> bool:
        return len(set(self.atoms)) == len(self.atoms)

    def rotated_to_min(self) -> Cycle:
        atoms = self.atoms
        i = atoms.index(min(atoms))
        return Cycle.of(*atoms[i:], *atoms[:i])

    def __len__(self) -> int:
        return 1 + len(self.tail)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.atoms)) + ")"


CycleList = tuple[Cycle, ...]


def cycle_to_transpositions(c: Cycle) -> Transpositions:
    """``(a b1 ... bn)`` becomes ``[(a, b1), (b1, b2), ..., (bn-1, bn)]``."""
    atoms = c.atoms
    return list(zip(atoms, atoms[1:]))


def transpositions_to_perm(ts: Sequence[tuple[Atom, Atom]]) -> Permutation:
    """Fold the list so that its first swap is applied last."""
    result = identity()
    for a, b in reversed(ts):
        result = compose(transposition(a, b), result)
    return result


def is_prefix(f: Permutation, c: Cycle) -> bool:
    """``c.tail`` is a segment of the orbit of ``c.head`` that does not return to it."""
    if apply(f, c.head) == c.head or not c.tail or c.head in c.tail:
        return False
    atoms = c.atoms
    return all(apply(f, x) == y for x, y in zip(atoms, atoms[1:]))


def is_closed_prefix(f: Permutation, c: Cycle) -> bool:
    return is_prefix(f, c) and apply(f, c.last) == c.head


def compute_prefix(f: Permutation, n: int, a: Atom) -> Cycle:
    """Follow the orbit of ``a`` for at most ``n`` extra steps, stopping before it closes.

    The result has at most ``n + 1`` atoms after the head.
    """
    if apply(f, a) == a:
        raise ContractError(f"atom {a} is not in the support of the permutation")
    tail = [apply(f, a)]
    for _ in range(n):
        nxt = apply(f, tail[-1])
        if nxt == a:
            break
        tail.append(nxt)
    return Cycle(a, tuple(tail))


def compute_cycles(
    f: Permutation, n: int, atoms: Iterable[Atom], acc: Sequence[Cycle] = ()
) -> CycleList:
    """Prepend a prefix for each atom not already covered by ``acc``."""
    atoms = list(atoms)
    outside = [a for a in atoms if apply(f, a) == a]
    if outside:
        raise ContractError(f"atoms {outside} are not in the support of the permutation")
    result = list(acc)
    covered = {x for c in result for x in c.atoms}
    for a in atoms:
        if a in covered:
            continue
        c = compute_prefix(f, n, a)
        covered.update(c.atoms)
        result.insert(0, c)
    return tuple(result)


def perm_to_cycles(f: Permutation) -> CycleList:
    supp = sorted(support(f))
    return compute_cycles(f, len(supp), supp, ())


def validate_cycles(cs: Iterable[Cycle]) -> CycleList:
    cs = tuple(cs)
    seen: dict[Atom, Cycle] = {}
    for c in cs:
        for a in c.atoms:
            check_atom(a)
        if len(c) < 2:
            raise CycleError(f"cycle {c} has a single atom", c)
        if not c.is_duplicate_free():
            raise CycleError(f"cycle {c} repeats an atom", c)
        for a in c.atoms:
            if a in seen:
                raise CycleError(f"cycle {c} overlaps cycle {seen[a]} at atom {a}", c)
            seen[a] = c
    return cs


def cycles_to_expr(cs: Iterable[Cycle]) -> PermExpr:
    """Right-nested composition of each cycle's right-nested swap chain."""
    cs = validate_cycles(cs)
    if not cs:
        return IdE()
    parts = [from_swaps(cycle_to_transpositions(c)) for c in cs]
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = CompE(part, result)
    return result


def cycles_to_perm(cs: Iterable[Cycle]) -> Permutation:
    return evaluate(cycles_to_expr(cs))


def canonical_cycles(cs: Iterable[Cycle]) -> CycleList:
    """Rotate each cycle to start at its least atom, then sort by that atom."""
    return tuple(sorted((c.rotated_to_min() for c in cs), key=lambda c: c.head))


def normalize(e: PermExpr) -> PermExpr:
    return cycles_to_expr(canonical_cycles(perm_to_cycles(evaluate(e))))

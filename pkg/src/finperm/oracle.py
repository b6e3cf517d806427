"""Brute-force ground truth for tests: symmetric-group enumeration and random data.

Nothing here goes through the fast paths of :mod:`finperm.expr`; the
function-level semantics below build permutations as plain closures.
"""

from __future__ import annotations

import math
import random
from itertools import permutations, product
from typing import Callable, Iterable, Iterator

from .errors import BoundError, ContractError
from .expr import CompE, IdE, PermExpr, SwapE
from .gset import App, Lam, LambdaTerm, Var
from .perm import Atom, Permutation

MAX_ENUMERATION = 8


class PermEnumeration:
    """All bijections of ``universe`` that fix ``fixed``, lexicographic by image tuple."""

    def __init__(self, universe: Iterable[Atom], fixed: Iterable[Atom] = ()) -> None:
        self.universe = frozenset(universe)
        self.fixed = frozenset(fixed)
        if not self.fixed <= self.universe:
            raise ContractError(f"fixed atoms {sorted(self.fixed - self.universe)} are outside the universe")
        self.moving = tuple(sorted(self.universe - self.fixed))
        if len(self.moving) > MAX_ENUMERATION:
            raise BoundError(
                f"refusing to enumerate {len(self.moving)}! permutations (bound is {MAX_ENUMERATION})"
            )

    def __iter__(self) -> Iterator[Permutation]:
        for image in permutations(self.moving):
            yield Permutation.from_mapping(dict(zip(self.moving, image)))

    def __len__(self) -> int:
        return math.factorial(len(self.moving))


def enumerate_perms(universe: Iterable[Atom]) -> PermEnumeration:
    return PermEnumeration(universe)


def enumerate_fixing(universe: Iterable[Atom], fixed: Iterable[Atom]) -> PermEnumeration:
    return PermEnumeration(universe, fixed)


def random_expr(seed: int, atom_bound: int, max_depth: int) -> PermExpr:
    """Seeded random expression of depth at most ``max(max_depth, 1)``.

    Node kinds Id / Swap / Comp are drawn with weights 1 / 4 / 4; at the
    depth limit only leaves are drawn.
    """
    rng = random.Random(seed)

    def go(depth_left: int) -> PermExpr:
        kinds = ("id", "swap", "comp") if depth_left > 1 else ("id", "swap")
        kind = rng.choices(kinds, weights=(1, 4, 4)[: len(kinds)])[0]
        if kind == "id":
            return IdE()
        if kind == "swap":
            return SwapE(rng.randrange(atom_bound), rng.randrange(atom_bound))
        return CompE(go(depth_left - 1), go(depth_left - 1))

    return go(max_depth)


def random_perm(seed: int, atoms: Iterable[Atom]) -> Permutation:
    """Uniform random bijection of ``atoms``."""
    rng = random.Random(seed)
    atoms = sorted(set(atoms))
    image = atoms[:]
    rng.shuffle(image)
    return Permutation.from_mapping(dict(zip(atoms, image)))


def random_term(seed: int, atom_bound: int, max_depth: int) -> LambdaTerm:
    rng = random.Random(seed)

    def go(depth_left: int) -> LambdaTerm:
        kind = rng.choice(("var", "app", "lam")) if depth_left > 1 else "var"
        if kind == "var":
            return Var(rng.randrange(atom_bound))
        if kind == "app":
            return App(go(depth_left - 1), go(depth_left - 1))
        return Lam(rng.randrange(atom_bound), go(depth_left - 1))

    return go(max_depth)


def all_exprs(atoms: Iterable[Atom], max_depth: int) -> list[PermExpr]:
    """Every expression over ``atoms`` of depth at most ``max_depth`` (leaves have depth 1)."""
    atoms = sorted(set(atoms))
    leaves: list[PermExpr] = [IdE()] + [SwapE(a, b) for a, b in product(atoms, repeat=2)]
    level = leaves if max_depth >= 1 else []
    for _ in range(max_depth - 1):
        level = leaves + [CompE(p, q) for p, q in product(level, repeat=2)]
    return level


def all_terms(atoms: Iterable[Atom], max_depth: int) -> list[LambdaTerm]:
    """Every lambda term over ``atoms`` of depth at most ``max_depth`` (variables have depth 1)."""
    atoms = sorted(set(atoms))
    leaves: list[LambdaTerm] = [Var(a) for a in atoms]
    level = leaves if max_depth >= 1 else []
    for _ in range(max_depth - 1):
        level = (
            leaves
            + [App(s, t) for s, t in product(level, repeat=2)]
            + [Lam(a, t) for a, t in product(atoms, level)]
        )
    return level


# -- function-level semantics, independent of Permutation internals ---------


def swap_fn(a: Atom, b: Atom) -> Callable[[Atom], Atom]:
    return lambda z: b if z == a else a if z == b else z


def expr_fn(e: PermExpr) -> Callable[[Atom], Atom]:
    """Denotation of ``e`` as a closure: ``Comp(p, q)`` runs ``q`` then ``p``."""
    if isinstance(e, IdE):
        return lambda z: z
    if isinstance(e, SwapE):
        return swap_fn(e.a, e.b)
    p, q = expr_fn(e.left), expr_fn(e.right)
    return lambda z: p(q(z))


def fn_eq(f: Callable[[Atom], Atom], g: Callable[[Atom], Atom], probe: Iterable[Atom]) -> bool:
    return all(f(a) == g(a) for a in probe)

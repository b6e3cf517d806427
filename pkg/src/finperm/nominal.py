"""Supports and freshness, decided over finite sets of atoms.

Two notions of "A supports x" are offered:

* :func:`supports_check` -- every swap of two atoms outside ``A`` fixes ``x``;
* :func:`is_supp_check` -- every permutation fixing ``A`` pointwise fixes ``x``.

Both quantify over infinitely many atoms in principle. Here the swap form
ranges over a caller-supplied probe set and the permutation form over all
permutations of a small universe. The probes must contain every atom
relevant to ``x`` plus at least two atoms fresh for ``x`` and ``A``;
:func:`default_probe` builds such a set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Generic, Iterable, Sequence, TypeVar

from .cycles import cycle_to_transpositions, perm_to_cycles
from .errors import BoundError, ContractError
from .gset import (
    GAction,
    LambdaTerm,
    atom_action,
    discrete_action,
    free_vars,
    lambda_action,
    term_atoms,
)
from .oracle import MAX_ENUMERATION, enumerate_fixing
from .perm import Atom, AtomSet, Permutation, transposition

C = TypeVar("C")

MAX_SEARCH_UNIVERSE = 6


@dataclass(frozen=True)
class FiniteSupport:
    """A finite support, listed without duplicates in ascending order."""

    atoms: tuple[Atom, ...] = ()

    @classmethod
    def of(cls, atoms: Iterable[Atom]) -> FiniteSupport:
        return cls(tuple(sorted(set(atoms))))

    def __contains__(self, a: Atom) -> bool:
        return a in self.atoms

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def as_set(self) -> AtomSet:
        return frozenset(self.atoms)


def default_probe(relevant: Iterable[Atom], supp: Iterable[Atom]) -> AtomSet:
    """Relevant atoms plus two atoms above everything seen, minus ``supp``."""
    relevant, supp = frozenset(relevant), frozenset(supp)
    top = max(relevant | supp, default=-1)
    return (relevant | {top + 1, top + 2}) - supp


def supports_check(g: GAction[C], x: C, supp: Iterable[Atom], probe: Iterable[Atom]) -> bool:
    """Every swap of two distinct probe atoms fixes ``x``."""
    supp, probe = frozenset(supp), sorted(set(probe))
    clash = supp.intersection(probe)
    if clash:
        raise ContractError(f"probe atoms {sorted(clash)} belong to the candidate support")
    return all(g.eq(g.act(transposition(a, b), x), x) for a, b in combinations(probe, 2))


def decompose(p: Permutation) -> list[Permutation]:
    """Swaps whose left-to-right product is ``p``, taken from its disjoint cycles."""
    return [transposition(a, b) for c in perm_to_cycles(p) for a, b in cycle_to_transpositions(c)]


def act_by_transpositions(g: GAction[C], p: Permutation, x: C, swaps=None) -> C:
    """Act with ``p`` one swap at a time, the rightmost swap first."""
    for s in reversed(decompose(p) if swaps is None else swaps):
        x = g.act(s, x)
    return x


def is_supp_check(
    g: GAction[C],
    x: C,
    supp: Iterable[Atom],
    universe: Iterable[Atom],
    via_transpositions: bool = False,
) -> bool:
    """Every permutation of ``universe`` fixing ``supp`` pointwise fixes ``x``.

    With ``via_transpositions`` each permutation acts through its swap
    decomposition instead of directly.
    """
    supp, universe = frozenset(supp), frozenset(universe)
    if len(universe) > MAX_ENUMERATION:
        raise BoundError(f"universe of {len(universe)} atoms exceeds the bound {MAX_ENUMERATION}")
    if not supp <= universe:
        raise ContractError(f"support atoms {sorted(supp - universe)} are outside the universe")
    if via_transpositions:
        return all(g.eq(act_by_transpositions(g, p, x), x) for p in enumerate_fixing(universe, supp))
    return all(g.eq(g.act(p, x), x) for p in enumerate_fixing(universe, supp))


def is_fresh(g: GAction[C], a: Atom, supp_of_x: Iterable[Atom]) -> bool:
    return a not in frozenset(supp_of_x)


def lambda_support(t: LambdaTerm) -> FiniteSupport:
    return FiniteSupport.of(free_vars(t))


def min_support_search(g: GAction[C], x: C, universe: Iterable[Atom]) -> AtomSet:
    """Least supporting subset of ``universe``, by size then lexicographically.

    A brute-force test oracle only: least supports need not exist
    constructively, so the library never relies on this.
    """
    universe = sorted(set(universe))
    if len(universe) > MAX_SEARCH_UNIVERSE:
        raise BoundError(f"universe of {len(universe)} atoms exceeds the bound {MAX_SEARCH_UNIVERSE}")
    for size in range(len(universe) + 1):
        for cand in combinations(universe, size):
            if is_supp_check(g, x, cand, universe):
                return frozenset(cand)
    return frozenset(universe)


@dataclass(frozen=True)
class Nominal(Generic[C]):
    """An action together with a declared finite support for each element."""

    action: GAction[C]
    support: Callable[[C], FiniteSupport]
    atoms: Callable[[C], AtomSet]

    def check(self, x: C) -> bool:
        supp = self.support(x)
        return supports_check(self.action, x, supp, default_probe(self.atoms(x), supp))


def discrete_nominal(eq: Callable[[Any, Any], bool] = lambda u, v: u == v) -> Nominal:
    return Nominal(discrete_action(eq), lambda x: FiniteSupport(), lambda x: frozenset())


def atom_nominal() -> Nominal[Atom]:
    return Nominal(atom_action(), lambda a: FiniteSupport((a,)), lambda a: frozenset((a,)))


def lambda_nominal() -> Nominal[LambdaTerm]:
    return Nominal(lambda_action(), lambda_support, term_atoms)


# -- the two support notions, compared on a grid ------------------------------

GRID_TERM_ATOMS = (0, 1, 2, 3)
GRID_TERM_DEPTH = 3
GRID_UNIVERSE = (0, 1, 2, 3, 4)
GRID_FRESH = (5, 6)


@dataclass(frozen=True)
class Disagreement:
    term: Any
    supp: AtomSet
    is_supp: bool
    supports: bool


def support_equivalence_grid(
    g: GAction[C],
    samples: Sequence[C],
    universe: Iterable[Atom] = GRID_UNIVERSE,
    fresh: Iterable[Atom] = GRID_FRESH,
    extend_universe: bool = False,
    via_transpositions: bool = False,
) -> tuple[int, list[Disagreement]]:
    """Compare both notions for every sample and every subset ``A`` of ``universe``.

    The swap form probes ``universe - A`` plus ``fresh``. The permutation
    form enumerates ``universe`` itself, or ``universe | fresh`` when
    ``extend_universe`` is set, which guarantees two atoms outside ``A``.
    Returns the number of cases and the disagreements.
    """
    universe, fresh = frozenset(universe), frozenset(fresh)
    enum_universe = universe | fresh if extend_universe else universe
    subsets = [frozenset(c) for n in range(len(universe) + 1) for c in combinations(sorted(universe), n)]
    # enumerations are reused across samples
    perms = {
        a: [(p, decompose(p) if via_transpositions else None) for p in enumerate_fixing(enum_universe, a)]
        for a in subsets
    }
    cases, bad = 0, []
    for x in samples:
        for a in subsets:
            cases += 1
            swap_ok = supports_check(g, x, a, (universe - a) | fresh)
            if via_transpositions:
                perm_ok = all(g.eq(act_by_transpositions(g, p, x, sw), x) for p, sw in perms[a])
            else:
                perm_ok = all(g.eq(g.act(p, x), x) for p, _ in perms[a])
            if swap_ok != perm_ok:
                bad.append(Disagreement(x, a, perm_ok, swap_ok))
    return cases, bad

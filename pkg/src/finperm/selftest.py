"""Field self-test: group laws, normalization round trips, support equivalence."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .cycles import cycle_to_transpositions, normalize, perm_to_cycles, transpositions_to_perm
from .expr import atoms_of, evaluate, expr_equiv
from .gset import lambda_action
from .nominal import GRID_TERM_ATOMS, GRID_TERM_DEPTH, support_equivalence_grid
from .oracle import all_terms, expr_fn, random_expr, random_perm
from .perm import compose, identity, inverse, perm_eq, support


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _group_laws() -> str | None:
    atoms = range(10)
    e = identity()
    for seed in range(100):
        p, q, r = (random_perm(3 * seed + k, atoms) for k in range(3))
        if not perm_eq(compose(p, compose(q, r)), compose(compose(p, q), r)):
            return f"associativity fails for seed {seed}"
        if not (perm_eq(compose(e, p), p) and perm_eq(compose(p, e), p)):
            return f"unit law fails for seed {seed}"
        if not (perm_eq(compose(p, inverse(p)), e) and perm_eq(compose(inverse(p), p), e)):
            return f"inverse law fails for seed {seed}"
        if any(compose(p, q)(a) != p(q(a)) for a in atoms):
            return f"composition order wrong for seed {seed}"
    return None


def _round_trip() -> str | None:
    probe = range(10)
    for seed in range(100):
        e = random_expr(seed, 8, 6)
        f = evaluate(e)
        fn = expr_fn(e)
        if any(f(a) != fn(a) for a in probe):
            return f"evaluation disagrees with function semantics for seed {seed}"
        ts = [t for c in perm_to_cycles(f) for t in cycle_to_transpositions(c)]
        if not perm_eq(transpositions_to_perm(ts), f):
            return f"cycle decomposition does not rebuild the permutation for seed {seed}"
        n = normalize(e)
        if not expr_equiv(e, n):
            return f"normal form not equivalent for seed {seed}"
        if atoms_of(n) != support(f):
            return f"normal form mentions atoms outside the support for seed {seed}"
        if normalize(n) != n:
            return f"normal form is not a fixed point for seed {seed}"
    return None


def _support_grid() -> str | None:
    terms = all_terms(GRID_TERM_ATOMS, GRID_TERM_DEPTH)
    for via in (False, True):
        cases, bad = support_equivalence_grid(lambda_action(), terms, extend_universe=True, via_transpositions=via)
        if bad:
            d = bad[0]
            return f"{len(bad)}/{cases} disagreements, first at {d.term} with A={sorted(d.supp)}"
    return None


CHECKS: dict[str, list[tuple[str, Callable[[], str | None]]]] = {
    "quick": [("group laws", _group_laws), ("normalization round trip", _round_trip)],
}
CHECKS["full"] = CHECKS["quick"] + [("support equivalence grid", _support_grid)]


def selftest(level: str = "quick") -> list[CheckResult]:
    results = []
    for name, check in CHECKS[level]:
        start = time.perf_counter()
        failure = check()
        results.append(CheckResult(name, failure is None, failure or "ok", time.perf_counter() - start))
    return results

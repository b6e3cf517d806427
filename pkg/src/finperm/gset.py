"""Actions of finite permutations on carriers, and the lambda-term action.

A :class:`GAction` is an ordinary value pairing an ``act`` function with the
equality used on its carrier, so actions can be combined at runtime.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Generic, Iterable, Sequence, TypeVar, Union

from .perm import Atom, AtomSet, Permutation, apply, compose, identity, inverse

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


@dataclass(frozen=True)
class GAction(Generic[C]):
    act: Callable[[Permutation, C], C]
    eq: Callable[[C, C], bool] = operator.eq
    name: str = "action"

    def __call__(self, p: Permutation, x: C) -> C:
        return self.act(p, x)


# -- lambda terms -----------------------------------------------------------


@dataclass(frozen=True)
class Var:
    atom: Atom


@dataclass(frozen=True)
class App:
    fun: LambdaTerm
    arg: LambdaTerm


@dataclass(frozen=True)
class Lam:
    atom: Atom
    body: LambdaTerm


LambdaTerm = Union[Var, App, Lam]


def lambda_act(p: Permutation, t: LambdaTerm) -> LambdaTerm:
    """Rename every atom of ``t`` through ``p``, binders included."""
    if isinstance(t, Var):
        return Var(apply(p, t.atom))
    if isinstance(t, App):
        return App(lambda_act(p, t.fun), lambda_act(p, t.arg))
    if isinstance(t, Lam):
        return Lam(apply(p, t.atom), lambda_act(p, t.body))
    raise TypeError(f"not a lambda term: {t!r}")


def free_vars(t: LambdaTerm) -> AtomSet:
    if isinstance(t, Var):
        return frozenset((t.atom,))
    if isinstance(t, App):
        return free_vars(t.fun) | free_vars(t.arg)
    if isinstance(t, Lam):
        return free_vars(t.body) - {t.atom}
    raise TypeError(f"not a lambda term: {t!r}")


def term_atoms(t: LambdaTerm) -> AtomSet:
    """All atoms written in ``t``, bound or free."""
    if isinstance(t, Var):
        return frozenset((t.atom,))
    if isinstance(t, App):
        return term_atoms(t.fun) | term_atoms(t.arg)
    return term_atoms(t.body) | {t.atom}


def _nameless(t: LambdaTerm, env: tuple) -> tuple:
    # bound occurrences become binder distances; free ones keep their atom
    if isinstance(t, Var):
        for i, a in enumerate(env):
            if a == t.atom:
                return ("b", i)
        return ("f", t.atom)
    if isinstance(t, App):
        return ("app", _nameless(t.fun, env), _nameless(t.arg, env))
    return ("lam", _nameless(t.body, (t.atom, *env)))


def alpha_key(t: LambdaTerm) -> tuple:
    return _nameless(t, ())


def alpha_eq(s: LambdaTerm, t: LambdaTerm) -> bool:
    return s == t or alpha_key(s) == alpha_key(t)


# -- actions ----------------------------------------------------------------


def atom_action() -> GAction[Atom]:
    return GAction(apply, operator.eq, "atoms")


def atomset_action() -> GAction[AtomSet]:
    """Pointwise image of finite atom sets."""
    return GAction(lambda p, s: frozenset(apply(p, a) for a in s), operator.eq, "atom sets")


def perm_action() -> GAction[Permutation]:
    """The group acting on itself by left multiplication."""
    return GAction(compose, operator.eq, "permutations")


def lambda_action() -> GAction[LambdaTerm]:
    """Renaming action on terms; carrier equality is alpha-equivalence."""
    return GAction(lambda_act, alpha_eq, "lambda terms")


def discrete_action(eq: Callable[[Any, Any], bool] = operator.eq) -> GAction:
    return GAction(lambda p, x: x, eq, "discrete")


def product_action(ga: GAction[A], gb: GAction[B]) -> GAction[tuple]:
    return GAction(
        lambda p, xy: (ga.act(p, xy[0]), gb.act(p, xy[1])),
        lambda u, v: ga.eq(u[0], v[0]) and gb.eq(u[1], v[1]),
        f"({ga.name} x {gb.name})",
    )


@dataclass(frozen=True)
class Left(Generic[A]):
    value: A


@dataclass(frozen=True)
class Right(Generic[B]):
    value: B


def coproduct_action(ga: GAction[A], gb: GAction[B]) -> GAction[Union[Left, Right]]:
    def act(p, x):
        if isinstance(x, Left):
            return Left(ga.act(p, x.value))
        return Right(gb.act(p, x.value))

    def eq(u, v):
        if isinstance(u, Left) and isinstance(v, Left):
            return ga.eq(u.value, v.value)
        if isinstance(u, Right) and isinstance(v, Right):
            return gb.eq(u.value, v.value)
        return False

    return GAction(act, eq, f"({ga.name} + {gb.name})")


def conjugate_action(ga: GAction[A], gb: GAction[B], probes: Iterable[A]) -> GAction[Callable]:
    """Action on functions ``A -> B`` by ``(g.F)(x) = g.F(g^-1 . x)``.

    Function equality cannot be decided, so two functions count as equal
    when they agree (under ``gb.eq``) on every point of ``probes``.
    """
    probes = tuple(probes)

    def act(g, f):
        g_inv = inverse(g)
        return lambda x: gb.act(g, f(ga.act(g_inv, x)))

    def eq(f, h):
        return all(gb.eq(f(x), h(x)) for x in probes)

    return GAction(act, eq, f"({ga.name} -> {gb.name})")


# -- law checking -----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    law: str
    sample: Any
    perms: tuple[Permutation, ...]


@dataclass
class LawReport:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.checked} checks, {status}"


def check_action_laws(g: GAction[C], samples: Sequence[C], perms: Sequence[Permutation]) -> LawReport:
    """Identity law on every sample; compatibility on samples x ordered pairs of ``perms``."""
    report = LawReport()
    e = identity()
    for x in samples:
        report.checked += 1
        if not g.eq(g.act(e, x), x):
            report.violations.append(Violation("identity", x, (e,)))
        for p, q in product(perms, repeat=2):
            report.checked += 1
            if not g.eq(g.act(p, g.act(q, x)), g.act(compose(p, q), x)):
                report.violations.append(Violation("compatibility", x, (p, q)))
    return report


def check_equivariant(
    f: Callable[[A], B],
    ga: GAction[A],
    gb: GAction[B],
    samples: Sequence[A],
    perms: Sequence[Permutation],
) -> LawReport:
    report = LawReport()
    for x, p in product(samples, perms):
        report.checked += 1
        if not gb.eq(f(ga.act(p, x)), gb.act(p, f(x))):
            report.violations.append(Violation("equivariance", x, (p,)))
    return report

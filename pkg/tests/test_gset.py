import operator

from hypothesis import given, strategies as st

from conftest import perms
from finperm import apply, compose, identity, transposition
from finperm.gset import (
    App,
    GAction,
    Lam,
    Left,
    Right,
    Var,
    alpha_eq,
    atom_action,
    atomset_action,
    check_action_laws,
    check_equivariant,
    conjugate_action,
    coproduct_action,
    discrete_action,
    free_vars,
    lambda_act,
    lambda_action,
    perm_action,
    product_action,
    term_atoms,
)
from finperm.oracle import random_perm, random_term

PERMS = [identity(), transposition(1, 2)] + [random_perm(s, range(6)) for s in range(6)]
TERMS = [random_term(s, 6, 4) for s in range(100)]


def terms(atom_bound=6):
    atom = st.integers(0, atom_bound - 1)
    return st.recursive(
        st.builds(Var, atom),
        lambda kids: st.one_of(st.builds(App, kids, kids), st.builds(Lam, atom, kids)),
        max_leaves=10,
    )


def test_discrete_action():
    d = discrete_action()
    assert d.act(transposition(1, 2), 42) == 42
    assert d.act(transposition(1, 2), "ab") == "ab"
    assert check_action_laws(d, [0, "x", (1, 2)], PERMS).ok


def test_product_action():
    g = product_action(lambda_action(), lambda_action())
    # swap componentwise: Var 1 -> Var 2, Var 3 untouched
    assert g.act(transposition(1, 2), (Var(1), Var(3))) == (Var(2), Var(3))
    assert g.eq(g.act(identity(), (Var(1), Lam(2, Var(2)))), (Var(1), Lam(2, Var(2))))
    proj = check_equivariant(operator.itemgetter(0), g, lambda_action(), list(zip(TERMS, TERMS[1:])), PERMS)
    assert proj.ok


def test_coproduct_action():
    g = coproduct_action(atom_action(), lambda_action())
    p = transposition(3, 4)
    assert g.act(p, Left(3)) == Left(4)
    assert g.act(p, Right(Var(4))) == Right(Var(3))
    assert not g.eq(Left(1), Right(Var(1)))
    samples = [Left(a) for a in range(6)] + [Right(t) for t in TERMS[:20]]
    assert all(type(g.act(q, x)) is type(x) for x in samples for q in PERMS)
    assert check_action_laws(g, samples, PERMS).ok
    assert check_equivariant(Left, atom_action(), g, list(range(6)), PERMS).ok
    assert check_equivariant(Right, lambda_action(), g, TERMS[:20], PERMS).ok


def test_conjugate_action_identity_and_constant():
    probes = range(10)
    g = conjugate_action(atom_action(), atom_action(), probes)
    square = lambda a: (a * a) % 10
    assert g.eq(g.act(identity(), square), square)
    const5 = lambda a: 5
    moved = g.act(transposition(5, 6), const5)
    assert [moved(x) for x in probes] == [6] * 10


def test_conjugate_action_fixes_commuting_function():
    probes = range(8)
    g = conjugate_action(atom_action(), atom_action(), probes)
    q, h = transposition(1, 2), transposition(3, 4)
    assert compose(q, h) == compose(h, q)
    f = lambda a: apply(q, a)
    assert g.eq(g.act(h, f), f)
    assert not g.eq(g.act(transposition(2, 3), f), f)


def test_conjugate_action_laws():
    probes = range(8)
    g = conjugate_action(atom_action(), atom_action(), probes)
    fns = [lambda a: a, lambda a: 5, lambda a: (a + 1) % 8, lambda a: apply(transposition(0, 7), a)]
    assert check_action_laws(g, fns, PERMS[:5]).ok


def test_lambda_act():
    s = transposition(1, 2)
    assert lambda_act(s, Lam(1, Var(1))) == Lam(2, Var(2))
    assert lambda_act(s, App(Var(1), Var(3))) == App(Var(2), Var(3))


@given(terms())
def test_lambda_identity_is_structural(t):
    assert lambda_act(identity(), t) == t


def test_free_vars():
    assert free_vars(Lam(1, Var(1))) == frozenset()
    assert free_vars(App(Var(1), Lam(2, Var(3)))) == {1, 3}
    assert term_atoms(App(Var(1), Lam(2, Var(3)))) == {1, 2, 3}


@given(terms(), perms(range(6)))
def test_free_vars_equivariant(t, p):
    assert free_vars(lambda_act(p, t)) == {apply(p, a) for a in free_vars(t)}


def test_alpha_eq():
    assert alpha_eq(Lam(1, Var(1)), Lam(2, Var(2)))
    assert not alpha_eq(Lam(1, Var(2)), Lam(3, Var(3)))
    assert not alpha_eq(Lam(1, Var(3)), Lam(2, Var(4)))
    assert alpha_eq(Lam(1, Lam(2, App(Var(1), Var(2)))), Lam(2, Lam(1, App(Var(2), Var(1)))))
    assert not alpha_eq(Lam(1, Lam(1, Var(1))), Lam(1, Lam(2, Var(1))))


def test_shipped_actions_obey_laws():
    atoms = list(range(8))
    sets = [frozenset(), frozenset({1}), frozenset({0, 3, 5})]
    assert check_action_laws(atom_action(), atoms, PERMS).ok
    assert check_action_laws(atomset_action(), sets, PERMS).ok
    assert check_action_laws(perm_action(), PERMS, PERMS).ok
    assert check_action_laws(lambda_action(), TERMS, PERMS).ok
    assert check_action_laws(product_action(atom_action(), lambda_action()), list(zip(atoms, TERMS)), PERMS).ok


def test_broken_action_is_reported():
    broken = GAction(lambda p, x: 0, operator.eq, "constant")
    report = check_action_laws(broken, [1, 2, 3], PERMS[:2])
    assert not report.ok
    assert {v.law for v in report.violations} == {"identity"}
    assert sum(v.law == "identity" for v in report.violations) == 3


def test_equivariance_checks():
    fv = check_equivariant(free_vars, lambda_action(), atomset_action(), TERMS, PERMS)
    assert fv.ok and fv.checked == len(TERMS) * len(PERMS)
    const3 = check_equivariant(lambda a: 3, atom_action(), atom_action(), list(range(6)), PERMS)
    assert not const3.ok
    moving3 = {v.perms[0] for v in const3.violations}
    assert all(apply(p, 3) != 3 for p in moving3)


def test_composition_of_equivariant_maps():
    sets = [free_vars(t) for t in TERMS]
    assert check_equivariant(free_vars, lambda_action(), atomset_action(), TERMS, PERMS).ok
    assert check_equivariant(len, atomset_action(), discrete_action(), sets, PERMS).ok
    size_of_fv = lambda t: len(free_vars(t))
    assert check_equivariant(size_of_fv, lambda_action(), discrete_action(), TERMS, PERMS).ok

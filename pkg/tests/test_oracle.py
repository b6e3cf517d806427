import math
from itertools import product

import pytest

from finperm import BoundError, CompE, ContractError, IdE, SwapE, evaluate, identity, transposition
from finperm.oracle import (
    all_exprs,
    all_terms,
    enumerate_fixing,
    enumerate_perms,
    random_expr,
    random_perm,
)
from finperm.expr import depth
from finperm.perm import compose, support


def test_small_symmetric_groups():
    assert list(enumerate_perms({1, 2})) == [identity(), transposition(1, 2)]
    assert len(list(enumerate_perms({1, 2, 3}))) == 6
    assert list(enumerate_perms(set())) == [identity()]


@pytest.mark.parametrize("n", range(7))
def test_enumeration_is_factorial_and_valid(n):
    universe = range(10, 10 + n)
    items = list(enumerate_perms(universe))
    assert len(items) == len(enumerate_perms(universe)) == math.factorial(n)
    assert len(set(items)) == len(items)
    for p in items:
        assert support(p) <= set(universe)
        assert all(a != b for a, b in p.items())
        assert sorted(b for _, b in p.items()) == sorted(a for a, _ in p.items())


def test_enumeration_order_is_lexicographic_by_image():
    images = [tuple(p(a) for a in range(4)) for p in enumerate_perms(range(4))]
    assert images == sorted(images)


def test_enumerate_fixing():
    items = list(enumerate_fixing({4, 5, 6, 7}, {5}))
    assert len(items) == 6 and all(p(5) == 5 for p in items)
    assert list(enumerate_fixing({1, 2, 3}, {1, 2, 3})) == [identity()]
    assert list(enumerate_fixing({1, 2, 3}, set())) == list(enumerate_perms({1, 2, 3}))


def test_enumeration_bounds():
    with pytest.raises(BoundError):
        enumerate_perms(range(9))
    with pytest.raises(ContractError):
        enumerate_fixing({1, 2}, {3})
    assert len(enumerate_fixing(range(10), {0, 1})) == math.factorial(8)


@pytest.mark.parametrize("n", range(1, 5))
def test_group_closure(n):
    items = list(enumerate_perms(range(n)))
    members = set(items)
    assert all(compose(p, q) in members for p, q in product(items, repeat=2))


def test_random_expr_deterministic():
    assert random_expr(42, 6, 5) == random_expr(42, 6, 5)
    assert random_expr(42, 6, 5) != random_expr(43, 6, 5)


def test_random_expr_depth_and_leaves():
    for seed in range(50):
        assert isinstance(random_expr(seed, 6, 0), (IdE, SwapE))
        e = random_expr(seed, 6, 4)
        assert depth(e) <= 4


def test_random_expr_mix():
    results = set()
    cancelling = 0
    for seed in range(1000):
        e = random_expr(seed, 6, 4)
        p = evaluate(e)
        results.add(p)
        if isinstance(e, CompE) and not p:
            cancelling += 1
    assert cancelling > 0
    assert len(results) > 100


def test_random_perm():
    p = random_perm(3, range(8))
    assert support(p) <= set(range(8))
    assert random_perm(3, range(8)) == p


def test_exhaustive_generators():
    assert len(all_exprs(range(3), 1)) == 10
    assert len(all_exprs(range(3), 2)) == 110
    assert len(all_terms(range(4), 1)) == 4
    assert len(all_terms(range(4), 2)) == 36

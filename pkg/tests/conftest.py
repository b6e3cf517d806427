import pytest
from hypothesis import strategies as st

from finperm import CompE, IdE, Permutation, SwapE


def example1(x):
    """(x + 2) mod 6 on 0..5, identity above."""
    return (x + 2) % 6 if x <= 5 else x


F_SWAPS = CompE(CompE(SwapE(1, 3), SwapE(3, 5)), CompE(SwapE(0, 2), SwapE(2, 4)))


@pytest.fixture
def example1_perm():
    return Permutation.from_mapping({x: example1(x) for x in range(6)})


@pytest.fixture
def f_swaps_expr():
    return F_SWAPS


@st.composite
def perms(draw, atoms=range(10)):
    atoms = list(atoms)
    image = draw(st.permutations(atoms))
    return Permutation.from_mapping(dict(zip(atoms, image)))


def exprs(atom_bound=6, max_leaves=12):
    atom = st.integers(0, atom_bound - 1)
    leaves = st.one_of(st.just(IdE()), st.builds(SwapE, atom, atom))
    return st.recursive(leaves, lambda kids: st.builds(CompE, kids, kids), max_leaves=max_leaves)

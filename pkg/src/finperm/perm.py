"""Atoms and the group of finitely supported permutations of atoms.

Atoms are plain non-negative ``int`` values. A :class:`Permutation` stores
only the atoms it moves, in both directions, so two permutations are
structurally equal exactly when they are extensionally equal.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ContractError

Atom = int
AtomSet = frozenset


def check_atom(a) -> Atom:
    if isinstance(a, bool) or not isinstance(a, int) or a < 0:
        raise ContractError(f"atom must be a non-negative integer, got {a!r}")
    return a


class Permutation:
    """A bijection on atoms that moves only finitely many of them.

    Build values with :func:`identity`, :func:`transposition`,
    :meth:`from_mapping` or :meth:`from_json`; the constructor is private.
    Instances are immutable and hashable.
    """

    __slots__ = ("_fwd", "_bwd", "_key")

    def __init__(self, fwd: dict[Atom, Atom], _trusted: bool = False) -> None:
        if not _trusted:
            raise TypeError("use identity(), transposition() or Permutation.from_mapping()")
        self._fwd = fwd
        self._bwd = {b: a for a, b in fwd.items()}
        self._key = tuple(sorted(fwd.items()))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Atom, Atom]) -> Permutation:
        """Build from a finite map; fixed-point entries are dropped.

        The map must be a bijection of its own key set onto itself.
        """
        fwd = {}
        for a, b in mapping.items():
            check_atom(a)
            check_atom(b)
            if a != b:
                fwd[a] = b
        if set(fwd.values()) != set(fwd) or len(set(fwd.values())) != len(fwd):
            raise ContractError(f"mapping is not a bijection on its domain: {dict(mapping)!r}")
        return cls(fwd, _trusted=True)

    @classmethod
    def from_json(cls, data) -> Permutation:
        """Inverse of :meth:`to_json`; rejects fixed points and non-bijections."""
        if not isinstance(data, list):
            raise ContractError("permutation JSON must be an array of [from, to] pairs")
        fwd: dict[Atom, Atom] = {}
        for entry in data:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ContractError(f"malformed pair {entry!r}")
            a, b = check_atom(entry[0]), check_atom(entry[1])
            if a == b:
                raise ContractError(f"fixed-point entry [{a}, {b}] is not allowed")
            if a in fwd:
                raise ContractError(f"atom {a} mapped twice")
            fwd[a] = b
        if len(set(fwd.values())) != len(fwd):
            raise ContractError("map is not injective")
        if set(fwd.values()) != set(fwd):
            missing = sorted(set(fwd.values()) ^ set(fwd))
            raise ContractError(f"map is not a bijection on its domain; unmatched atoms {missing}")
        return cls(fwd, _trusted=True)

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in self._key]

    def items(self) -> tuple[tuple[Atom, Atom], ...]:
        """Moved atoms and their images, sorted by atom."""
        return self._key

    def __call__(self, a: Atom) -> Atom:
        return self._fwd.get(a, a)

    def preimage(self, a: Atom) -> Atom:
        return self._bwd.get(a, a)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __len__(self) -> int:
        return len(self._key)

    def __bool__(self) -> bool:
        return bool(self._key)

    def __repr__(self) -> str:
        return f"Permutation.from_mapping({dict(self._key)!r})"


_IDENTITY = Permutation({}, _trusted=True)


def identity() -> Permutation:
    return _IDENTITY


def transposition(a: Atom, b: Atom) -> Permutation:
    """Swap ``a`` and ``b``; ``transposition(a, a)`` is the identity."""
    check_atom(a)
    check_atom(b)
    if a == b:
        return _IDENTITY
    return Permutation({a: b, b: a}, _trusted=True)


def apply(p: Permutation, a: Atom) -> Atom:
    return p._fwd.get(a, a)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation ``a -> p(q(a))``: ``q`` acts first."""
    fwd = {}
    for a in p._fwd.keys() | q._fwd.keys():
        b = p._fwd.get(q._fwd.get(a, a), q._fwd.get(a, a))
        if a != b:
            fwd[a] = b
    return Permutation(fwd, _trusted=True)


def inverse(p: Permutation) -> Permutation:
    return Permutation(dict(p._bwd), _trusted=True)


def support(p: Permutation) -> AtomSet:
    return frozenset(p._fwd)


def perm_eq(p: Permutation, q: Permutation) -> bool:
    """Extensional equality, decided on the union of the two supports."""
    return all(apply(p, a) == apply(q, a) for a in p._fwd.keys() | q._fwd.keys())


def compose_all(perms: Iterable[Permutation]) -> Permutation:
    """Left-to-right product: the last permutation acts first."""
    result = _IDENTITY
    for p in perms:
        result = compose(result, p)
    return result

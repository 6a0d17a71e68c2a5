"""Finite groups given by Cayley tables, their subgroups and linear characters.

Elements are the integers ``0..n-1`` of the input table; the identity is
detected, not assumed to be ``0``.  A character of a subgroup is stored
additively as residues modulo the exponent ``N`` of the *parent* group, so
``k`` stands for the root of unity ``exp(2*pi*i*k/N)``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainMismatch, NotACharacter, NotAGroup, NotASubgroup, UnsupportedKind

__all__ = [
    "Group",
    "Subgroup",
    "Character",
    "build_group",
    "named_group",
    "subgroup_closure",
    "make_subgroup",
    "conjugate_subgroup",
    "normalizer",
    "double_cosets",
    "one_dim_characters",
    "make_character",
    "trivial_character",
    "conjugate_character",
    "restrict_character",
    "multiply_characters",
    "canonical_conjugate",
    "left_cosets",
]


class Group:
    """A finite group with an explicit multiplication table.

    ``cayley[a][b]`` is the index of the product ``a*b``.  Instances are
    immutable; use :func:`build_group` to construct a validated one.
    """

    def __init__(self, table: tuple[tuple[int, ...], ...], identity: int, inverse: tuple[int, ...]):
        self.table = table
        self.order = len(table)
        self.identity = identity
        self.inverse = inverse
        self.exponent = math.lcm(*(self.element_order(g) for g in range(self.order)))
        self._hash = hash(table)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return self._hash == other._hash and self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Group(order={self.order}, exponent={self.exponent})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def power(self, g: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.table[x][g]
        return x

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in range(a))

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(self.elements))

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, (self.identity,))


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: Group
    elements: tuple[int, ...]

    def __repr__(self):
        return f"Subgroup({list(self.elements)})"

    @cached_property
    def _hash(self) -> int:
        return hash((self.group, self.elements))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements and self.group == other.group

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.members

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def position(self) -> dict[int, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.group.order

    def issubset(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.group, tuple(sorted(self.members & other.members)))


@dataclass(frozen=True)
class Character:
    """A homomorphism from ``domain`` to Z/N, N the exponent of the parent group.

    ``values[i]`` is the residue at ``domain.elements[i]``.
    """

    domain: Subgroup
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.domain.group.exponent

    def __call__(self, g: int) -> int:
        return self.values[self.domain.position[g]]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain.elements, self.values))

    @property
    def is_trivial(self) -> bool:
        return not any(self.values)

    def __repr__(self):
        return f"Character({self.as_dict()} mod {self.modulus})"


# --- construction -----------------------------------------------------------


def build_group(cayley: Sequence[Sequence[int]]) -> Group:
    """Validate a Cayley table and return the group it describes.

    Raises :class:`NotAGroup` when the table is not square, not a Latin
    square, has no two-sided identity, or is not associative.
    """
    try:
        table = tuple(tuple(int(x) for x in row) for row in cayley)
    except (TypeError, ValueError) as exc:
        raise NotAGroup(f"Cayley table must be a list of integer rows: {exc}") from None
    n = len(table)
    if n == 0:
        raise NotAGroup("empty Cayley table")
    full = set(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        if set(row) != full:
            raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")

    identity = next(
        (e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))),
        None,
    )
    if identity is None:
        raise NotAGroup("no identity element")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"not associative at ({a}, {b}, {c})")
    # Latin square + identity: each row contains the identity exactly once.
    inverse = tuple(table[a].index(identity) for a in range(n))
    return Group(table, identity, inverse)


def named_group(kind: str, m: int) -> Group:
    """Cyclic group of order ``m`` or dihedral group of order ``2m``.

    Dihedral elements are numbered ``i + m*j`` for ``r^i s^j``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if kind == "cyclic":
        return build_group([[(i + j) % m for j in range(m)] for i in range(m)])
    if kind == "dihedral":
        def mul(a, b):
            i, s = a % m, a // m
            j, t = b % m, b // m
            k = (i + j) % m if s == 0 else (i - j) % m
            return k + m * ((s + t) % 2)

        return build_group([[mul(a, b) for b in range(2 * m)] for a in range(2 * m)])
    raise UnsupportedKind(f"unknown group family {kind!r}")


def subgroup_closure(G: Group, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = G.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(G, tuple(sorted(seen)))


def make_subgroup(G: Group, elements: Iterable[int]) -> Subgroup:
    """Validated subgroup from an explicit element list."""
    elems = sorted(set(elements))
    if any(not 0 <= g < G.order for g in elems):
        raise NotASubgroup(f"elements out of range: {elems}")
    members = set(elems)
    if G.identity not in members:
        raise NotASubgroup("subgroup must contain the identity")
    for a in elems:
        for b in elems:
            if G.mul(a, b) not in members:
                raise NotASubgroup(f"{elems} is not closed under multiplication")
    return Subgroup(G, tuple(elems))


# --- subgroups --------------------------------------------------------------


def conjugate_subgroup(g: int, H: Subgroup) -> Subgroup:
    """``g H g^-1``."""
    G = H.group
    return Subgroup(G, tuple(sorted(G.conj(g, h) for h in H.elements)))


@functools.cache
def normalizer(H: Subgroup) -> Subgroup:
    G = H.group
    return Subgroup(G, tuple(g for g in G.elements if conjugate_subgroup(g, H) == H))


@functools.cache
def canonical_conjugate(H: Subgroup) -> Subgroup:
    """The conjugate of ``H`` whose sorted element list is lexicographically least."""
    G = H.group
    return min((conjugate_subgroup(g, H) for g in G.elements), key=lambda S: S.elements)


@functools.cache
def conjugators(H: Subgroup, K: Subgroup) -> tuple[int, ...]:
    """All ``c`` with ``c^-1 H c == K``."""
    G = H.group
    return tuple(c for c in G.elements if conjugate_subgroup(G.inv(c), H) == K)


@functools.cache
def left_cosets(H: Subgroup) -> tuple[tuple[int, ...], dict[int, int]]:
    """Canonical transversal of ``G/H`` and the map element -> coset position.

    The coset ``H`` itself comes first, represented by the identity; the
    remaining cosets are represented by their least element and ordered by it.
    """
    G = H.group
    index: dict[int, int] = {}
    mins = []
    for g in G.elements:
        if g in index:
            continue
        coset = [G.mul(g, h) for h in H.elements]
        for x in coset:
            index[x] = len(mins)
        mins.append(min(coset))
    base = index[G.identity]
    order = [base] + sorted((i for i in range(len(mins)) if i != base), key=mins.__getitem__)
    position = {old: new for new, old in enumerate(order)}
    reps = tuple(G.identity if i == base else mins[i] for i in order)
    return reps, {g: position[i] for g, i in index.items()}


def double_cosets(H: Subgroup, K: Subgroup) -> list[int]:
    """One representative per double coset ``H g K``, identity first."""
    G = H.group
    if K.group != G:
        raise DomainMismatch("subgroups of different groups")
    seen: set[int] = set()
    reps = []
    for g in [G.identity, *(x for x in G.elements if x != G.identity)]:
        if g in seen:
            continue
        reps.append(g)
        for h in H.elements:
            hg = G.mul(h, g)
            seen.update(G.mul(hg, k) for k in K.elements)
    return reps


# --- characters -------------------------------------------------------------


def _generators(H: Subgroup) -> list[int]:
    G = H.group
    gens: list[int] = []
    span = {G.identity}
    for g in H.elements:
        if g not in span:
            gens.append(g)
            span = subgroup_closure(G, gens).members
    return gens


def _extend(H: Subgroup, gens: Sequence[int], images: Sequence[int]) -> tuple[int, ...] | None:
    # Propagate along the Cayley graph; any inconsistency means no homomorphism.
    G = H.group
    N = G.exponent
    value = {G.identity: 0}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s, vs in zip(gens, images):
            y = G.mul(x, s)
            v = (value[x] + vs) % N
            if y not in value:
                value[y] = v
                queue.append(y)
            elif value[y] != v:
                return None
    return tuple(value[g] for g in H.elements)


@functools.cache
def one_dim_characters(H: Subgroup) -> tuple[Character, ...]:
    """All homomorphisms ``H -> Z/N``; the trivial character comes first."""
    G = H.group
    N = G.exponent
    gens = _generators(H)
    choices = []
    for s in gens:
        step = N // G.element_order(s)
        choices.append(range(0, N, step))
    found = set()
    for images in itertools.product(*choices):
        values = _extend(H, gens, images)
        if values is not None:
            found.add(values)
    return tuple(Character(H, v) for v in sorted(found))


def make_character(H: Subgroup, values: dict[int, int]) -> Character:
    """Validated character from an element -> residue map (missing elements map to 0)."""
    N = H.group.exponent
    extra = set(values) - H.members
    if extra:
        raise NotACharacter(f"character given on elements outside the subgroup: {sorted(extra)}")
    vals = tuple(int(values.get(g, 0)) % N for g in H.elements)
    chi = Character(H, vals)
    G = H.group
    for a in H.elements:
        for b in H.elements:
            if chi(G.mul(a, b)) != (chi(a) + chi(b)) % N:
                raise NotACharacter(f"not a homomorphism at ({a}, {b})")
    return chi


def trivial_character(H: Subgroup) -> Character:
    return Character(H, (0,) * len(H))


def conjugate_character(a: int, chi: Character) -> Character:
    """The character ``g -> chi(a^-1 g a)`` on ``a H a^-1``."""
    G = chi.domain.group
    ai = G.inv(a)
    D = conjugate_subgroup(a, chi.domain)
    return Character(D, tuple(chi(G.conj(ai, g)) for g in D.elements))


def restrict_character(chi: Character, S: Subgroup) -> Character:
    if not S.issubset(chi.domain):
        raise DomainMismatch(f"{S} is not contained in {chi.domain}")
    return Character(S, tuple(chi(g) for g in S.elements))


def multiply_characters(chi1: Character, chi2: Character) -> Character:
    if chi1.domain != chi2.domain:
        raise DomainMismatch("characters live on different subgroups")
    N = chi1.modulus
    return Character(chi1.domain, tuple((a + b) % N for a, b in zip(chi1.values, chi2.values)))

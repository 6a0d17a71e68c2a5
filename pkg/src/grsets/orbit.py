"""Transitive (G,r)-sets.

A transitive (G,r)-set is the coset space ``G/H`` together with a weight
vector at every point and a linear character of the isotropy group at every
point.  Only the character ``chi`` at the base point ``H`` is stored; the
point ``bH`` carries the conjugate ``g -> chi(b^-1 g b)`` of ``bHb^-1``.

Every :class:`Orbit` is kept in canonical form, so two orbits are isomorphic
(there is a ``G``-equivariant bijection preserving weights and characters)
exactly when they compare equal.
"""

from __future__ import annotations

import functools
import math
import operator
from typing import Callable, Mapping, Sequence

from .errors import (
    BadTransversal,
    CharacterDomainMismatch,
    GroupMismatch,
    NegativeWeight,
    NonFiniteWeight,
)
from .group import (
    Character,
    Group,
    Subgroup,
    canonical_conjugate,
    conjugate_subgroup,
    conjugators,
    double_cosets,
    left_cosets,
    trivial_character,
)

Weight = tuple[int, ...]

__all__ = [
    "Orbit",
    "make_orbit",
    "canonicalize",
    "orbit_product",
    "unit_orbit",
    "fixed_point",
    "is_positively_weighted",
    "exceeds_bound",
]


class Orbit:
    """Canonical encoding of one transitive (G,r)-set.

    Attributes mirror the encoding: ``stabilizer`` is the canonical
    representative of the isotropy conjugacy class, ``transversal`` lists the
    canonical coset representatives (identity first), ``weights[i]`` is the
    weight of ``transversal[i] * stabilizer`` and ``character`` is the
    character at the base point.
    """

    __slots__ = ("group", "stabilizer", "character", "transversal", "weights", "_index", "_key", "_hash")

    def __init__(self, stabilizer: Subgroup, character: Character, weights: tuple[Weight, ...]):
        self.group = stabilizer.group
        self.stabilizer = stabilizer
        self.character = character
        self.transversal, self._index = left_cosets(stabilizer)
        self.weights = weights
        self._key = (stabilizer.elements, weights, character.values)
        self._hash = hash(self._key)

    def __eq__(self, other):
        if not isinstance(other, Orbit):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key and self.group == other.group

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"Orbit(H={list(self.stabilizer.elements)}, chi={list(self.character.values)}, "
            f"w={[list(w) for w in self.weights]})"
        )

    @property
    def size(self) -> int:
        return len(self.transversal)

    @property
    def r(self) -> int:
        return len(self.weights[0])

    @property
    def is_fixed_point(self) -> bool:
        return self.stabilizer.is_whole

    def sort_key(self):
        return (self.size, self.weights, self.stabilizer.elements, self.character.values)

    def weight_at(self, g: int) -> Weight:
        """Weight of the point ``g * stabilizer``."""
        return self.weights[self._index[g]]

    def weights_by_element(self) -> list[Weight]:
        """``[weight_at(g) for g in G]``."""
        idx, ws = self._index, self.weights
        return [ws[idx[g]] for g in self.group.elements]

    def is_positively_weighted(self) -> bool:
        return is_positively_weighted(self)

    def exceeds_bound(self, bound: Sequence[int]) -> bool:
        return exceeds_bound(self, bound)


@functools.cache
def _transport_plan(H: Subgroup) -> tuple[Subgroup, tuple[tuple[int, Callable], ...]]:
    """Canonical conjugate ``K`` of ``H`` and, for every ``c`` with ``c^-1 H c = K``,
    a getter picking the weights of ``b c^-1 H`` for ``b`` in the transversal of ``G/K``."""
    G = H.group
    K = canonical_conjugate(H)
    reps = left_cosets(K)[0]
    plan = []
    for c in conjugators(H, K):
        # dK -> d c^-1 H is G-equivariant and sends the base point to c^-1 H.
        ci = G.inv(c)
        idx = [G.table[b][ci] for b in reps]
        getter = operator.itemgetter(*idx) if len(idx) > 1 else (lambda ws, i=idx[0]: (ws[i],))
        plan.append((c, getter))
    return K, tuple(plan)


def _canonical(H: Subgroup, chi_at: Callable[[int], int], weights: Sequence[Weight]) -> Orbit:
    """Least encoding over all identifications ``G/K -> G/H``, K the canonical conjugate.

    ``weights[x]`` is the weight of the point ``xH``, listed for every element ``x``.
    """
    G = H.group
    K, plan = _transport_plan(H)
    best = None
    for c, getter in plan:
        w = getter(weights)
        if best is not None and w > best[0]:
            continue
        ch = tuple(chi_at(G.conj(c, k)) for k in K.elements)
        if best is None or (w, ch) < best:
            best = (w, ch)
    return Orbit(K, Character(K, best[1]), best[0])


def _check_weight(w, r: int | None) -> Weight:
    try:
        items = list(w)
    except TypeError:
        raise NonFiniteWeight(f"weight must be a vector of integers, got {w!r}") from None
    out = []
    for x in items:
        if isinstance(x, float):
            if not math.isfinite(x):
                raise NonFiniteWeight(f"weight {items} is not finite")
            if x != int(x):
                raise NonFiniteWeight(f"weight {items} is not integral")
            x = int(x)
        elif not isinstance(x, int) or isinstance(x, bool):
            raise NonFiniteWeight(f"weight {items} is not a vector of integers")
        if x < 0:
            raise NegativeWeight(f"weight {items} has a negative entry")
        out.append(x)
    if not out:
        raise BadTransversal("weight vectors must have at least one entry")
    if r is not None and len(out) != r:
        raise BadTransversal(f"weight {items} has length {len(out)}, expected {r}")
    return tuple(out)


def make_orbit(
    G: Group,
    H: Subgroup,
    chi: Character,
    weights: Mapping[int, Sequence[int]],
) -> Orbit:
    """Build the canonical orbit ``G/H`` with base character ``chi``.

    ``weights`` maps one representative of every left coset ``bH`` to the
    weight of that point.
    """
    if H.group != G:
        raise GroupMismatch("stabilizer belongs to a different group")
    if chi.domain != H:
        raise CharacterDomainMismatch(
            f"character is defined on {list(chi.domain.elements)}, stabilizer is {list(H.elements)}"
        )
    _, index = left_cosets(H)
    m = G.order // len(H)
    by_coset: dict[int, Weight] = {}
    r = None
    for rep, w in weights.items():
        if not isinstance(rep, int) or not 0 <= rep < G.order:
            raise BadTransversal(f"coset representative {rep!r} is not a group element")
        i = index[rep]
        if i in by_coset:
            raise BadTransversal(f"representatives in the same coset: {rep}")
        by_coset[i] = _check_weight(w, r)
        r = len(by_coset[i])
    if len(by_coset) != m:
        raise BadTransversal(f"{len(by_coset)} coset representatives given, |G/H| = {m}")
    return _canonical(H, chi, [by_coset[index[x]] for x in G.elements])


def canonicalize(O: Orbit) -> Orbit:
    return _canonical(O.stabilizer, O.character, O.weights_by_element())


def unit_orbit(G: Group, r: int) -> Orbit:
    H = G.whole
    return Orbit(H, trivial_character(H), ((0,) * r,))


def fixed_point(G: Group, weight: Sequence[int], chi: Character | None = None) -> Orbit:
    """One-point (G,r)-set with the given weight and character of ``G``."""
    H = G.whole
    if chi is None:
        chi = trivial_character(H)
    return make_orbit(G, H, chi, {G.identity: weight})


@functools.cache
def _product_plan(H1: Subgroup, H2: Subgroup) -> tuple[tuple[int, Subgroup, tuple[int, ...]], ...]:
    """Per double coset ``H1 g H2``: ``g^-1``, ``S = H1 & gH2g^-1`` and the column ``b -> bg``."""
    G = H1.group
    return tuple(
        (G.inv(g), H1.intersection(conjugate_subgroup(g, H2)), tuple(G.table[b][g] for b in G.elements))
        for g in double_cosets(H1, H2)
    )


def orbit_product(O1: Orbit, O2: Orbit) -> list[tuple[Orbit, int]]:
    """Decompose the Cartesian product ``O1 x O2`` into orbits.

    One orbit per double coset ``H1 g H2``: the orbit of ``(H1, gH2)``, with
    stabilizer ``H1 & gH2g^-1`` and weights ``w1(bH1) + w2(bgH2)``.
    """
    G = O1.group
    if O2.group != G:
        raise GroupMismatch("orbits over different groups")
    if O1.r != O2.r:
        raise GroupMismatch(f"weight lengths differ: {O1.r} vs {O2.r}")
    H1, H2 = O1.stabilizer, O2.stabilizer
    chi1, chi2 = O1.character, O2.character
    N = G.exponent
    w1 = O1.weights_by_element()
    w2 = O2.weights_by_element()
    out = []
    for gi, S, column in _product_plan(H1, H2):
        chi = {s: (chi1(s) + chi2(G.conj(gi, s))) % N for s in S.elements}
        # the point b.(H1, gH2) = (bH1, bgH2)
        weights = [tuple(map(operator.add, a, w2[bg])) for a, bg in zip(w1, column)]
        out.append((_canonical(S, chi.__getitem__, weights), 1))
    return out


def is_positively_weighted(O: Orbit) -> bool:
    return all(any(w) for w in O.weights)


def exceeds_bound(O: Orbit, bound: Sequence[int]) -> bool:
    """True iff every point has some weight coordinate above ``bound``."""
    return all(any(x > v for x, v in zip(w, bound)) for w in O.weights)

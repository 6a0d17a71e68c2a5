"""The Grothendieck ring of (G,r)-sets, truncated at a multi-degree bound.

A :class:`RingElement` is a finite integer combination of canonical orbits.
Orbits all of whose points exceed the bound ``V`` in some coordinate span an
ideal (weights only grow under products), so they are discarded; the
remaining data is an exact element of the quotient ring.
"""

from __future__ import annotations

import functools
from collections import Counter
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ContextMismatch, GroupMismatch, NonPositiveWeights
from .group import Group
from .orbit import Orbit, exceeds_bound, is_positively_weighted, orbit_product, unit_orbit

__all__ = [
    "RingElement",
    "zero",
    "one",
    "from_orbit",
    "add",
    "neg",
    "mul",
    "power",
    "geometric_inverse_power",
    "equals",
]


@functools.lru_cache(maxsize=1 << 16)
def _product_counts(O1: Orbit, O2: Orbit, bound: tuple[int, ...]) -> tuple[tuple[Orbit, int], ...]:
    """Orbits of ``O1 x O2`` that survive truncation at ``bound``, with multiplicities."""
    # when every pair of points is above the bound, so is every orbit of the product
    low1 = [a for a in O1.weights if all(x <= v for x, v in zip(a, bound))]
    if not low1 or not any(all(x + y <= v for x, y, v in zip(a, b, bound)) for a in low1 for b in O2.weights):
        return ()
    counts = Counter(o for o, _ in orbit_product(O1, O2) if not exceeds_bound(o, bound))
    return tuple(counts.items())


class RingElement:
    """Element of K0((G,r)-sets) modulo orbits lying entirely above ``bound``."""

    __slots__ = ("group", "r", "bound", "_terms")

    def __init__(self, group: Group, r: int, bound: Sequence[int], terms: Mapping[Orbit, int] | None = None):
        bound = tuple(int(v) for v in bound)
        if len(bound) != r:
            raise ContextMismatch(f"bound {list(bound)} does not have length r={r}")
        if any(v < 0 for v in bound):
            raise ContextMismatch(f"bound {list(bound)} has negative entries")
        self.group = group
        self.r = r
        self.bound = bound
        clean = {}
        for O, c in (terms or {}).items():
            if O.group != group:
                raise GroupMismatch("orbit over a different group")
            if O.r != r:
                raise ContextMismatch(f"orbit has r={O.r}, ring has r={r}")
            if c and not exceeds_bound(O, bound):
                clean[O] = int(c)
        self._terms = clean

    def _like(self, terms: Mapping[Orbit, int]) -> RingElement:
        """Same context, with terms already known to be valid and within bound."""
        out = object.__new__(RingElement)
        out.group, out.r, out.bound = self.group, self.r, self.bound
        out._terms = {O: c for O, c in terms.items() if c}
        return out

    # -- inspection

    @property
    def terms(self) -> dict[Orbit, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Orbit, int]]:
        """Terms in canonical order."""
        return iter(sorted(self._terms.items(), key=lambda t: t[0].sort_key()))

    def coefficient(self, O: Orbit) -> int:
        return self._terms.get(O, 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def context(self):
        return (self.group, self.r, self.bound)

    def same_context(self, other: RingElement) -> RingElement:
        if self.r != other.r or self.bound != other.bound or self.group != other.group:
            raise ContextMismatch(
                f"ring contexts differ: r={self.r}, bound={list(self.bound)} vs "
                f"r={other.r}, bound={list(other.bound)}"
            )
        return other

    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            return self.same_context(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return one(self.group, self.r, self.bound).scale(other)
        if isinstance(other, Orbit):
            return from_orbit(other, self.bound)
        return NotImplemented

    def __repr__(self):
        from .formats import render_ring_element

        return f"RingElement({render_ring_element(self)})"

    # -- arithmetic

    def scale(self, c: int) -> RingElement:
        return self._like({O: c * k for O, k in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, neg(self))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = self._coerce(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return equals(self, other)

    __hash__ = None


def zero(G: Group, r: int, bound: Sequence[int]) -> RingElement:
    return RingElement(G, r, bound)


def one(G: Group, r: int, bound: Sequence[int]) -> RingElement:
    return RingElement(G, r, bound, {unit_orbit(G, r): 1})


def from_orbit(O: Orbit, bound: Sequence[int], coeff: int = 1) -> RingElement:
    return RingElement(O.group, O.r, bound, {O: coeff})


def from_terms(G: Group, r: int, bound: Sequence[int], terms: Iterable[tuple[Orbit, int]]) -> RingElement:
    acc: Counter = Counter()
    for O, c in terms:
        acc[O] += c
    return RingElement(G, r, bound, acc)


def add(A: RingElement, B: RingElement) -> RingElement:
    A.same_context(B)
    acc = Counter(A._terms)
    for O, c in B._terms.items():
        acc[O] += c
    return A._like(acc)


def neg(A: RingElement) -> RingElement:
    return A.scale(-1)


def mul(A: RingElement, B: RingElement) -> RingElement:
    """Bilinear extension of the Cartesian product of orbits."""
    A.same_context(B)
    acc: Counter = Counter()
    for O1, c1 in A._terms.items():
        for O2, c2 in B._terms.items():
            for O, k in _product_counts(O1, O2, A.bound):
                acc[O] += c1 * c2 * k
    return A._like(acc)


def power(A: RingElement, k: int) -> RingElement:
    if k < 0:
        raise ValueError("negative powers are not defined; use geometric_inverse_power")
    result = one(A.group, A.r, A.bound)
    for _ in range(k):
        result = mul(result, A)
    return result


def geometric_inverse_power(T: RingElement, chi: int) -> RingElement:
    """``(1 - T)^(-chi)`` in the truncated ring.

    For ``chi > 0`` this is ``sum_k C(chi+k-1, k) T^k``, which terminates
    because each factor of ``T`` raises the coordinate sum of every point by
    at least one; that needs every point of ``T`` to have nonzero weight.
    For ``chi <= 0`` it is the polynomial ``(1 - T)^|chi|``.
    """
    result = one(T.group, T.r, T.bound)
    if chi > 0:
        bad = [O for O in T.terms if not is_positively_weighted(O)]
        if bad:
            raise NonPositiveWeights(f"orbit with a zero-weight point: {bad[0]!r}")
        term = result
        # T^k vanishes once k exceeds the total degree of the bound.
        for k in range(1, sum(T.bound) + 2):
            term = mul(term, T)
            if term.is_zero():
                break
            result = add(result, term.scale(comb(chi + k - 1, k)))
        return result
    n = -chi
    term = result
    for k in range(1, n + 1):
        term = mul(term, T)
        result = add(result, term.scale((-1) ** k * comb(n, k)))
    return result


def equals(A: RingElement, B: RingElement) -> bool:
    A.same_context(B)
    return A._terms == B._terms

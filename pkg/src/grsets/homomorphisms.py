"""Truncated multi-index series and the two projections out of K0((G,r)-sets).

``project_pi`` forgets the group action: an orbit contributes ``t^w(x)`` for
every point ``x``.  ``project_pi_prime`` keeps only one-point orbits and
records their character, landing in ``R1(G)[[t1..tr]]``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Mapping, Sequence

from .errors import ContextMismatch
from .group import Character, Group, multiply_characters
from .ring import RingElement

Index = tuple[int, ...]

__all__ = [
    "MultiIndexSeries",
    "EquivariantSeries",
    "project_pi",
    "project_pi_prime",
]


def _within(idx: Index, bound: Index) -> bool:
    return all(a <= v for a, v in zip(idx, bound))


def _add_idx(a: Index, b: Index) -> Index:
    return tuple(x + y for x, y in zip(a, b))


class MultiIndexSeries:
    """Element of ``Z[[t1..tr]]`` modulo monomials not below ``bound``."""

    __slots__ = ("r", "bound", "_coeffs")

    def __init__(self, r: int, bound: Sequence[int], coeffs: Mapping[Index, int] | None = None):
        self.r = r
        self.bound = tuple(bound)
        if len(self.bound) != r:
            raise ContextMismatch(f"bound {list(self.bound)} does not have length r={r}")
        self._coeffs = {
            tuple(i): int(c)
            for i, c in (coeffs or {}).items()
            if c and _within(tuple(i), self.bound)
        }

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> MultiIndexSeries:
        """Univariate series ``sum coeffs[k] t^k`` truncated after the last entry."""
        return cls(1, (len(coeffs) - 1,), {(k,): c for k, c in enumerate(coeffs)})

    @property
    def coefficients(self) -> dict[Index, int]:
        return dict(self._coeffs)

    def __getitem__(self, idx) -> int:
        if isinstance(idx, int):
            idx = (idx,)
        return self._coeffs.get(tuple(idx), 0)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda t: (sum(t[0]), t[0]))

    def _check(self, other: MultiIndexSeries) -> None:
        if not isinstance(other, MultiIndexSeries) or self.r != other.r or self.bound != other.bound:
            raise ContextMismatch("series over different truncation contexts")

    def __add__(self, other: MultiIndexSeries) -> MultiIndexSeries:
        self._check(other)
        acc = Counter(self._coeffs)
        acc.update(other._coeffs)
        return MultiIndexSeries(self.r, self.bound, acc)

    def __neg__(self):
        return MultiIndexSeries(self.r, self.bound, {i: -c for i, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: MultiIndexSeries) -> MultiIndexSeries:
        self._check(other)
        acc: Counter = Counter()
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                k = _add_idx(i, j)
                if _within(k, self.bound):
                    acc[k] += a * b
        return MultiIndexSeries(self.r, self.bound, acc)

    def __eq__(self, other):
        if not isinstance(other, MultiIndexSeries):
            return NotImplemented
        self._check(other)
        return self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self):
        from .formats import render_series

        return f"MultiIndexSeries({render_series(self)})"


class EquivariantSeries:
    """Element of ``R1(G)[[t1..tr]]``: each coefficient is a Z-combination of characters of G."""

    __slots__ = ("group", "r", "bound", "_coeffs")

    def __init__(
        self,
        group: Group,
        r: int,
        bound: Sequence[int],
        coeffs: Mapping[Index, Mapping[Character, int]] | None = None,
    ):
        self.group = group
        self.r = r
        self.bound = tuple(bound)
        if len(self.bound) != r:
            raise ContextMismatch(f"bound {list(self.bound)} does not have length r={r}")
        clean = {}
        for idx, inner in (coeffs or {}).items():
            idx = tuple(idx)
            if not _within(idx, self.bound):
                continue
            for chi in inner:
                if not chi.domain.is_whole or chi.domain.group != group:
                    raise ContextMismatch("coefficients must be characters of the whole group")
            inner = {chi: int(c) for chi, c in inner.items() if c}
            if inner:
                clean[idx] = inner
        self._coeffs = clean

    @property
    def coefficients(self) -> dict[Index, dict[Character, int]]:
        return {i: dict(inner) for i, inner in self._coeffs.items()}

    def __getitem__(self, idx) -> dict[Character, int]:
        if isinstance(idx, int):
            idx = (idx,)
        return dict(self._coeffs.get(tuple(idx), {}))

    def items(self):
        for idx in sorted(self._coeffs, key=lambda i: (sum(i), i)):
            inner = self._coeffs[idx]
            for chi in sorted(inner, key=lambda c: c.values):
                yield idx, chi, inner[chi]

    def _check(self, other: EquivariantSeries) -> None:
        if (
            not isinstance(other, EquivariantSeries)
            or self.r != other.r
            or self.bound != other.bound
            or self.group != other.group
        ):
            raise ContextMismatch("series over different truncation contexts")

    def _build(self, acc) -> EquivariantSeries:
        return EquivariantSeries(self.group, self.r, self.bound, acc)

    def __add__(self, other: EquivariantSeries) -> EquivariantSeries:
        self._check(other)
        acc: dict = defaultdict(Counter)
        for src in (self._coeffs, other._coeffs):
            for i, inner in src.items():
                acc[i].update(inner)
        return self._build(acc)

    def __neg__(self):
        return self._build({i: {c: -k for c, k in inner.items()} for i, inner in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: EquivariantSeries) -> EquivariantSeries:
        self._check(other)
        acc: dict = defaultdict(Counter)
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                k = _add_idx(i, j)
                if not _within(k, self.bound):
                    continue
                for chi1, c1 in a.items():
                    for chi2, c2 in b.items():
                        acc[k][multiply_characters(chi1, chi2)] += c1 * c2
        return self._build(acc)

    def __eq__(self, other):
        if not isinstance(other, EquivariantSeries):
            return NotImplemented
        self._check(other)
        return self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self):
        from .formats import render_equivariant_series

        return f"EquivariantSeries({render_equivariant_series(self)})"


def project_pi(A: RingElement) -> MultiIndexSeries:
    acc: Counter = Counter()
    for O, c in A.terms.items():
        for w in O.weights:
            if _within(w, A.bound):
                acc[w] += c
    return MultiIndexSeries(A.r, A.bound, acc)


def project_pi_prime(A: RingElement) -> EquivariantSeries:
    acc: dict = defaultdict(Counter)
    for O, c in A.terms.items():
        if O.is_fixed_point:
            acc[O.weights[0]][O.character] += c
    return EquivariantSeries(A.group, A.r, A.bound, acc)

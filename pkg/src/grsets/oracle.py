"""Brute-force reference computations used to check the main pipeline.

Nothing here touches orbits or ring elements: the series are obtained by
enumerating monomials, and orbit isomorphism is decided by searching all
bijections between explicitly listed cosets.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import NonAbelianAction, NotAGroup
from .group import Group, one_dim_characters
from .homomorphisms import EquivariantSeries, MultiIndexSeries

Matrix = tuple[tuple[int, int], tuple[int, int]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _inverse(a: Matrix) -> Matrix:
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det not in (1, -1):
        raise NotAGroup(f"matrix {a} is not invertible over the integers")
    return ((a[1][1] * det, -a[0][1] * det), (-a[1][0] * det, a[0][0] * det))


@dataclass(frozen=True)
class MonomialAction:
    """Linear action of ``group`` on C^2 by integer 2x2 matrices, ``matrices[g]`` acting on (x, y)."""

    group: Group
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        G = self.group
        if len(self.matrices) != G.order:
            raise NotAGroup("one matrix per group element is required")
        for g in G.elements:
            _inverse(self.matrices[g])
            for h in G.elements:
                if _matmul(self.matrices[g], self.matrices[h]) != self.matrices[G.mul(g, h)]:
                    raise NotAGroup(f"matrices do not compose like the group at ({g}, {h})")


def antipodal_action(G: Group) -> MonomialAction:
    """Z2 acting by ``(x, y) -> (-x, -y)``; element 1 is the generator."""
    return MonomialAction(G, (((1, 0), (0, 1)), ((-1, 0), (0, -1))))


def swap_action(G: Group) -> MonomialAction:
    return MonomialAction(G, (((1, 0), (0, 1)), ((0, 1), (1, 0))))


def _substitute(i: int, j: int, m: Matrix) -> Counter:
    """Expand ``x'^i y'^j`` where ``x' = m00 x + m01 y``, ``y' = m10 x + m11 y``."""
    out: Counter = Counter()
    (a, b), (c, d) = m
    for p in range(i + 1):
        for q in range(j + 1):
            coeff = comb(i, p) * a**p * b ** (i - p) * comb(j, q) * c**q * d ** (j - q)
            if coeff:
                out[(p + q, i + j - p - q)] += coeff
    return out


def _trace_on_forms(m_inv: Matrix, k: int) -> int:
    # (a*f)(v) = f(a^-1 v): the monomial x^i y^j goes to the expansion under a^-1.
    return sum(_substitute(i, k - i, m_inv)[(i, k - i)] for i in range(k + 1))


def jet_dimension_series(k_max: int) -> MultiIndexSeries:
    """Number of degree-k monomials in two variables, for k <= k_max."""
    counts = Counter()
    for a in range(k_max + 1):
        for b in range(k_max + 1 - a):
            counts[(a + b,)] += 1
    return MultiIndexSeries(1, (k_max,), counts)


def equivariant_jet_series(action: MonomialAction, k_max: int) -> EquivariantSeries:
    """Character decomposition of the degree-k forms, ``sum_chi dim(V_k^chi) chi`` at ``t^k``.

    Multiplicities come from the orthogonality relation
    ``dim V^chi = |G|^-1 sum_g tr(g) conj(chi(g))``.
    """
    G = action.group
    if not G.is_abelian:
        raise NonAbelianAction("the equivariant jet oracle only handles abelian groups")
    N = G.exponent
    chars = one_dim_characters(G.whole)
    inverses = [_inverse(m) for m in action.matrices]
    coeffs: dict = {}
    for k in range(k_max + 1):
        traces = [_trace_on_forms(inverses[g], k) for g in G.elements]
        inner = {}
        for chi in chars:
            z = sum(tr * cmath.exp(-2j * math.pi * chi(g) / N) for g, tr in zip(G.elements, traces)) / G.order
            dim = round(z.real)
            if abs(z - dim) > 1e-9 or dim < 0:
                raise ArithmeticError(f"non-integral multiplicity {z} at degree {k}")
            if dim:
                inner[chi] = dim
        if sum(inner.values()) != k + 1:
            raise ArithmeticError(f"multiplicities at degree {k} do not add up to {k + 1}")
        coeffs[(k,)] = inner
    return EquivariantSeries(G, 1, (k_max,), coeffs)


def semigroup_series(gens: Sequence[int], k_max: int) -> MultiIndexSeries:
    """Indicator series of the numerical semigroup generated by ``gens``."""
    if not gens or any(g <= 0 for g in gens):
        raise ValueError("generators must be positive integers")
    reachable = {0}
    for s in range(1, k_max + 1):
        if any(s - g in reachable for g in gens if s >= g):
            reachable.add(s)
    return MultiIndexSeries(1, (k_max,), {(s,): 1 for s in reachable})


# --- orbit isomorphism by exhaustive search ---------------------------------


@dataclass
class ExplicitGSet:
    """A transitive (G,r)-set with its points listed as cosets."""

    group: Group
    points: list[frozenset[int]]
    weights: list[tuple[int, ...]]
    characters: list[dict[int, int]]

    def act(self, g: int, i: int) -> int:
        G = self.group
        moved = frozenset(G.mul(g, x) for x in self.points[i])
        return self.points.index(moved)


def explicit_gset(
    G: Group,
    stabilizer: Sequence[int],
    character: Mapping[int, int],
    weights: Mapping[int, Sequence[int]],
) -> ExplicitGSet:
    """Spell out ``G/H``: ``weights`` maps a coset representative to its weight."""
    H = list(stabilizer)
    points, ws, chars = [], [], []
    for b, w in weights.items():
        points.append(frozenset(G.mul(b, h) for h in H))
        ws.append(tuple(w))
        bi = G.inv(b)
        # isotropy of bH is bHb^-1, carrying g -> chi(b^-1 g b)
        chars.append({G.mul(G.mul(b, h), bi): character.get(h, 0) for h in H})
    return ExplicitGSet(G, points, ws, chars)


def brute_force_isomorphic(A: ExplicitGSet, B: ExplicitGSet) -> bool:
    if len(A.points) != len(B.points) or sorted(A.weights) != sorted(B.weights):
        return False
    G = A.group
    n = len(A.points)
    actA = [[A.act(g, i) for i in range(n)] for g in G.elements]
    actB = [[B.act(g, i) for i in range(n)] for g in G.elements]
    for perm in itertools.permutations(range(n)):
        if any(A.weights[i] != B.weights[perm[i]] for i in range(n)):
            continue
        if any(A.characters[i] != B.characters[perm[i]] for i in range(n)):
            continue
        if all(perm[actA[g][i]] == actB[g][perm[i]] for g in G.elements for i in range(n)):
            return True
    return False


"""Acceptance checks, run by ``grsets selftest`` and by the test suite.

Every check is exact: ring elements and series are compared as exact integer
data.  Randomized checks use fixed seeds so a failure is reproducible.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .expr import free_z2_orbit, z2_generators
from .group import (
    Group,
    Subgroup,
    conjugate_character,
    conjugate_subgroup,
    make_character,
    named_group,
    one_dim_characters,
    subgroup_closure,
    trivial_character,
)
from .homomorphisms import MultiIndexSeries, project_pi, project_pi_prime
from .oracle import (
    antipodal_action,
    brute_force_isomorphic,
    equivariant_jet_series,
    explicit_gset,
    jet_dimension_series,
    semigroup_series,
    swap_action,
)
from .orbit import Orbit, fixed_point, is_positively_weighted, make_orbit
from .resolution import ResolutionSpec, StratumSpec, curve_example_specs, poincare_series
from .ring import RingElement, from_orbit, from_terms, geometric_inverse_power, one

ORACLE_DEGREE = 8


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


class CheckFailed(AssertionError):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


# --- random data ------------------------------------------------------------


def small_groups() -> list[Group]:
    """Groups of order at most 6: cyclic 1..6, the Klein four-group and S3."""
    return [named_group("cyclic", m) for m in range(1, 7)] + [named_group("dihedral", m) for m in (2, 3)]


@dataclass
class RawOrbit:
    """Unnormalized orbit data: stabilizer, base character values, weight per coset representative."""

    group: Group
    stabilizer: Subgroup
    character: dict[int, int]
    weights: dict[int, tuple[int, ...]]

    def build(self) -> Orbit:
        return make_orbit(self.group, self.stabilizer, make_character(self.stabilizer, self.character), self.weights)

    def explicit(self):
        return explicit_gset(self.group, self.stabilizer.elements, self.character, self.weights)


def _cosets(G: Group, H: Subgroup) -> list[list[int]]:
    seen, out = set(), []
    for g in G.elements:
        if g not in seen:
            coset = [G.mul(g, h) for h in H.elements]
            seen.update(coset)
            out.append(coset)
    return out


def random_raw_orbit(rng: random.Random, G: Group, r: int, max_weight: int = 2) -> RawOrbit:
    gens = rng.sample(list(G.elements), k=rng.randint(0, min(2, G.order)))
    H = subgroup_closure(G, gens)
    chi = rng.choice(one_dim_characters(H))
    weights = {
        rng.choice(coset): tuple(rng.randint(0, max_weight) for _ in range(r)) for coset in _cosets(G, H)
    }
    return RawOrbit(G, H, chi.as_dict(), weights)


def relabel(rng: random.Random, raw: RawOrbit) -> RawOrbit:
    """Transport ``raw`` along a random equivariant bijection ``G/H' -> G/H``.

    With ``H' = c^-1 H c`` the map ``dH' -> d c^-1 H`` is equivariant; the
    new coset representatives are chosen at random.
    """
    G, H = raw.group, raw.stabilizer
    c = rng.choice(list(G.elements))
    ci = G.inv(c)
    H2 = conjugate_subgroup(ci, H)
    chi = make_character(H, raw.character)
    chi2 = conjugate_character(ci, chi).as_dict()

    def weight_of(x):
        for b, w in raw.weights.items():
            if G.mul(G.inv(b), x) in H:
                return w
        raise AssertionError("element outside every coset")

    weights = {}
    for coset in _cosets(G, H2):
        d = rng.choice(coset)
        weights[d] = weight_of(G.mul(d, ci))
    return RawOrbit(G, H2, chi2, weights)


def random_element(rng: random.Random, G: Group, r: int, bound, terms: int = 3) -> RingElement:
    pairs = [
        (random_raw_orbit(rng, G, r).build(), rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(rng.randint(0, terms))
    ]
    return from_terms(G, r, bound, pairs)


def random_positive_element(rng: random.Random, G: Group, r: int, bound, terms: int = 2) -> RingElement:
    pairs = []
    while len(pairs) < terms:
        O = random_raw_orbit(rng, G, r).build()
        if is_positively_weighted(O):
            pairs.append((O, rng.choice([-2, -1, 1, 2])))
    return from_terms(G, r, bound, pairs)


# --- criteria ---------------------------------------------------------------


def check_z2_relations(specs) -> str:
    t = z2_generators((10,))
    rel = {
        "t4^2 = 1": (t["t4"] * t["t4"], 1),
        "t2^2 = 2 t2": (t["t2"] * t["t2"], 2 * t["t2"]),
        "t2 t4 = t2": (t["t2"] * t["t4"], t["t2"]),
        "t1 t4 = t1": (t["t1"] * t["t4"], t["t1"]),
        "t1 t2 = 2 t1": (t["t1"] * t["t2"], 2 * t["t1"]),
    }
    for name, (lhs, rhs) in rel.items():
        _expect(lhs == rhs, f"relation {name} fails: {lhs!r} != {rhs!r}")
    return f"{len(rel)} relations hold at V=(10)"


def check_z2_a15(specs) -> str:
    t = z2_generators((6,))
    t1, t2, t3 = t["t1"], t["t2"], t["t3"]
    rhs = t1**4 * t3 + t2 * t3**3 - 4 * t1**2 * t3**2
    A15 = from_orbit(free_z2_orbit(1, 5), (6,))
    _expect(rhs == A15, f"t1^4 t3 + t2 t3^3 - 4 t1^2 t3^2 = {rhs!r}, expected {A15!r}")
    _expect(len(rhs) == 1 and rhs.coefficient(free_z2_orbit(1, 5)) == 1, "not a single orbit")
    return "A15 = t1^4 t3 + t2 t3^3 - 4 t1^2 t3^2 at V=(6)"


def _poly_mul(p, q, bound):
    out = Counter()
    for (a, b), x in p.items():
        for (c, d), y in q.items():
            if a + c <= bound[0] and b + d <= bound[1]:
                out[(a + c, b + d)] += x * y
    return {k: v for k, v in out.items() if v}


def _poly_add(p, q, sign=1):
    out = Counter(p)
    for k, v in q.items():
        out[k] += sign * v
    return {k: v for k, v in out.items() if v}


def check_trivial_group_isomorphism(specs, trials: int = 200, seed: int = 3) -> str:
    rng = random.Random(seed)
    G = named_group("cyclic", 1)
    bound = (4, 4)

    def rand_pair():
        poly = {}
        for _ in range(rng.randint(1, 4)):
            idx = (rng.randint(0, 4), rng.randint(0, 4))
            poly[idx] = poly.get(idx, 0) + rng.randint(-3, 3)
        poly = {k: v for k, v in poly.items() if v}
        elem = from_terms(G, 2, bound, [(fixed_point(G, idx), c) for idx, c in poly.items()])
        return elem, poly

    def as_poly(A: RingElement):
        out = {}
        for O, c in A.terms.items():
            _expect(O.size == 1, "trivial-group orbit with more than one point")
            out[O.weights[0]] = c
        return out

    for i in range(trials):
        (A, p), (B, q) = rand_pair(), rand_pair()
        op = rng.choice(["mul", "add", "sub", "mul"])
        if op == "mul":
            got, want = A * B, _poly_mul(p, q, bound)
        elif op == "add":
            got, want = A + B, _poly_add(p, q)
        else:
            got, want = A - B, _poly_add(p, q, -1)
        _expect(as_poly(got) == want, f"trial {i}: {op} gives {as_poly(got)}, polynomial arithmetic {want}")
    return f"{trials} random operations agree with Z[t1,t2] mod (t1^5, t2^5)"


def _pi_oracle(name: str) -> MultiIndexSeries | None:
    k = ORACLE_DEGREE
    return {
        "trivial-multiplicity": lambda: jet_dimension_series(k),
        "z2-antipodal": lambda: jet_dimension_series(k),
        "z2-swap": lambda: jet_dimension_series(k),
        "smooth-branch": lambda: semigroup_series([1], k),
        "cusp": lambda: semigroup_series([2, 3], k),
    }.get(name, lambda: None)()


def check_pi_consistency(specs) -> str:
    checked = []
    for name, spec in specs.items():
        want = _pi_oracle(name)
        if want is None:
            continue
        got = project_pi(poincare_series(spec, bound=(ORACLE_DEGREE,)))
        _expect(got == want, f"{name}: Pi(P^G) = {got!r}, oracle {want!r}")
        checked.append(name)
    _expect(bool(checked), "no spec with a known oracle")
    return "Pi(P^G) matches the oracle for " + ", ".join(checked)


def check_pi_prime_consistency(specs) -> str:
    actions = {"z2-antipodal": antipodal_action, "z2-swap": swap_action}
    checked = []
    for name, make_action in actions.items():
        if name not in specs:
            continue
        spec = specs[name]
        got = project_pi_prime(poincare_series(spec, bound=(ORACLE_DEGREE,)))
        want = equivariant_jet_series(make_action(spec.group), ORACLE_DEGREE)
        _expect(got == want, f"{name}: Pi'(P^G) = {got!r}, oracle {want!r}")
        checked.append(name)
    _expect(bool(checked), "no Z2 spec available")
    return "Pi'(P^G) matches the equivariant jet oracle for " + ", ".join(checked)


def check_product_formula_structure(specs) -> str:
    for name, spec in specs.items():
        base = poincare_series(spec)
        G = spec.group
        # A zero-Euler stratum may even carry zero weights: it must not matter.
        extra = StratumSpec("extra-zero-euler", 0, make_orbit(G, G.trivial, trivial_character(G.trivial), _zero_weights(G, spec.r)))
        with_extra = spec.with_strata(list(spec.strata) + [extra])
        _expect(poincare_series(with_extra) == base, f"{name}: a zero-Euler stratum changed the series")
        for perm in itertools.permutations(spec.strata):
            _expect(poincare_series(spec.with_strata(perm)) == base, f"{name}: reordering strata changed the series")
    return f"{len(specs)} specs invariant under zero-Euler strata and reordering"


def _zero_weights(G, r):
    return {g: (0,) * r for g in G.elements}


def check_ring_axioms(specs, trials: int = 500, geometric_trials: int = 100, seed: int = 7) -> str:
    rng = random.Random(seed)
    groups = small_groups()
    for i in range(trials):
        G = rng.choice(groups)
        r = rng.randint(1, 2)
        bound = tuple(rng.randint(0, 4) for _ in range(r))
        A, B, C = (random_element(rng, G, r, bound) for _ in range(3))
        one_ = one(G, r, bound)
        _expect((A * B) * C == A * (B * C), f"trial {i}: associativity fails")
        _expect(A * B == B * A, f"trial {i}: commutativity fails")
        _expect(A * (B + C) == A * B + A * C, f"trial {i}: distributivity fails")
        _expect(A * one_ == A and A + 0 == A and A - A == 0, f"trial {i}: identities fail")
    for i in range(geometric_trials):
        G = rng.choice(groups)
        r = rng.randint(1, 2)
        bound = tuple(rng.randint(0, 4) for _ in range(r))
        T = random_positive_element(rng, G, r, bound, terms=rng.randint(1, 2))
        for chi in (1, 2):
            lhs = geometric_inverse_power(T, chi) * (1 - T) ** chi
            _expect(lhs == 1, f"geometric trial {i}: (1-T)^-{chi} (1-T)^{chi} != 1 for T = {T!r}")
    return f"{trials} random triples satisfy the ring axioms; {geometric_trials} geometric inverses verified"


def check_canonicalization(specs, pairs: int = 200, seed: int = 11) -> str:
    rng = random.Random(seed)
    groups = small_groups()
    for i in range(pairs):
        G = rng.choice(groups)
        a = random_raw_orbit(rng, G, rng.randint(1, 2))
        b = relabel(rng, a)
        _expect(brute_force_isomorphic(a.explicit(), b.explicit()), f"pair {i}: relabelling is not an isomorphism")
        _expect(a.build() == b.build(), f"pair {i}: isomorphic orbits canonicalize differently")
    distinct = attempts = 0
    while distinct < pairs:
        attempts += 1
        _expect(attempts < 100 * pairs, "could not generate enough non-isomorphic pairs")
        G = rng.choice(groups)
        r = rng.randint(1, 2)
        a = random_raw_orbit(rng, G, r)
        b = random_raw_orbit(rng, G, r)
        if len(a.stabilizer) != len(b.stabilizer):
            continue
        # Same weight multiset keeps the pair hard to tell apart.
        ws = list(a.weights.values())
        rng.shuffle(ws)
        b.weights = dict(zip(b.weights, ws))
        iso = brute_force_isomorphic(a.explicit(), b.explicit())
        _expect(iso == (a.build() == b.build()), f"attempt {attempts}: canonical form disagrees with brute force")
        if not iso:
            distinct += 1
    return f"{pairs} isomorphic pairs agree; {pairs} non-isomorphic pairs separated ({attempts} candidates)"


CHECKS: list[tuple[str, Callable]] = [
    ("1 z2-relations", check_z2_relations),
    ("2 z2-a15-identity", check_z2_a15),
    ("3 trivial-group-isomorphism", check_trivial_group_isomorphism),
    ("4 pi-projection-consistency", check_pi_consistency),
    ("5 z2-pi-prime-consistency", check_pi_prime_consistency),
    ("6 product-formula-structure", check_product_formula_structure),
    ("7 ring-axioms", check_ring_axioms),
    ("8 canonicalization", check_canonicalization),
]


def run_check(name: str, fn: Callable, specs: dict[str, ResolutionSpec]) -> CheckResult:
    try:
        return CheckResult(name, True, fn(specs))
    except Exception as exc:  # a crash is a failed check, not a crashed selftest
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def run_checks(filter: str | None = None, specs: dict[str, ResolutionSpec] | None = None) -> list[CheckResult]:
    if specs is None:
        specs = curve_example_specs()
    return [run_check(name, fn, specs) for name, fn in CHECKS if not filter or filter in name]

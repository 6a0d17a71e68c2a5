"""Equivariant Poincaré series from stratified resolution data.

The caller describes a G-equivariant resolution by its strata: for each
stratum of the quotient of the smooth part of the exceptional divisor, its
Euler characteristic and the orbit of the class of an equivariant curvette
function (stabilizer, character, and valuation vector at every point).  The
series is the product of ``(1 - T)^(-euler)`` over the strata.

Curvettes with an infinite valuation contribute zero and have to be left out
of the input; infinite weights are rejected.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, replace
from typing import Any, Sequence

from .errors import ParseError, SpecError, ZeroWeightWithPositiveEuler
from .formats import _get, _int_list, group_from_json, group_to_json, orbit_from_json, orbit_to_json
from .group import Group
from .orbit import Orbit, is_positively_weighted
from .ring import RingElement, from_orbit, geometric_inverse_power, mul, one

KINDS = ("divisorial", "curve")


@dataclass(frozen=True)
class StratumSpec:
    name: str
    euler: int
    orbit: Orbit


@dataclass(frozen=True)
class ResolutionSpec:
    group: Group
    r: int
    bound: tuple[int, ...]
    kind: str
    strata: tuple[StratumSpec, ...]
    name: str = ""
    description: str = ""

    def with_bound(self, bound: Sequence[int]) -> ResolutionSpec:
        bound = tuple(bound)
        if len(bound) != self.r or any(v < 0 for v in bound):
            raise SpecError(f"bound {list(bound)} must have {self.r} nonnegative entries")
        return replace(self, bound=bound)

    def with_strata(self, strata: Sequence[StratumSpec]) -> ResolutionSpec:
        return validate_spec(replace(self, strata=tuple(strata)))


def validate_spec(spec: ResolutionSpec) -> ResolutionSpec:
    if spec.kind not in KINDS:
        raise SpecError(f"kind must be one of {KINDS}, got {spec.kind!r}")
    if spec.r < 1:
        raise SpecError("r must be positive")
    if len(spec.bound) != spec.r or any(v < 0 for v in spec.bound):
        raise SpecError(f"bound {list(spec.bound)} must have {spec.r} nonnegative entries")
    names = set()
    for s in spec.strata:
        if s.name in names:
            raise SpecError(f"duplicate stratum name {s.name!r}")
        names.add(s.name)
        if s.orbit.group != spec.group:
            raise SpecError(f"stratum {s.name!r}: orbit over a different group")
        if s.orbit.r != spec.r:
            raise SpecError(f"stratum {s.name!r}: weights have length {s.orbit.r}, r={spec.r}")
        if s.euler > 0 and not is_positively_weighted(s.orbit):
            raise ZeroWeightWithPositiveEuler(
                f"stratum {s.name!r}: Euler characteristic {s.euler} with a zero-weight curvette point"
            )
    return spec


def spec_from_json(d: Any) -> ResolutionSpec:
    G = group_from_json(_get(d, "group", dict, "spec"))
    r = _get(d, "r", int, "spec")
    bound = tuple(_int_list(_get(d, "bound", list, "spec"), "spec.bound"))
    kind = d.get("kind", "divisorial")
    strata = []
    for i, s in enumerate(_get(d, "strata", list, "spec")):
        name = s.get("name", f"stratum{i}") if isinstance(s, dict) else None
        euler = _get(s, "euler", int, f"spec.strata[{i}]")
        orbit = orbit_from_json(G, _get(s, "orbit", dict, f"spec.strata[{i}]"))
        strata.append(StratumSpec(str(name), euler, orbit))
    if not isinstance(kind, str):
        raise ParseError("spec: 'kind' must be a string")
    spec = ResolutionSpec(
        G, r, bound, kind, tuple(strata), name=str(d.get("name", "")), description=str(d.get("description", ""))
    )
    return validate_spec(spec)


def spec_to_json(spec: ResolutionSpec) -> dict:
    d = {}
    if spec.name:
        d["name"] = spec.name
    if spec.description:
        d["description"] = spec.description
    d.update(
        group=group_to_json(spec.group),
        r=spec.r,
        bound=list(spec.bound),
        kind=spec.kind,
        strata=[{"name": s.name, "euler": s.euler, "orbit": orbit_to_json(s.orbit)} for s in spec.strata],
    )
    return d


def stratum_factor(stratum: StratumSpec, bound: Sequence[int]) -> RingElement:
    return geometric_inverse_power(from_orbit(stratum.orbit, bound), stratum.euler)


def poincare_series(spec: ResolutionSpec, bound: Sequence[int] | None = None) -> RingElement:
    """Product of ``(1 - T_stratum)^(-euler)`` over all strata, truncated at the bound."""
    if bound is not None:
        spec = spec.with_bound(bound)
    result = one(spec.group, spec.r, spec.bound)
    for s in spec.strata:
        if s.euler == 0:
            continue
        result = mul(result, stratum_factor(s, spec.bound))
    return result


# --- built-in examples ------------------------------------------------------
#
# Z2 = {0, 1}; residue 1 on element 1 is the sign character.

_TRIVIAL = {"named": {"kind": "cyclic", "m": 1}}
_Z2 = {"named": {"kind": "cyclic", "m": 2}}


def _point(weight, character=None, stabilizer=(0,)):
    return {"stabilizer": list(stabilizer), "character": character or {}, "points": [{"rep": 0, "weight": weight}]}


BUILTIN_SPECS: dict[str, dict] = {
    "trivial-multiplicity": {
        "name": "trivial-multiplicity",
        "description": "Multiplicity valuation on C^2 (one blow-up, exceptional line CP^1), trivial group.",
        "group": _TRIVIAL,
        "r": 1,
        "bound": [8],
        "kind": "divisorial",
        "strata": [{"name": "E1", "euler": 2, "orbit": _point([1])}],
    },
    "smooth-branch": {
        "name": "smooth-branch",
        "description": "Curve valuation of the smooth branch x=0; E1 minus the strict transform point.",
        "group": _TRIVIAL,
        "r": 1,
        "bound": [8],
        "kind": "curve",
        "strata": [{"name": "E1", "euler": 1, "orbit": _point([1])}],
    },
    "cusp": {
        "name": "cusp",
        "description": "Curve valuation of the cusp y^2=x^3; three blow-ups, E3 meets E1, E2 and the strict transform.",
        "group": _TRIVIAL,
        "r": 1,
        "bound": [8],
        "kind": "curve",
        "strata": [
            {"name": "E1", "euler": 1, "orbit": _point([2])},
            {"name": "E2", "euler": 1, "orbit": _point([3])},
            {"name": "E3", "euler": -1, "orbit": _point([6])},
        ],
    },
    "z2-antipodal": {
        "name": "z2-antipodal",
        "description": "Multiplicity valuation, Z2 acting by (x,y)->(-x,-y); the action on E1 is trivial "
        "and every curvette y-sx is odd.",
        "group": _Z2,
        "r": 1,
        "bound": [8],
        "kind": "divisorial",
        "strata": [{"name": "E1", "euler": 2, "orbit": _point([1], {"1": 1}, (0, 1))}],
    },
    "z2-swap": {
        "name": "z2-swap",
        "description": "Multiplicity valuation, Z2 acting by (x,y)->(y,x); two fixed points on E1 "
        "(curvettes x-y odd, x+y even) and a free part with Euler characteristic 0.",
        "group": _Z2,
        "r": 1,
        "bound": [8],
        "kind": "divisorial",
        "strata": [
            {"name": "diagonal", "euler": 1, "orbit": _point([1], {"1": 1}, (0, 1))},
            {"name": "antidiagonal", "euler": 1, "orbit": _point([1], {}, (0, 1))},
            {
                "name": "free",
                "euler": 0,
                "orbit": {"stabilizer": [0], "points": [{"rep": 0, "weight": [1]}, {"rep": 1, "weight": [1]}]},
            },
        ],
    },
}


def builtin_spec_json(name: str) -> dict:
    try:
        return copy.deepcopy(BUILTIN_SPECS[name])
    except KeyError:
        raise SpecError(f"no built-in spec named {name!r}; known: {', '.join(BUILTIN_SPECS)}") from None


def curve_example_specs() -> dict[str, ResolutionSpec]:
    return {name: spec_from_json(d) for name, d in BUILTIN_SPECS.items()}

"""JSON descriptors and text rendering for groups, orbits, ring elements and series.

Structural problems in a descriptor raise :class:`ParseError`; mathematical
problems (not a group, bad transversal, ...) surface as the specific
:class:`GRSetsError` subclasses raised by the constructors.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .group import Character, Group, build_group, make_character, make_subgroup, named_group
from .homomorphisms import EquivariantSeries, MultiIndexSeries
from .orbit import Orbit, make_orbit
from .ring import RingElement, from_terms


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _get(d: Any, key: str, kind: type | tuple[type, ...], what: str):
    if not isinstance(d, dict):
        raise ParseError(f"{what}: expected a JSON object, got {type(d).__name__}")
    if key not in d:
        raise ParseError(f"{what}: missing key {key!r}")
    value = d[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{what}: {key!r} has the wrong type ({type(value).__name__})")
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what}: expected a list of integers, got {value!r}")
    return value


# --- groups -----------------------------------------------------------------


def group_from_json(d: Any) -> Group:
    if isinstance(d, dict) and "named" in d:
        named = _get(d, "named", dict, "group")
        kind = _get(named, "kind", str, "group.named")
        m = _get(named, "m", int, "group.named")
        return named_group(kind, m)
    table = _get(d, "cayley", list, "group")
    if not all(isinstance(row, list) for row in table):
        raise ParseError("group: 'cayley' must be a list of rows")
    return build_group(table)


def group_to_json(G: Group) -> dict:
    return {"cayley": [list(row) for row in G.table]}


# --- orbits -----------------------------------------------------------------


def orbit_from_json(G: Group, d: Any) -> Orbit:
    H = make_subgroup(G, _int_list(_get(d, "stabilizer", list, "orbit"), "orbit.stabilizer"))
    raw_chi = d.get("character", {})
    if not isinstance(raw_chi, dict):
        raise ParseError("orbit: 'character' must be an object")
    try:
        values = {int(k): int(v) for k, v in raw_chi.items()}
    except (TypeError, ValueError):
        raise ParseError(f"orbit: bad character map {raw_chi!r}") from None
    chi = make_character(H, values)
    points = _get(d, "points", list, "orbit")
    weights = {}
    for p in points:
        rep = _get(p, "rep", int, "orbit.points[]")
        if rep in weights:
            raise ParseError(f"orbit: representative {rep} listed twice")
        w = _get(p, "weight", list, "orbit.points[]")
        weights[rep] = w
    return make_orbit(G, H, chi, weights)


def character_to_json(chi: Character) -> dict[str, int]:
    return {str(g): v for g, v in chi.as_dict().items() if v}


def orbit_to_json(O: Orbit) -> dict:
    return {
        "stabilizer": list(O.stabilizer.elements),
        "character": character_to_json(O.character),
        "points": [{"rep": b, "weight": list(w)} for b, w in zip(O.transversal, O.weights)],
    }


# --- ring elements ----------------------------------------------------------


def ring_element_to_json(A: RingElement) -> dict:
    return {
        "group": group_to_json(A.group),
        "r": A.r,
        "bound": list(A.bound),
        "terms": [{"coeff": c, "orbit": orbit_to_json(O)} for O, c in A.items()],
    }


def ring_element_from_json(d: Any, group: Group | None = None) -> RingElement:
    if group is None:
        group = group_from_json(_get(d, "group", dict, "ring element"))
    bound = _int_list(_get(d, "bound", list, "ring element"), "ring element.bound")
    r = d.get("r", len(bound))
    terms = []
    for t in _get(d, "terms", list, "ring element"):
        c = _get(t, "coeff", int, "ring element.terms[]")
        terms.append((orbit_from_json(group, _get(t, "orbit", dict, "ring element.terms[]")), c))
    return from_terms(group, r, bound, terms)


# --- series -----------------------------------------------------------------


def series_to_json(S: MultiIndexSeries) -> dict:
    return {
        "r": S.r,
        "bound": list(S.bound),
        "coefficients": [{"index": list(i), "coeff": c} for i, c in S.items()],
    }


def series_from_json(d: Any) -> MultiIndexSeries:
    bound = _int_list(_get(d, "bound", list, "series"), "series.bound")
    coeffs = {}
    for t in _get(d, "coefficients", list, "series"):
        idx = tuple(_int_list(_get(t, "index", list, "series.coefficients[]"), "index"))
        coeffs[idx] = _get(t, "coeff", int, "series.coefficients[]")
    return MultiIndexSeries(d.get("r", len(bound)), bound, coeffs)


def equivariant_series_to_json(S: EquivariantSeries) -> dict:
    return {
        "group": group_to_json(S.group),
        "r": S.r,
        "bound": list(S.bound),
        "coefficients": [
            {"index": list(i), "character": character_to_json(chi), "coeff": c} for i, chi, c in S.items()
        ],
    }


def equivariant_series_from_json(d: Any) -> EquivariantSeries:
    G = group_from_json(_get(d, "group", dict, "equivariant series"))
    bound = _int_list(_get(d, "bound", list, "equivariant series"), "equivariant series.bound")
    coeffs: dict = {}
    for t in _get(d, "coefficients", list, "equivariant series"):
        idx = tuple(_int_list(_get(t, "index", list, "coefficients[]"), "index"))
        raw = _get(t, "character", dict, "coefficients[]")
        chi = make_character(G.whole, {int(k): int(v) for k, v in raw.items()})
        coeffs.setdefault(idx, {})[chi] = _get(t, "coeff", int, "coefficients[]")
    return EquivariantSeries(G, d.get("r", len(bound)), bound, coeffs)


# --- text -------------------------------------------------------------------


def render_monomial(idx) -> str:
    parts = []
    for i, a in enumerate(idx, start=1):
        if a == 1:
            parts.append(f"t{i}")
        elif a > 1:
            parts.append(f"t{i}^{a}")
    return "*".join(parts)


def render_character(chi: Character) -> str:
    """``chi{g:k/N,...}``: the value at ``g`` is ``exp(2*pi*i*k/N)``; omitted elements map to 1."""
    N = chi.modulus
    body = ",".join(f"{g}:{Fraction(v, N)}" for g, v in chi.as_dict().items() if v)
    return f"chi{{{body}}}"


def render_orbit(O: Orbit) -> str:
    if O.is_fixed_point:
        parts = []
        if not O.character.is_trivial:
            parts.append(render_character(O.character))
        mono = render_monomial(O.weights[0])
        if mono:
            parts.append(mono)
        return "*".join(parts) or "1"
    H = ",".join(map(str, O.stabilizer.elements))
    chi = "" if O.character.is_trivial else " " + render_character(O.character)
    pts = " ".join(f"{b}:({','.join(map(str, w))})" for b, w in zip(O.transversal, O.weights))
    return f"[H={{{H}}}{chi} | {pts}]"


def _join(terms) -> str:
    out = []
    for c, body in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if not out:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(f"{sign} {text}")
    return " ".join(out) if out else "0"


def render_ring_element(A: RingElement) -> str:
    return _join((c, render_orbit(O)) for O, c in A.items())


def render_series(S: MultiIndexSeries) -> str:
    return _join((c, render_monomial(i) or "1") for i, c in S.items())


def render_equivariant_series(S: EquivariantSeries) -> str:
    terms = []
    for i, chi, c in S.items():
        parts = [] if chi.is_trivial else [render_character(chi)]
        mono = render_monomial(i)
        if mono:
            parts.append(mono)
        terms.append((c, "*".join(parts) or "1"))
    return _join(terms)

"""Ring expressions: a small JSON syntax tree evaluated in the truncated ring.

An expression document looks like::

    {"group": {"named": {"kind": "cyclic", "m": 2}}, "r": 1, "bound": [6],
     "let": {"t1": <orbit descriptor>, ...},
     "expr": {"add": [...]}}

Nodes are integers (multiples of 1), names bound in ``let``,
``{"orbit": <descriptor>}``, ``{"add": [..]}``, ``{"sub": [a, b]}``,
``{"neg": a}``, ``{"mul": [..]}``, ``{"pow": [a, k]}`` and
``{"geom": [chi, a]}`` for ``(1 - a)^(-chi)``.
"""

from __future__ import annotations

import copy
from typing import Any

from .errors import ParseError
from .formats import _get, _int_list, group_from_json, orbit_from_json
from .group import Group, named_group
from .orbit import Orbit
from .ring import RingElement, add, from_orbit, geometric_inverse_power, mul, neg, one, power

# The multiplicative generators of K0((Z2,1)-sets): element 1 generates Z2.
Z2_GENERATORS: dict[str, dict] = {
    "t1": {"stabilizer": [0], "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [1]}]},
    "t2": {"stabilizer": [0], "points": [{"rep": 0, "weight": [0]}, {"rep": 1, "weight": [0]}]},
    "t3": {"stabilizer": [0, 1], "points": [{"rep": 0, "weight": [1]}]},
    "t4": {"stabilizer": [0, 1], "character": {"1": 1}, "points": [{"rep": 0, "weight": [0]}]},
}

_Z2 = {"named": {"kind": "cyclic", "m": 2}}


def z2_generators(bound=(10,)) -> dict[str, RingElement]:
    G = named_group("cyclic", 2)
    return {name: from_orbit(orbit_from_json(G, d), bound) for name, d in Z2_GENERATORS.items()}


def free_z2_orbit(m1: int, m2: int) -> Orbit:
    """``A_{m1 m2}``: the free Z2-orbit with weights m1 and m2 and trivial characters."""
    G = named_group("cyclic", 2)
    return orbit_from_json(
        G, {"stabilizer": [0], "points": [{"rep": 0, "weight": [m1]}, {"rep": 1, "weight": [m2]}]}
    )


def _z2_doc(bound, expr) -> dict:
    return {"group": _Z2, "r": 1, "bound": bound, "let": copy.deepcopy(Z2_GENERATORS), "expr": expr}


BUILTIN_EXPRESSIONS: dict[str, dict] = {
    "z2-t4-squared": _z2_doc([10], {"mul": ["t4", "t4"]}),
    "z2-a15": _z2_doc(
        [6],
        {
            "add": [
                {"mul": [{"pow": ["t1", 4]}, "t3"]},
                {"mul": ["t2", {"pow": ["t3", 3]}]},
                {"mul": [-4, {"pow": ["t1", 2]}, {"pow": ["t3", 2]}]},
            ]
        },
    ),
    "z2-geom": _z2_doc([2], {"geom": [2, {"mul": ["t3", "t4"]}]}),
}


class _Evaluator:
    def __init__(self, G: Group, r: int, bound: tuple[int, ...], env: dict[str, RingElement]):
        self.G, self.r, self.bound, self.env = G, r, bound, env

    def __call__(self, node: Any) -> RingElement:
        if isinstance(node, bool):
            raise ParseError("booleans are not ring expressions")
        if isinstance(node, int):
            return one(self.G, self.r, self.bound).scale(node)
        if isinstance(node, str):
            if node not in self.env:
                raise ParseError(f"unknown name {node!r}")
            return self.env[node]
        if not isinstance(node, dict) or len(node) != 1:
            raise ParseError(f"expression node must be an int, a name or a one-key object: {node!r}")
        (op, arg), = node.items()
        if op == "orbit":
            return from_orbit(orbit_from_json(self.G, arg), self.bound)
        if op == "neg":
            return neg(self(arg))
        if op in ("add", "mul"):
            if not isinstance(arg, list) or not arg:
                raise ParseError(f"{op!r} takes a nonempty list")
            f = add if op == "add" else mul
            acc = self(arg[0])
            for a in arg[1:]:
                acc = f(acc, self(a))
            return acc
        if op == "sub":
            a, b = self._pair(op, arg)
            return add(self(a), neg(self(b)))
        if op == "pow":
            a, k = self._pair(op, arg)
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise ParseError(f"'pow' exponent must be a nonnegative integer, got {k!r}")
            return power(self(a), k)
        if op == "geom":
            chi, a = self._pair(op, arg)
            if not isinstance(chi, int) or isinstance(chi, bool):
                raise ParseError(f"'geom' Euler characteristic must be an integer, got {chi!r}")
            return geometric_inverse_power(self(a), chi)
        raise ParseError(f"unknown operator {op!r}")

    @staticmethod
    def _pair(op, arg):
        if not isinstance(arg, list) or len(arg) != 2:
            raise ParseError(f"{op!r} takes exactly two arguments")
        return arg


def evaluate_document(doc: Any, bound=None) -> RingElement:
    G = group_from_json(_get(doc, "group", dict, "expression"))
    if bound is None:
        bound = _int_list(_get(doc, "bound", list, "expression"), "expression.bound")
    bound = tuple(bound)
    r = doc.get("r", len(bound))
    lets = doc.get("let", {})
    if not isinstance(lets, dict):
        raise ParseError("'let' must be an object")
    env = {name: from_orbit(orbit_from_json(G, d), bound) for name, d in lets.items()}
    if "expr" not in doc:
        raise ParseError("expression: missing key 'expr'")
    return _Evaluator(G, r, bound, env)(doc["expr"])

"""``grsets`` command-line interface.

Exit status: 0 on success, 1 on a semantic error (invalid group, orbit,
spec or mismatched contexts, or a failed selftest), 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .acceptance import run_checks
from .errors import GRSetsError, ParseError
from .expr import BUILTIN_EXPRESSIONS, evaluate_document
from .formats import (
    dumps,
    equivariant_series_to_json,
    render_equivariant_series,
    render_ring_element,
    render_series,
    ring_element_from_json,
    ring_element_to_json,
    series_to_json,
)
from .homomorphisms import project_pi, project_pi_prime
from .resolution import BUILTIN_SPECS, poincare_series, spec_from_json
from .ring import RingElement


class UsageError(ParseError):
    pass


def _parse_bound(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        bound = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--bound must be comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in bound):
        raise UsageError(f"--bound entries must be nonnegative, got {text!r}")
    return bound


def _load_document(source: str, builtins: dict[str, dict]) -> dict:
    path = Path(source)
    if path.is_file():
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: invalid JSON: {exc}") from None
        except OSError as exc:
            raise ParseError(f"{source}: {exc}") from None
    if source in builtins:
        return json.loads(json.dumps(builtins[source]))
    raise ParseError(f"{source}: no such file or built-in example")


def _output(A: RingElement, project: str | None, fmt: str) -> str:
    if fmt == "series" and project is None:
        project = "pi"
    if project == "pi":
        S = project_pi(A)
        return dumps(series_to_json(S)) if fmt == "json" else render_series(S) + "\n"
    if project == "pi-prime":
        E = project_pi_prime(A)
        return dumps(equivariant_series_to_json(E)) if fmt == "json" else render_equivariant_series(E) + "\n"
    return dumps(ring_element_to_json(A)) if fmt == "json" else render_ring_element(A) + "\n"


def _check_bound(bound, r: int) -> None:
    if bound is not None and len(bound) != r:
        raise UsageError(f"--bound has {len(bound)} entries, the input has r={r}")


def cmd_poincare(args) -> int:
    doc = _load_document(args.spec, BUILTIN_SPECS)
    spec = spec_from_json(doc)
    bound = _parse_bound(args.bound)
    _check_bound(bound, spec.r)
    sys.stdout.write(_output(poincare_series(spec, bound), args.project, args.format))
    return 0


def cmd_ring(args) -> int:
    doc = _load_document(args.expr, BUILTIN_EXPRESSIONS)
    bound = _parse_bound(args.bound)
    if bound is not None and isinstance(doc, dict) and isinstance(doc.get("bound"), list):
        _check_bound(bound, len(doc["bound"]))
    sys.stdout.write(_output(evaluate_document(doc, bound), args.project, args.format))
    return 0


def cmd_project(args) -> int:
    doc = _load_document(args.element, {})
    A = ring_element_from_json(doc)
    sys.stdout.write(_output(A, args.to, args.format))
    return 0


def _specs_from_dir(directory: str) -> dict:
    path = Path(directory)
    if not path.is_dir():
        raise ParseError(f"{directory}: not a directory")
    specs = {}
    for f in sorted(path.glob("*.json")):
        try:
            doc = json.loads(f.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"{f}: {exc}") from None
        spec = spec_from_json(doc)
        specs[spec.name or f.stem] = spec
    return specs


def cmd_selftest(args) -> int:
    specs = _specs_from_dir(args.specs_dir) if args.specs_dir else None
    results = run_checks(args.filter, specs)
    for res in results:
        print(res.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_examples(args) -> int:
    if args.emit:
        out = Path(args.emit)
        try:
            (out / "expr").mkdir(parents=True, exist_ok=True)
            for name, doc in BUILTIN_SPECS.items():
                (out / f"{name}.json").write_text(dumps(doc), encoding="utf-8")
            for name, doc in BUILTIN_EXPRESSIONS.items():
                (out / "expr" / f"{name}.json").write_text(dumps(doc), encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"{out}: {exc}") from None
        print(f"wrote {len(BUILTIN_SPECS)} specs and {len(BUILTIN_EXPRESSIONS)} expressions to {out}")
        return 0
    print("resolution specs (grsets poincare NAME):")
    for name, doc in BUILTIN_SPECS.items():
        print(f"  {name:22} {doc.get('description', '')}")
    print("ring expressions (grsets ring NAME):")
    for name in BUILTIN_EXPRESSIONS:
        print(f"  {name}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grsets", description="Grothendieck ring of (G,r)-sets and equivariant Poincare series."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    formats = ["orbits", "series", "json"]
    p = sub.add_parser("poincare", help="evaluate the product formula for a resolution spec")
    p.add_argument("spec", help="spec JSON file or built-in spec name")
    p.add_argument("--bound", help="truncation bound v1,...,vr (overrides the one in the file)")
    p.add_argument("--project", choices=["pi", "pi-prime"])
    p.add_argument("--format", choices=formats, default="orbits")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("ring", help="evaluate a ring expression file")
    p.add_argument("expr", help="expression JSON file or built-in expression name")
    p.add_argument("--bound", help="truncation bound v1,...,vr (overrides the file)")
    p.add_argument("--project", choices=["pi", "pi-prime"])
    p.add_argument("--format", choices=formats, default="orbits")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("project", help="project a ring element JSON file")
    p.add_argument("element", help="ring element JSON (as written by --format json)")
    p.add_argument("--to", choices=["pi", "pi-prime"], default="pi")
    p.add_argument("--format", choices=["series", "json"], default="series")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--filter", help="only run checks whose name contains this substring")
    p.add_argument("--specs-dir", help="load resolution specs from this directory instead of the built-ins")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("examples", help="list or export the built-in examples")
    p.add_argument("--emit", metavar="DIR", help="write the built-in specs and expressions as JSON files")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"grsets: error: {exc}", file=sys.stderr)
        return 2
    except (GRSetsError, ValueError) as exc:
        print(f"grsets: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

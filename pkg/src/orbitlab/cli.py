"""Command line entry point: ``orbitlab``.

Exit codes: 0 verdict produced, 2 precondition violation or bad input,
3 internal inconsistency, rejected certificate or failed suite.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .cochar import PreconditionError
from .matrix import invert
from .modules import generic_tuple
from .orbits import (
    DEFAULT_BOUND,
    InconsistencyError,
    SubgroupSpec,
    TorusOfSubgroup,
    default_torus,
    destabilizer_search,
    is_orbit_closed_full,
)
from .serialize import instance_from_json, tuple_from_json
from .torus import WeightSupport, torus_orbit_closed
from .verify import verify_json
from . import zoo

EXIT_OK, EXIT_PRECONDITION, EXIT_INCONSISTENT = 0, 2, 3


class _Rejected(Exception):
    pass


def _read(path: str) -> Any:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _emit(obj: Any, out: str | None) -> None:
    text = json.dumps(obj, indent=1)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_closed(args) -> Any:
    x = instance_from_json(_read(args.instance))
    if x.kind != "conjugation":
        raise PreconditionError("closed decides conjugation instances only; use destab for other actions")
    return is_orbit_closed_full(x.point, args.seed).to_json()


def cmd_destab(args) -> Any:
    x = instance_from_json(_read(args.instance))
    H = SubgroupSpec.from_json(_read(args.subgroup)) if args.subgroup else SubgroupSpec.full(x.field, x.ambient_dim, x.det_constraint == "SL")
    torus = TorusOfSubgroup.from_json(_read(args.torus)) if args.torus else default_torus(H, x, args.seed)
    return destabilizer_search(x, H, torus, args.bound, args.seed).to_json()


def cmd_gcr(args) -> Any:
    gens = tuple_from_json(_read(args.generators))
    if any(invert(m) is None for m in gens.entries):
        raise PreconditionError("generators must be invertible")
    t, _ = generic_tuple(gens)
    return is_orbit_closed_full(t, args.seed).to_json()


def cmd_verify(args) -> Any:
    errors = verify_json(_read(args.certificate))
    if errors:
        raise _Rejected({"valid": False, "errors": errors})
    return {"valid": True, "errors": []}


def cmd_torus(args) -> Any:
    return torus_orbit_closed(WeightSupport.from_json(_read(args.support))).to_json()


def cmd_zoo(args) -> Any:
    if args.zoo_cmd == "list":
        return {"suites": list(zoo.SUITES), "instances": zoo.list_instances()}
    names = [args.suite] if args.suite else list(zoo.SUITES)
    reports = [zoo.run_suite(n).to_json() for n in names]
    out = reports[0] if args.suite else {"suites": reports, "passed": all(r["passed"] for r in reports)}
    if not all(r["passed"] for r in reports):
        raise _Rejected(out)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitlab", description="Exact orbit-closedness decisions with certificates.")
    p.add_argument("--out", help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("closed", help="decide closedness of a GL_n / SL_n conjugation orbit")
    c.add_argument("instance")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_closed)

    d = sub.add_parser("destab", help="bounded destabilizer search in a subgroup")
    d.add_argument("instance")
    d.add_argument("--subgroup", help="SubgroupSpec JSON (default: the full group)")
    d.add_argument("--torus", help="TorusOfSubgroup JSON overriding the derived torus")
    d.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=cmd_destab)

    g = sub.add_parser("gcr", help="complete reducibility of the group generated by a tuple")
    g.add_argument("generators")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gcr)

    v = sub.add_parser("verify", help="re-check a certificate from scratch")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("torus", help="torus-orbit closedness of a weight support")
    t.add_argument("support")
    t.set_defaults(func=cmd_torus)

    z = sub.add_parser("zoo", help="curated instances and property suites")
    zsub = z.add_subparsers(dest="zoo_cmd", required=True)
    zsub.add_parser("list")
    zr = zsub.add_parser("run")
    zr.add_argument("--suite", choices=zoo.SUITES)
    z.set_defaults(func=cmd_zoo)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except _Rejected as exc:
        _emit(exc.args[0], args.out)
        return EXIT_INCONSISTENT
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (PreconditionError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(result, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

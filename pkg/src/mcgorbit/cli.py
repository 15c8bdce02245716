"""Command-line surface.

Exit codes: 0 for any completed verdict (a budget breach is an honest
result, not a failure), 1 for input errors, 2 for internal consistency
violations.  Machine artifacts go to --out as canonical JSON; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from . import fileio, scenarios
from .autgen import MoveSet, NAMED_MOVES
from .conj import are_conjugate
from .errors import InputError, InternalCheckError, McgError, UnsupportedRepresentation
from .finimg import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_WITNESS_LENGTH,
    image_verdict,
    jordan_commutator_test,
    screens,
)
from .orbit import OrbitBudget, mcg_finite_check, verify_closure
from .words import parse_word

MOVE_ALIASES = {"c": "c", "tau": "tau", "eps": "eps", "epsilon": "eps", "d": "d"}


def _default_workers() -> int:
    raw = os.environ.get("MCGORBIT_WORKERS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(value, 1)


def _parse_moves(spec: str, aut_paths: list[str]) -> MoveSet:
    named: tuple[str, ...]
    if spec == "nielsen":
        named = NAMED_MOVES
    elif spec == "none":
        named = ()
    else:
        parts = [p.strip() for p in spec.split(",") if p.strip()]
        bad = [p for p in parts if p not in MOVE_ALIASES]
        if bad:
            raise InputError(f"unknown move name(s): {', '.join(bad)}")
        named = tuple(MOVE_ALIASES[p] for p in parts)
    custom = tuple(fileio.load_substitution(p) for p in aut_paths)
    return MoveSet(named=named, custom=custom)


def _emit(args, obj: dict):
    if not getattr(args, "no_timestamp", False):
        obj = dict(obj)
        obj["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    text = fileio.dumps_canonical(obj)
    if getattr(args, "out", None):
        fileio.write_text(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_orbit(args) -> int:
    rep = fileio.load_rep(args.rep)
    moves = _parse_moves(args.moves, args.aut or [])
    budget = OrbitBudget(
        max_classes=args.max_classes,
        max_depth=args.max_depth,
        max_seconds=args.max_seconds,
    )
    probe = parse_word(args.probe_word) if args.probe_word else None
    result = mcg_finite_check(
        rep, moves, budget, workers=args.workers, probe_word=probe
    )
    if result.verdict == "finite" and not args.skip_recheck:
        if not verify_closure(result, moves):
            raise InternalCheckError("closure re-check failed on a finite verdict")
    _emit(args, fileio.orbit_result_to_obj(result, not args.no_representatives))
    print(
        f"orbit: {result.verdict}"
        + (f" with {result.class_count} class(es)" if result.class_count else ""),
        file=sys.stderr,
    )
    return 0


def cmd_conjugate(args) -> int:
    a = fileio.load_rep(args.rep_a)
    b = fileio.load_rep(args.rep_b)
    verdict = are_conjugate(a, b)
    if verdict.kind == "unsupported":
        raise UnsupportedRepresentation(
            f"intertwiner dimension {verdict.basis_dimension} exceeds the pencil cap"
        )
    _emit(args, fileio.conjugacy_verdict_to_obj(verdict, a.field))
    print(f"conjugacy: {verdict.kind}", file=sys.stderr)
    return 0


def cmd_finite_image(args) -> int:
    rep = fileio.load_rep(args.rep)
    verdict = image_verdict(rep, cap=args.cap, max_word_length=args.witness_length)
    obj = fileio.image_verdict_to_obj(verdict)
    obj["screens"] = fileio.screen_report_to_obj(screens(rep))
    _emit(args, obj)
    print(f"image: {verdict.kind}", file=sys.stderr)
    return 0


def cmd_jordan(args) -> int:
    if args.rank < 2:
        raise InputError("--rank must be >= 2")
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    failures = [
        n for n in range(1, args.n_max + 1) if not jordan_commutator_test(args.rank, n)
    ]
    _emit(
        args,
        {
            "rank": args.rank,
            "n_max": args.n_max,
            "all_nontrivial": not failures,
            "failures": failures,
        },
    )
    if failures:
        # impossible in characteristic zero; reaching this line means a bug
        raise InternalCheckError(f"trivial commutators at n = {failures}")
    print(
        f"jordan: all {args.n_max} commutators nontrivial at rank {args.rank}",
        file=sys.stderr,
    )
    return 0


def cmd_verify_paper(args) -> int:
    results = scenarios.run_all(only=args.only)
    rows = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"{status:4}  {res.name:32} {res.seconds:7.2f}s"
            f"  (budget {res.budget_seconds:g}s, {res.origin})",
            file=sys.stderr,
        )
        if not res.passed:
            print(f"      {res.details}", file=sys.stderr)
        rows.append(
            {
                "name": res.name,
                "passed": res.passed,
                "seconds": round(res.seconds, 3),
                "budget_seconds": res.budget_seconds,
                "origin": res.origin,
                "details": res.details,
            }
        )
    _emit(args, {"scenarios": rows, "all_passed": all(r.passed for r in results)})
    return 0 if all(r.passed for r in results) else 1


def cmd_fmt(args) -> int:
    obj = fileio.load_json(args.path)
    kind, canonical = fileio.canonicalize_obj(obj)
    text = fileio.dumps_canonical(canonical)
    if args.out:
        fileio.write_text(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"fmt: valid {kind}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcgorbit",
        description=(
            "Exact-arithmetic engine for orbits of matrix-tuple conjugacy "
            "classes under Nielsen moves, with finite/infinite image "
            "certification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="enumerate the conjugacy-class orbit of a tuple")
    p.add_argument("--rep", required=True, help="representation file")
    p.add_argument("--moves", default="nielsen", help="'nielsen', 'none', or comma list of c,tau,eps,d")
    p.add_argument("--aut", action="append", help="custom automorphism file (repeatable)")
    p.add_argument("--max-classes", type=int, default=10000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--probe-word", default=None, help="diagnostics probe word (default x1)")
    p.add_argument("--skip-recheck", action="store_true", help="skip the closure re-check")
    p.add_argument("--no-representatives", action="store_true")
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("conjugate", help="decide conjugacy of two tuples")
    p.add_argument("rep_a")
    p.add_argument("rep_b")
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("finite-image", help="certify the generated matrix group finite or infinite")
    p.add_argument("--rep", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--witness-length", type=int, default=DEFAULT_WITNESS_LENGTH)
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_finite_image)

    p = sub.add_parser("jordan", help="sweep the unipotent commutator test")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("verify-paper", help="replay every bundled reference scenario")
    p.add_argument("--only", default=None, help="substring filter on scenario names")
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("fmt", help="validate and canonicalize an input file")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fmt)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, UnsupportedRepresentation, McgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

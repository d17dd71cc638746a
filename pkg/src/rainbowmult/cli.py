"""Command-line entry point: ``rainbowmult <subcommand> ...``.

Exit codes: 0 success, 1 usage or domain error, 2 I/O, format or budget error,
3 a checked mathematical claim failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb

from . import __version__
from .certifier import (
    Budget,
    audit_lemma_bounds,
    certify_uncommon,
    find_min_r_semifinal,
    semifinal_record,
    verify_recurrence,
)
from .coloring import BlowupColoring, materialize, parallel_coloring, read_coloring, write_coloring
from .counting import count_rainbow_complete
from .errors import DomainError, FormatError, InvariantViolation, ResourceError
from .exact import leading_gap_coefficient, semifinal_polynomial
from .kernels import BACKEND
from .simulate import estimate_rainbow_proportion, hill_climb, sample_uniform_coloring

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_INVARIANT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _rat(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _u64(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _budget(args) -> Budget:
    return Budget(max_vertices=args.max_vertices, max_visits=args.max_visits)


# each handler returns (payload, exit_code)

def cmd_construct(args):
    c = parallel_coloring(args.r)
    write_coloring(c, args.out)
    return {"n": c.n, "r": c.r, "out": args.out}, EXIT_OK


def cmd_count(args):
    c = read_coloring(args.coloring)
    res = count_rainbow_complete(c, args.t, workers=args.workers, max_visits=args.max_visits)
    return {
        "n": c.n,
        "r": c.r,
        "t": res.t,
        "total": str(res.total),
        "rainbow": str(res.rainbow),
        "non_rainbow": str(res.non_rainbow),
        "proportion": _rat(res.proportion),
        "backend": BACKEND,
    }, EXIT_OK


def cmd_blowup(args):
    base = read_coloring(args.base)
    c = materialize(BlowupColoring(base, args.depth), args.max_vertices)
    write_coloring(c, args.out)
    return {"b": base.n, "depth": args.depth, "n": c.n, "r": c.r, "out": args.out}, EXIT_OK


def cmd_certify(args):
    cert = certify_uncommon(args.t, args.r, source=args.source, budget=_budget(args))
    out = cert.to_json()
    if args.t >= 4:
        out["semifinal"] = semifinal_record(args.t, args.r)
    return out, EXIT_OK


def cmd_threshold(args):
    return find_min_r_semifinal(args.t, args.r_max).to_json(), EXIT_OK


def cmd_coeff(args):
    t = args.t
    e = comb(t, 2)
    poly = semifinal_polynomial(t)
    try:
        gap = leading_gap_coefficient(t)
    except InvariantViolation:
        gap = None
    expected = t * (t - 1) * (t - 3) // 2
    out = {
        "t": t,
        "top_power": e + 2,
        "top_coefficient": str(poly.coeff(e + 2)),
        "gap_power": e + 1,
        "leading_gap_coefficient": None if gap is None else str(gap),
        "expected": str(expected),
        "matches": gap == expected,
    }
    return out, EXIT_OK if gap == expected else EXIT_INVARIANT


def cmd_audit(args):
    rep = audit_lemma_bounds(args.t, args.r, _budget(args))
    return rep.to_json(), EXIT_OK if rep.bound_respected else EXIT_INVARIANT


def cmd_recurrence(args):
    base = read_coloring(args.base)
    rep = verify_recurrence(base, args.t, args.depth, _budget(args))
    return rep.to_json(), EXIT_OK if rep.holds and rep.steps_hold else EXIT_INVARIANT


def cmd_simulate(args):
    rep = estimate_rainbow_proportion(args.n, args.t, args.r, args.samples, args.seed, workers=args.workers)
    return rep.to_json(), EXIT_OK


def cmd_search(args):
    start = sample_uniform_coloring(args.n, args.r, args.seed)
    initial = count_rainbow_complete(start, args.t, max_visits=args.max_visits).rainbow
    best, count = hill_climb(start, args.t, args.steps)
    if args.out:
        write_coloring(best, args.out)
    return {
        "n": args.n,
        "r": args.r,
        "t": args.t,
        "initial_rainbow": str(initial),
        "final_rainbow": str(count),
        "proportion": _rat(Fraction(count, comb(args.n, args.t))),
        "out": args.out,
    }, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    common.add_argument("--max-vertices", type=int, default=Budget.max_vertices, help="materialization cap")
    common.add_argument("--max-visits", type=int, default=Budget.max_visits, help="enumeration cap")

    p = _Parser(prog="rainbowmult", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("construct", parents=[common], help="write the parallel r-coloring of K_r")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("count", parents=[common], help="count rainbow K_t in a coloring file")
    s.add_argument("--coloring", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("blowup", parents=[common], help="materialize an iterated blow-up")
    s.add_argument("--base", required=True)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_blowup)

    s = sub.add_parser("certify", parents=[common], help="exact uncommonness certificate for K_t with r colors")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--source", choices=("auto", "parallel", "search"), default="auto")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("threshold", parents=[common], help="smallest r satisfying the cleared inequality")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--r-max", type=int, required=True)
    s.set_defaults(func=cmd_threshold)

    s = sub.add_parser("coeff", parents=[common], help="leading coefficients of the cleared polynomial")
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("audit", parents=[common], help="non-rainbow count of the parallel coloring vs lemma bound")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("recurrence", parents=[common], help="exact blow-up counts vs the closed-form bound")
    s.add_argument("--base", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_recurrence)

    s = sub.add_parser("simulate", parents=[common], help="Monte Carlo rainbow proportion of uniform colorings")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=_u64, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("search", parents=[common], help="hill climb from a seeded random coloring")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--seed", type=_u64, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def _params(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "json")}


def _human(payload: dict) -> str:
    rows = []
    for k, v in payload.items():
        if isinstance(v, dict) and set(v) == {"num", "den"}:
            v = v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
        elif isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        rows.append((k, str(v)))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        payload, code = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, ResourceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.json:
        payload = {**payload, "params": _params(args)}
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        print(_human(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())

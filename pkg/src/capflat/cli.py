"""Command line front end.

Exit codes: 0 success, 1 violation found, 2 usage error, 3 sweep aborted on
its time limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalan import catalan, recurrence_holds
from .diagram import WeightFunction, build_cap_diagram, tally
from .moves import decomposition_counts, flat_recursive
from .render import STYLES, render, render_window
from .verify import DEFAULT_MAX_RANK, DEFAULT_ORACLE_SAMPLE, run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_ABORT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _weight(text: str) -> WeightFunction:
    try:
        return WeightFunction.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def flat_payload(f: WeightFunction) -> dict:
    d = flat_recursive(f)
    r = f.rank
    decomposition = {}
    for idx, size, left, under in decomposition_counts(d):
        entry = {"size": size}
        if idx.key != "half":
            entry.update(left=left, under=under)
        decomposition[idx.key] = entry
    size = len(d)
    return {
        "f": list(f.entries),
        "rank": r,
        "flat": [list(g.entries) for g in d.members],
        "size": size,
        "catalan_bound": catalan(r + 1),
        "lower_bound": r + 1,
        "extremal": size == catalan(r + 1),
        "minimal": size == r + 1,
        "decomposition": decomposition,
    }


def format_flat_text(payload: dict) -> str:
    r, size = payload["rank"], payload["size"]
    lines = [f"f = ({','.join(map(str, payload['f']))})  r = {r}", "flat(f):"]
    lines += [f"  ({','.join(map(str, g))})" for g in payload["flat"]]
    if payload["decomposition"]:
        lines.append("decomposition:")
        for key, entry in payload["decomposition"].items():
            extra = f" = {entry['left']} x {entry['under']}" if "left" in entry else ""
            lines.append(f"  {key:<8} size {entry['size']}{extra}")
    lines.append(f"|flat f| = {size}")
    upper = f"{size} ≤ C_{r + 1} = {payload['catalan_bound']}"
    lines.append(upper + (" (extremal)" if payload["extremal"] else ""))
    lower = f"{size} ≥ r+1 = {r + 1}"
    lines.append(lower + (" (minimal)" if payload["minimal"] else ""))
    return "\n".join(lines)


def cmd_flat(args) -> int:
    payload = flat_payload(_weight(args.f))
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(format_flat_text(payload))
    return EXIT_OK


def render_for(f: WeightFunction, what: str, style: str) -> str:
    caps = build_cap_diagram(f) if what in ("cap", "all") else None
    if what in ("tally", "all"):
        if f.rank == 0:
            raise UsageError("the tally needs a nonempty weight function")
        lo, hi = render_window(f, caps)
        return render(f, caps, tally(f, (lo, hi)), style=style)
    return render(f, caps, style=style)


def cmd_render(args) -> int:
    sys.stdout.write(render_for(_weight(args.f), args.what, args.style))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.rank <= args.max_rank:
        raise UsageError(f"rank must lie in [1, {args.max_rank}]")
    window = args.window if args.window is not None else 2 * args.rank + 6
    if window < 2 * args.rank:
        raise UsageError(f"window must be at least 2 * rank = {2 * args.rank}")
    sample = args.oracle_sample
    if sample is None:
        sample = None if args.rank <= 4 else DEFAULT_ORACLE_SAMPLE
    elif sample < 0:
        sample = None
    report = run_sweep(
        args.rank, window, oracle_sample=sample, jobs=args.jobs, seed=args.seed, time_limit=args.time_limit
    )
    print(json.dumps(report.as_dict(), indent=2))
    for v in report.violations:
        print(f"violation: {v}", file=sys.stderr)
    if not report.complete:
        print(f"sweep aborted after {args.time_limit} s with {report.tested} functions tested", file=sys.stderr)
        return EXIT_ABORT
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_catalan(args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    values = [catalan(k) for k in range(args.n + 1)]
    ok = all(recurrence_holds(k) for k in range(args.n))
    if args.format == "json":
        print(json.dumps({"catalan": values, "recurrence_holds": ok}, indent=2))
    else:
        print(", ".join(map(str, values)))
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="capflat", description="Cap diagrams, tallies and Catalan bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flat", help="enumerate the matching set of f with its decomposition")
    p.add_argument("--f", required=True, help='comma separated crosses, e.g. "2,4"; "" for empty')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_flat)

    p = sub.add_parser("render", help="draw the weight, cap or tally diagram of f")
    p.add_argument("--f", required=True)
    p.add_argument("--what", choices=("wt", "cap", "tally", "all"), default="all")
    p.add_argument("--style", choices=STYLES, default="ascii")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="exhaustive sweep at a fixed rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--window", type=int, help="default 2 * rank + 6")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument(
        "--oracle-sample", type=int,
        help="functions compared with brute force; default all for rank <= 4, else 200; negative for all",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-limit", type=float, help="seconds before the sweep aborts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalan", help="print C_0, ..., C_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_catalan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"capflat {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

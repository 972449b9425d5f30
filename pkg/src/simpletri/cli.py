"""Command line interface.

Exit codes are a stable scripting contract: 0 accept, 1 reject (or oracle
disagreement), 2 input error.
"""
from __future__ import annotations

import argparse
import random
import sys
from typing import Optional, Sequence

from .errors import (
    CycleError,
    LimitExceeded,
    NotAnExtension,
    ParseError,
    SimpleTriError,
)
from .graphs import APEX_PATTERNS, find_pattern, fulfills_c4_rule, is_cocomparability_ordering
from .io import emit_representation, load_graph, load_order
from .oracles import (
    all_transitive_complements_extend,
    exact_triangle_intersection,
    geometric_search_realization,
    has_alternating_transitive_pair,
    random_triangle_pair,
)
from .orders import (
    Anticycle,
    build_interval_representation,
    enumerate_linear_extensions,
    find_alternating_anticycle,
    recognize_linear_interval_order,
)
from .recognition import check_apex_ordering, recognize, rejection_certificates
from .triangles import triangles_disjoint

REJECT_MESSAGE = "not a simple-triangle graph"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simpletri",
        description="Recognize simple-triangle graphs and linear-interval orders.",
    )
    parser.add_argument("--limit", type=int, default=6, help="oracle size cap")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--quiet", action="store_true", help="suppress output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognize", help="test a graph file")
    p_rec.add_argument("graph")
    p_rec.add_argument("--witness", action="store_true", help="print pruning certificates")

    p_rep = sub.add_parser("represent", help="recognize and emit a representation")
    p_rep.add_argument("graph")
    p_rep.add_argument("-o", "--output", default=None)
    p_rep.add_argument("--format", choices=("structured", "svg"), default="structured")

    p_chk = sub.add_parser("check-ordering", help="evaluate one vertex ordering")
    p_chk.add_argument("graph")
    p_chk.add_argument("ordering", help="comma-separated vertex list")

    p_order = sub.add_parser("order", help="partial order commands")
    order_sub = p_order.add_subparsers(dest="subcommand", required=True)
    p_orec = order_sub.add_parser("recognize", help="linear-interval order test")
    p_orec.add_argument("order")
    p_oint = order_sub.add_parser("intervals", help="interval construction for one extension")
    p_oint.add_argument("order")
    p_oint.add_argument("extension", help="comma-separated element list")

    p_oracle = sub.add_parser("oracle", help="brute-force cross checks")
    oracle_sub = p_oracle.add_subparsers(dest="subcommand", required=True)
    p_over = oracle_sub.add_parser("verify", help="compare recognizer with the oracles")
    p_over.add_argument("graph")
    return parser


def _parse_ordering(text: str, n: int) -> tuple[int, ...]:
    try:
        ordering = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"ordering {text!r} is not a comma-separated int list") from None
    if sorted(ordering) != list(range(n)):
        raise ParseError(f"ordering {text!r} is not a permutation of 0..{n - 1}")
    return ordering


def _emit(say, label: str, seq: Sequence[int]) -> None:
    say(f"{label}: " + " ".join(str(v) for v in seq))


def _say_intervals(say, rep) -> None:
    say(
        "intervals: "
        + " ".join(f"{v}:[{lo},{hi}]" for v, (lo, hi) in enumerate(rep.intervals))
    )


def _say_anticycle(say, ac: Anticycle) -> None:
    _emit(say, "anticycle a", ac.a)
    _emit(say, "anticycle b", ac.b)


def cmd_recognize(args, say) -> int:
    g = load_graph(args.graph)
    result = recognize(g)
    if result is None:
        say(REJECT_MESSAGE)
        if args.witness:
            for prefix, name, verts in rejection_certificates(g):
                say(
                    "rejected prefix "
                    + ",".join(map(str, prefix))
                    + f": {name} witness "
                    + ",".join(map(str, verts))
                )
        return 1
    ordering, _ = result
    say(" ".join(str(v) for v in ordering))
    return 0


def cmd_represent(args, say) -> int:
    g = load_graph(args.graph)
    result = recognize(g)
    if result is None:
        say(REJECT_MESSAGE)
        return 1
    _, rep = result
    document = emit_representation(rep, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document if document.endswith("\n") else document + "\n")
    return 0


def cmd_check_ordering(args, say) -> int:
    g = load_graph(args.graph)
    ordering = _parse_ordering(args.ordering, g.n)
    say(f"cocomparability: {'yes' if is_cocomparability_ordering(g, ordering) else 'no'}")
    say(f"C4 rule: {'yes' if fulfills_c4_rule(g, ordering) else 'no'}")
    for name, pat in APEX_PATTERNS:
        witness = find_pattern(g, ordering, pat)
        say(f"{name}: " + ("none" if witness is None else ",".join(map(str, witness))))
    accepted = check_apex_ordering(g, ordering)
    say(f"apex ordering: {'yes' if accepted else 'no'}")
    return 0 if accepted else 1


def cmd_order_recognize(args, say) -> int:
    p = load_order(args.order)
    result = recognize_linear_interval_order(p)
    if result is None:
        say("not a linear-interval order")
        first = next(enumerate_linear_extensions(p))
        _emit(say, "witness extension", first)
        ac = find_alternating_anticycle(p, first, k_max=2)
        if ac is not None:
            _say_anticycle(say, ac)
        return 1
    ext, rep = result
    _emit(say, "extension", ext)
    _say_intervals(say, rep)
    return 0


def cmd_order_intervals(args, say) -> int:
    p = load_order(args.order)
    ext = _parse_ordering(args.extension, p.n)
    result = build_interval_representation(p, ext)
    if isinstance(result, Anticycle):
        say("no interval representation for this extension")
        _say_anticycle(say, result)
        return 1
    _say_intervals(say, result)
    return 0


def cmd_oracle_verify(args, say) -> int:
    g = load_graph(args.graph)
    rec = recognize(g)
    say(f"recognize: {'accept' if rec else 'reject'}")
    oracle_rep = geometric_search_realization(g, limit=args.limit)
    say(f"geometric search: {'realizable' if oracle_rep else 'none'}")
    agree = (rec is None) == (oracle_rep is None)
    pair = has_alternating_transitive_pair(g, limit=args.limit)
    say(f"alternating/transitive pair: {'yes' if pair else 'no'}")
    agree = agree and pair == (rec is not None)
    if rec is not None:
        extend = all_transitive_complements_extend(g, limit=args.limit)
        say(f"complement orientations extend: {'yes' if extend else 'no'}")
        agree = agree and extend
    rng = random.Random(args.seed)
    pairs = 2000
    mismatches = 0
    for _ in range(pairs):
        t = random_triangle_pair(rng)
        if (not triangles_disjoint(t, 0, 1)) != exact_triangle_intersection(t, 0, 1):
            mismatches += 1
    say(f"geometry cross-check: {pairs - mismatches}/{pairs} agree")
    agree = agree and mismatches == 0
    say("agreement: " + ("ok" if agree else "MISMATCH"))
    return 0 if agree else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def say(message: str) -> None:
        if not args.quiet:
            print(message)

    handlers = {
        ("recognize", None): cmd_recognize,
        ("represent", None): cmd_represent,
        ("check-ordering", None): cmd_check_ordering,
        ("order", "recognize"): cmd_order_recognize,
        ("order", "intervals"): cmd_order_intervals,
        ("oracle", "verify"): cmd_oracle_verify,
    }
    handler = handlers[(args.command, getattr(args, "subcommand", None))]
    try:
        return handler(args, say)
    except (ParseError, CycleError, NotAnExtension, LimitExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SimpleTriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

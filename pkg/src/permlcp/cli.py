"""Command-line interface.

Commands: ``lcp`` (longest common pattern between two permutations),
``tree`` (inspect decomposition trees), ``check`` (separability/simplicity
predicates with witnesses) and ``contains`` (pattern involvement through the
LCP reduction).  Machine output goes to stdout, diagnostics to stderr.

Exit codes: 0 ok/true, 1 predicate false, 2 input error, 3 algorithm
precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomposition import (
    NotSeparableError,
    common_intervals,
    decomposition_tree,
    expand_tree,
    max_prime_arity,
    tree_to_dict,
    tree_to_dot,
    tree_to_text,
)
from .lcp import lcp, lcp_plan
from .oracle import oracle_is_simple
from .perms import Pattern, find_occurrence, parse_permutation

# Prime arity at which the per-cell cost n^(2d-2) starts to hurt.
ARITY_WARN_THRESHOLD = 6


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def cmd_lcp(args: argparse.Namespace) -> int:
    sigma = parse_permutation(args.sigma)
    tau = parse_permutation(args.tau)
    if args.algo in ("auto", "general"):
        if args.algo == "general":
            arity = max_prime_arity(decomposition_tree(sigma))
        else:
            arity = lcp_plan(sigma, tau).prime_arity
        if arity >= ARITY_WARN_THRESHOLD:
            _warn(
                f"guiding tree has a prime node of arity {arity}; the per-cell "
                f"cost grows like n^(2*{arity}-2), this may be very slow"
            )
    result = lcp(sigma, tau, args.algo, canonical=args.canonical)
    if args.quiet:
        return 0
    if args.output == "json":
        print(
            json.dumps(
                {
                    "pattern": list(result.pattern.values),
                    "length": result.length,
                    "occ_sigma": list(result.occ_sigma.positions),
                    "occ_tau": list(result.occ_tau.positions),
                    "algorithm": result.algorithm,
                }
            )
        )
    else:
        print(f"pattern: {result.pattern}")
        print(f"length: {result.length}")
        print(f"occ_sigma: {result.occ_sigma}")
        print(f"occ_tau: {result.occ_tau}")
        print(f"algorithm: {result.algorithm}")
    return 0


def cmd_tree(args: argparse.Namespace) -> int:
    sigma = parse_permutation(args.sigma)
    tree = decomposition_tree(sigma)
    if args.kind == "expanded":
        tree = expand_tree(tree)
    if args.quiet:
        return 0
    if args.format == "dot":
        print(tree_to_dot(tree))
    elif args.format == "json":
        print(json.dumps(tree_to_dict(tree)))
    else:
        print(tree_to_text(tree))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    sigma = parse_permutation(args.sigma)

    if args.separable:
        witness = find_occurrence(sigma, Pattern((3, 1, 4, 2)))
        pattern_name = "3 1 4 2"
        if witness is None:
            witness = find_occurrence(sigma, Pattern((2, 4, 1, 3)))
            pattern_name = "2 4 1 3"
        ok = witness is None
        if not args.quiet:
            if args.output == "json":
                payload = {"predicate": "separable", "value": ok}
                if not ok:
                    payload["witness"] = list(witness.positions)
                    payload["forbidden_pattern"] = pattern_name
                print(json.dumps(payload))
            elif ok:
                print("separable")
            else:
                values = " ".join(str(sigma.values[p - 1]) for p in witness)
                print(
                    f"not separable: {pattern_name} occurs at positions "
                    f"{witness} (values {values})"
                )
        return 0 if ok else 1

    # --simple
    ok = oracle_is_simple(sigma)
    witness_span = None
    if not ok:
        proper = sorted(
            (s for s in common_intervals(sigma) if 1 < s.width < sigma.n),
            key=lambda s: (s.lo, s.hi),
        )
        witness_span = proper[0] if proper else None
    if not args.quiet:
        if args.output == "json":
            payload = {"predicate": "simple", "value": ok}
            if witness_span is not None:
                payload["witness_span"] = [witness_span.lo, witness_span.hi]
            print(json.dumps(payload))
        elif ok:
            print("simple")
        elif witness_span is not None:
            print(f"not simple: common interval at positions {witness_span}")
        else:
            print(f"not simple: size {sigma.n} < 4 (smallest simple size is 4; whole span 1-{sigma.n})")
    return 0 if ok else 1


def cmd_contains(args: argparse.Namespace) -> int:
    pattern = parse_permutation(args.pattern)
    sigma = parse_permutation(args.sigma)
    result = lcp(pattern, sigma, "auto")
    ok = result.length == len(pattern)
    if not args.quiet:
        if args.output == "json":
            payload = {"contains": ok}
            if ok:
                payload["occurrence"] = list(result.occ_tau.positions)
            print(json.dumps(payload))
        elif ok:
            values = " ".join(str(sigma.values[p - 1]) for p in result.occ_tau)
            print(f"occurrence at positions {result.occ_tau} (values {values})")
        else:
            print("no occurrence")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", "-o", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--quiet", action="store_true", help="suppress stdout, keep exit codes")

    parser = argparse.ArgumentParser(
        prog="permlcp",
        description="Longest common pattern between permutations, and the trees behind it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lcp = sub.add_parser("lcp", parents=[common], help="longest common pattern")
    p_lcp.add_argument("sigma", help="first permutation, e.g. '5 1 4 3 2'")
    p_lcp.add_argument("tau", help="second permutation")
    p_lcp.add_argument(
        "--algo",
        choices=("auto", "separable", "general", "oracle"),
        default="auto",
        help="algorithm selection (default: auto)",
    )
    p_lcp.add_argument(
        "--canonical",
        action="store_true",
        help="break ties towards the lexicographically smallest pattern",
    )
    p_lcp.set_defaults(func=cmd_lcp)

    p_tree = sub.add_parser("tree", parents=[common], help="print a decomposition tree")
    p_tree.add_argument("sigma")
    p_tree.add_argument("--kind", choices=("labeled", "expanded"), default="labeled")
    p_tree.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p_tree.set_defaults(func=cmd_tree)

    p_check = sub.add_parser("check", parents=[common], help="test a permutation predicate")
    p_check.add_argument("sigma")
    group = p_check.add_mutually_exclusive_group(required=True)
    group.add_argument("--separable", action="store_true")
    group.add_argument("--simple", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_contains = sub.add_parser(
        "contains", parents=[common], help="does the pattern occur in the permutation?"
    )
    p_contains.add_argument("pattern")
    p_contains.add_argument("sigma")
    p_contains.set_defaults(func=cmd_contains)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSeparableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:  # PermutationError, oracle size guard, ...
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())

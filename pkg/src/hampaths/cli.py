"""Command line entry point.

Exit codes: 0 success or verified, 1 verification/assertion failure, 2 usage
or file-format error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from hampaths.clique_search import (
    build_compat,
    format_table,
    max_clique,
    reproduce_table,
)
from hampaths.family_builder import construct_triangle_family, identity_terms
from hampaths.familyio import FamilyFormatError, format_doc, format_edge_family, format_lines, read_family
from hampaths.graph_core import balanced_bipartition_count, binomial
from hampaths.special_families import (
    hc_prime_family,
    is_prime,
    is_spanning_tree,
    pairwise_union_triangle_failures,
    tree_family,
    union_family_size,
)
from hampaths.verifier import Predicate, certify_tightness, end_edge_injectivity, verify_pairwise


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _info(args: argparse.Namespace, msg: str) -> None:
    # keep stdout clean when the family itself goes there
    print(msg, file=sys.stderr if not getattr(args, "out", None) else sys.stdout, flush=True)


def cmd_construct(args: argparse.Namespace) -> int:
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return 2
    fam = construct_triangle_family(args.n)
    target = balanced_bipartition_count(args.n)
    if args.format == "doc":
        text = format_doc(fam, args.n, predicate="triangle", construction="ladder blueprints + z-swapping")
    else:
        text = format_lines(fam, args.n)
    _emit(text, args.out)
    _info(args, f"constructed {len(fam)} paths on {args.n} vertices; balanced bipartitions: {target}")
    if len(fam) != target:
        print(f"error: count {len(fam)} differs from {target}", file=sys.stderr)
        return 1
    return 0


def _parse_mode(text: str) -> tuple[str, int]:
    if text == "full":
        return "full", 0
    if text.startswith("sample:"):
        count = int(text[7:])
        if count < 1:
            raise ValueError("sample count must be positive")
        return "sample", count
    raise ValueError(f"bad mode {text!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        pred = Predicate.parse(args.predicate)
        mode, samples = _parse_mode(args.mode)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        n, fam, _ = read_family(args.family)
    except (OSError, FamilyFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = verify_pairwise(fam, pred, mode, samples, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text(), flush=True)
    if args.tightness:
        print(certify_tightness(fam))
    return 0 if report.passed else 1


def cmd_search(args: argparse.Namespace) -> int:
    fix_root = args.fix_root == "on"
    budget = args.budget if args.budget > 0 else None
    if args.table:
        print(format_table(reproduce_table(args.n, budget=budget, fix_root=fix_root)), flush=True)
        return 0
    try:
        pred = Predicate.parse(args.predicate)
        g = build_compat(args.n, pred, override=args.override)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    res = max_clique(g, budget=budget, fix_root=fix_root)
    print(f"{res.status} {res.size}")
    print(f"n={args.n} predicate={pred.name} paths={len(g)} nodes={res.nodes} upper_bound={res.upper_bound}")
    if args.witness:
        Path(args.witness).write_text(format_lines([g.paths[i] for i in res.witness], args.n))
    return 0


def cmd_identity(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        print("error: --max-n must be non-negative", file=sys.stderr)
        return 2
    ok = True
    for n in range(args.max_n + 1):
        lhs, rhs = sum(identity_terms(n)), binomial(2 * n + 1, n)
        ok &= lhs == rhs
        print(f"n={n}: {lhs} {'=' if lhs == rhs else '!='} {rhs}")
    return 0 if ok else 1


def cmd_special(args: argparse.Namespace) -> int:
    if args.which == "hc-prime":
        if args.p <= 2 or not is_prime(args.p):
            print(f"error: p={args.p} is not an odd prime", file=sys.stderr)
            return 2
        fam = hc_prime_family(args.p)
        _emit(format_lines(fam), args.out)
        report = verify_pairwise(fam, "ham-cycle")
        ends = end_edge_injectivity(fam)
        _info(args, f"{len(fam)} paths (binomial(p,2) = {binomial(args.p, 2)})")
        _info(args, report.to_text())
        _info(args, f"end-edge injectivity: {'PASS' if ends else 'FAIL'}")
        return 0 if report.passed and ends and len(fam) == binomial(args.p, 2) else 1
    if args.which == "trees":
        if args.n < 2:
            print("error: --n must be at least 2", file=sys.stderr)
            return 2
        trees = tree_family(args.n)
        _emit(format_edge_family(trees), args.out)
        bad = pairwise_union_triangle_failures(trees)
        spanning = all(is_spanning_tree(t) for t in trees)
        _info(args, f"{len(trees)} trees (2^(n-1)-1 = {2 ** (args.n - 1) - 1}); spanning: {spanning}")
        _info(args, f"triangle verification: {len(trees) * (len(trees) - 1) // 2 - len(bad)} pairs pass, {len(bad)} fail")
        return 0 if not bad and spanning else 1
    # mtf
    if not 1 <= args.n <= 6:
        print("error: mtf needs 1 <= n <= 6", file=sys.stderr)
        return 2
    try:
        c = union_family_size(args.n)
    except AssertionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    total = 2 ** (args.n * (args.n - 1) // 2)
    print(f"n={args.n}: {total} labelled graphs")
    print(f"containing a triangle: {c.with_triangle}")
    print(f"maximal triangle-free: {c.maximal_triangle_free}")
    print(f"largest family with a triangle in every union: {c.total}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hampaths", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a maximum triangle-different path family")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out")
    c.add_argument("--format", choices=("lines", "doc"), default="lines")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a family file pairwise")
    v.add_argument("--family", required=True)
    v.add_argument("--predicate", default="triangle", help="triangle | odd-cycle | cycle:K | ham-cycle")
    v.add_argument("--mode", default="full", help="full | sample:N")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.add_argument("--tightness", action="store_true", help="also print the bipartition certificate")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exact maximum clique in the compatibility graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--predicate", default="triangle")
    s.add_argument("--budget", type=int, default=2_000_000, help="node expansions; 0 for unlimited")
    s.add_argument("--fix-root", choices=("on", "off"), default="off")
    s.add_argument("--table", action="store_true", help="sweep every cycle length for 3..n")
    s.add_argument("--witness", help="write the best clique as a family file")
    s.add_argument("--override", action="store_true", help="allow n beyond the desk-scale guard")
    s.set_defaults(func=cmd_search)

    i = sub.add_parser("identity", help="check the binomial identity behind the counting")
    i.add_argument("--max-n", type=int, required=True)
    i.set_defaults(func=cmd_identity)

    sp = sub.add_parser("special", help="side constructions")
    ssub = sp.add_subparsers(dest="which", required=True)
    h = ssub.add_parser("hc-prime")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--out")
    t = ssub.add_parser("trees")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--out")
    m = ssub.add_parser("mtf")
    m.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_special)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

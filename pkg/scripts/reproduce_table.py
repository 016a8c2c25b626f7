"""Exact clique search for every (cycle length, n) cell up to --max-n.

    python3 scripts/reproduce_table.py --max-n 6 --budget 200000
"""
import argparse
import time

from hampaths.clique_search import format_table, known_upper_bound, reproduce_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=200_000, help="node expansions per cell; 0 for unlimited")
    args = ap.parse_args()
    t0 = time.perf_counter()
    cells = reproduce_table(args.max_n, budget=args.budget or None, fix_root=True)
    print(format_table(cells))
    print()
    for c in cells:
        ub = known_upper_bound(c.k, c.n)
        note = "" if c.reported is None else f" reported {c.reported}"
        print(f"n={c.n} C{c.k}: {c.result.status} {c.result.size} (bound {c.result.upper_bound}"
              f"{'' if ub is None else f', known <= {ub}'}){note} nodes={c.result.nodes}")
    print(f"total {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

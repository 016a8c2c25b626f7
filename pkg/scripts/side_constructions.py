"""Sizes and verdicts for the prime-circulant, tree and graph-union families."""
import argparse

from hampaths.graph_core import binomial
from hampaths.special_families import hc_prime_family, pairwise_union_triangle_failures, tree_family, union_family_size
from hampaths.verifier import end_edge_injectivity, verify_pairwise


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="*", default=[3, 5, 7, 11, 13])
    ap.add_argument("--max-tree-n", type=int, default=12)
    ap.add_argument("--max-mtf-n", type=int, default=5)
    args = ap.parse_args()
    for p in args.primes:
        fam = hc_prime_family(p)
        rep = verify_pairwise(fam, "ham-cycle")
        print(f"hc-prime p={p}: {len(fam)} paths (C(p,2)={binomial(p, 2)}), "
              f"ham-cycle {'PASS' if rep.passed else 'FAIL'}, end edges {'distinct' if end_edge_injectivity(fam) else 'repeat'}")
    for n in range(2, args.max_tree_n + 1):
        trees = tree_family(n)
        print(f"trees n={n}: {len(trees)} (2^(n-1)-1={2 ** (n - 1) - 1}), "
              f"{len(pairwise_union_triangle_failures(trees))} triangle-free unions")
    for n in range(1, args.max_mtf_n + 1):
        c = union_family_size(n)
        print(f"graphs n={n}: {c.with_triangle} with a triangle + {c.maximal_triangle_free} maximal triangle-free = {c.total}")


if __name__ == "__main__":
    main()

"""Construct the triangle family for a range of n and verify it pairwise.

    python3 scripts/verify_large.py --max-n 17 --full-up-to 15 --samples 1000000
"""
import argparse

from hampaths.family_builder import construct_triangle_family
from hampaths.verifier import certify_tightness, verify_pairwise


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=17)
    ap.add_argument("--full-up-to", type=int, default=15, help="larger n use sampled mode")
    ap.add_argument("--samples", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'n':>3} {'paths':>7} {'mode':>12} {'pairs':>12} {'fail':>5} {'tight':>6} {'sec':>7}")
    for n in range(args.min_n, args.max_n + 1):
        fam = construct_triangle_family(n)
        if n <= args.full_up_to:
            rep = verify_pairwise(fam)
        else:
            rep = verify_pairwise(fam, mode="sample", samples=args.samples, seed=args.seed)
        tight = certify_tightness(fam).passed
        mode = rep.mode if rep.mode == "full" else f"sample:{rep.samples}"
        print(f"{n:>3} {rep.size:>7} {mode:>12} {rep.pairs_checked:>12} {len(rep.failures):>5} {str(tight):>6} {rep.elapsed:>7.2f}")


if __name__ == "__main__":
    main()

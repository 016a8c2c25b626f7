"""Wall-clock timings for construction, full verification and clique search."""
import time

from hampaths.clique_search import build_compat, max_clique
from hampaths.family_builder import build_mh, construct_triangle_family
from hampaths.verifier import verify_pairwise


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label:<40} {time.perf_counter() - t0:8.3f}s  {out}")


def main():
    build_mh.cache_clear()
    for n in (11, 15, 17, 21):
        timed(f"construct n={n}", lambda n=n: len(construct_triangle_family(n)))
    for n in (13, 15):
        fam = construct_triangle_family(n)
        timed(f"verify full n={n}", lambda fam=fam: verify_pairwise(fam).pairs_checked)
    fam = construct_triangle_family(17)
    timed("verify sample:1e6 n=17", lambda: verify_pairwise(fam, mode="sample", samples=10**6).pairs_checked)
    for n, pred in ((6, "triangle"), (6, "cycle:5"), (6, "cycle:6")):
        timed(f"build+search n={n} {pred}", lambda n=n, pred=pred: max_clique(build_compat(n, pred), fix_root=True).size)


if __name__ == "__main__":
    main()

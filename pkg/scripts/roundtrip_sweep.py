"""Unit and counit bijectivity per level, with timings, over the corpora."""
import argparse
import time

from sdot_lab.corpus import CorpusConfig, double_corpus, simplicial_corpus
from sdot_lab.waldhausen import augmented_nerve, counit_map, unit_map


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--unit-levels", type=int, default=2, help="unit checked at levels 0..N (needs depth 2N+1)")
    ap.add_argument("--counit-depth", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=3, help="largest W_n/H_n/V_n")
    args = ap.parse_args()

    cfg = CorpusConfig(simplicial_depth=2 * args.unit_levels + 1)
    print("# unit X -> S•(PX)")
    for name, X in simplicial_corpus(cfg):
        t = time.perf_counter()
        res = unit_map(X, args.unit_levels)
        levels = "".join("T" if b else "." for _, b in sorted(res.map.bijective.items()))
        print(f"{name:24s} {levels}  {time.perf_counter() - t:6.2f}s")

    print("# counit P(S•D) -> N^a D")
    for name, D in double_corpus(args.max_n):
        t = time.perf_counter()
        Y = augmented_nerve(D, args.counit_depth, check=False)
        res = counit_map(Y)
        levels = " ".join(f"{k}:{'T' if b else '.'}" for k, b in res.map.bijective.items())
        sizes = Y.sizes()
        print(f"{name:6s} {levels}  nerve(0,0)={sizes['0,0']} -1={sizes['-1']}  {time.perf_counter() - t:6.2f}s")


if __name__ == "__main__":
    main()

"""Hom(W_n, W_m) counts against C(m+n+1, n+1), and S• level sizes of the double corpus."""
import argparse
import math
import time

from sdot_lab.corpus import double_corpus
from sdot_lab.doublecat import generate_double, hom_augmented_functors
from sdot_lab.waldhausen import sdot_double


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--total", type=int, default=5, help="largest n+m")
    ap.add_argument("--sdot-levels", type=int, default=3)
    args = ap.parse_args()

    print("n m  |Hom|  C(m+n+1,n+1)")
    for n in range(args.total + 1):
        for m in range(args.total + 1 - n):
            t = time.perf_counter()
            count = len(hom_augmented_functors(generate_double("W", n), generate_double("W", m)))
            expect = math.comb(m + n + 1, n + 1)
            flag = "" if count == expect else "  MISMATCH"
            print(f"{n} {m}  {count:5d}  {expect:5d}  {time.perf_counter() - t:5.2f}s{flag}")

    print("\nS• level sizes")
    for name, D in double_corpus(3):
        print(f"{name:5s} {sdot_double(D, args.sdot_levels).sizes()}")


if __name__ == "__main__":
    main()

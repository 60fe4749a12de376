"""Tabulate every simplicial and presheaf property over the shared corpora."""
import argparse
import json
import time

from sdot_lab.corpus import CorpusConfig, preaug_corpus, simplicial_corpus
from sdot_lab.preaug import PREAUG_PROPERTIES, check_preaug
from sdot_lab.segal_check import SIMPLICIAL_PROPERTIES, check_simplicial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=5, help="simplicial truncation depth")
    ap.add_argument("--preaug-depth", type=int, default=2)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--json", action="store_true", help="emit JSON lines instead of a table")
    args = ap.parse_args()
    cfg = CorpusConfig(simplicial_depth=args.depth, preaug_depth=args.preaug_depth, seed=args.seed)

    start = time.perf_counter()
    rows = []
    for name, X in simplicial_corpus(cfg):
        rows.append((name, {p: check_simplicial(X, p, args.depth).verdict for p in SIMPLICIAL_PROPERTIES}))
    for name, Y in preaug_corpus(cfg):
        rows.append((name, {p: check_preaug(Y, p).verdict for p in PREAUG_PROPERTIES}))

    if args.json:
        for name, verdicts in rows:
            print(json.dumps({"object": name, **verdicts}, sort_keys=True))
        return
    for name, verdicts in rows:
        marks = " ".join(f"{p}={'T' if v else '.'}" for p, v in verdicts.items())
        print(f"{name:28s} {marks}")
    print(f"# {len(rows)} objects in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()

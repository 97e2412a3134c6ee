"""Tabulate partitions of n by 2-measure and by Durfee side, and check the
composite bijection sends one statistic to the other."""

import argparse
from collections import Counter

from kmeasure.codecs import burge_composite
from kmeasure.partitions import durfee_side, enumerate_partitions, from_parts, k_measure


def main():
    ap = argparse.ArgumentParser(description="2-measure vs Durfee side")
    ap.add_argument("--nmax", type=int, default=20)
    args = ap.parse_args()
    print("n\tby measure\tby Durfee\tcomposite ok")
    for n in range(args.nmax + 1):
        lams = list(enumerate_partitions(n))
        by_mu = Counter(k_measure(from_parts(lam), 2) for lam in lams)
        by_d = Counter(durfee_side(lam) for lam in lams)
        ok = all(durfee_side(burge_composite(lam, 2)) == k_measure(from_parts(lam), 2) for lam in lams)
        fmt = lambda c: ",".join(str(c[m]) for m in range(max(c) + 1))  # noqa: E731
        print(f"{n}\t{fmt(by_mu)}\t{fmt(by_d)}\t{'yes' if ok else 'NO'}")


if __name__ == "__main__":
    main()

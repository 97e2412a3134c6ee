"""Print side-by-side counts for the Schur and generalized Schur classes.

    python3 scripts/schur_table.py --nmax 40
    python3 scripts/schur_table.py --nmax 30 --M 5 --a 2 --b 4 --refined
"""

import argparse

from kmeasure.gaps import genschur_counts, genschur_table, schur_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=40)
    ap.add_argument("--M", type=int)
    ap.add_argument("--a", type=int)
    ap.add_argument("--b", type=int)
    ap.add_argument("--refined", action="store_true", help="split the counts by M-measure")
    args = ap.parse_args()

    generalized = args.M is not None
    if generalized and args.refined:
        print("n\tmu\tS\tT")
        for (n, m), (s, t) in sorted(genschur_table(args.nmax, args.M, args.a, args.b).items()):
            print(f"{n}\t{m}\t{s}\t{t}")
        return
    print("n\tS\tT")
    for n in range(args.nmax + 1):
        s, t = genschur_counts(n, args.M, args.a, args.b) if generalized else schur_counts(n)
        print(f"{n}\t{s}\t{t}" + ("" if s == t else "\tMISMATCH"))


if __name__ == "__main__":
    main()

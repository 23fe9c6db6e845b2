"""Classification tables for plain and Swiss clock paths under both conventions.

Usage: python3 scripts/reproduce_tables.py [--p 5,7,13,...] [--trend] [--threads N]
"""
import argparse
import csv
import sys
import time

from kloospath.cli import _prime_list
from kloospath.membership import CONVENTIONS, classify_prime

PLAIN = [5, 7, 13, 19, 23, 29]
SWISS = [5, 7, 13, 17, 19, 23, 29, 229]
TREND = [29, 53, 101, 229, 541, 1223]


def table(kind, primes, convention, threads, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "convention", "p", "in_s_easy", "in_s_hard", "not_in_s", "seconds"])
    for p in primes:
        t0 = time.perf_counter()
        row = classify_prime(p, 1, kind, convention, threads=threads)
        w.writerow([kind, convention, p, *row.astuple(), f"{time.perf_counter() - t0:.3f}"])


def trend(primes, threads, out):
    """Fraction of Swiss paths outside the support as p grows."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["p", *(f"not_in_s_frac_{c}" for c in CONVENTIONS)])
    for p in primes:
        fr = []
        for c in CONVENTIONS:
            row = classify_prime(p, 1, "swiss", c, threads=threads)
            fr.append(f"{row.not_in_s / (p - 1):.4f}")
        w.writerow([p, *fr])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=_prime_list, default=None)
    ap.add_argument("--trend", action="store_true", help="also print the Swiss NotInS fraction per p")
    ap.add_argument("--threads", type=int, default=0)
    args = ap.parse_args(argv)
    for kind, default in (("plain", PLAIN), ("swiss", SWISS)):
        for c in CONVENTIONS:
            table(kind, args.p or default, c, args.threads, sys.stdout)
            print()
    if args.trend:
        trend(args.p or TREND, args.threads, sys.stdout)


if __name__ == "__main__":
    main()

"""Ball probabilities for the random Fourier series, with a finite-p comparison.

Usage: python3 scripts/mc_corollary.py [--trials 10000] [--seed 7]
"""
import argparse
import json

from kloospath.gallery import gallery_function
from kloospath.stochastic import empirical_vs_limit, mc_ball_profile

CENTERS = ["zero", "takagi", "parabola:1"]
EPS = [0.25, 0.5, 1.0, 2.0]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--N", type=int, default=128)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--compare-p", type=int, default=997)
    args = ap.parse_args(argv)
    for fid in CENTERS:
        f = None if fid == "zero" else gallery_function(fid).evaluator
        freqs = mc_ball_profile(f, EPS, args.N, args.trials, seed=args.seed)
        print(json.dumps({"f": fid, "N": args.N, "trials": args.trials, "seed": args.seed,
                          "eps": EPS, "frequency": [float(x) for x in freqs]}))
    cmp = empirical_vs_limit(args.compare_p, 1, None, 0.5, N=args.N, trials=min(args.trials, 2000),
                             seed=args.seed)
    print(json.dumps({"p": cmp.p, "eps": cmp.eps, "empirical": cmp.empirical, "mc": cmp.mc,
                      "note": cmp.note}))


if __name__ == "__main__":
    main()

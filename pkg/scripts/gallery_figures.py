"""Write SVG and CSV figures for the counterexamples and the gallery.

Usage: python3 scripts/gallery_figures.py [--out figures] [--grid 4097]
"""
import argparse
from pathlib import Path

from kloospath.cli import RunConfig, run

FIGURES = [
    ("path", dict(p=[19], a=8, kind="plain"), "kloosterman_19_8"),
    ("path", dict(p=[17], a=8, kind="swiss"), "swiss_17_8"),
    ("gallery", dict(gallery_id="takagi"), "takagi"),
    ("gallery", dict(gallery_id="riemann"), "riemann"),
    ("gallery", dict(gallery_id="davenport"), "davenport"),
    ("gallery", dict(gallery_id="liouville"), "liouville"),
    ("gallery", dict(gallery_id="hilbert:2"), "hilbert_2"),
    ("gallery", dict(gallery_id="hilbert:3"), "hilbert_3"),
    ("gallery", dict(gallery_id="hilbert:4"), "hilbert_4"),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--grid", type=int, default=4097)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for command, kw, stem in FIGURES:
        for fmt in ("svg", "csv", "json"):
            if command == "path" and fmt == "json":
                cfg = RunConfig("check", format=fmt, **kw)
            else:
                cfg = RunConfig(command, format=fmt, grid=args.grid, **kw)
            target = args.out / f"{stem}.{fmt}"
            target.write_text(run(cfg))
            print(target)


if __name__ == "__main__":
    main()

"""Command-line front end.

    kloospath classify --kind plain --b 1 --p 5,7,13
    kloospath check --p 19 --a 8 --b 1 --kind plain
    kloospath path --p 19 --a 8 --b 1 --kind plain --format svg --out k19.svg
    kloospath gallery --id takagi --format csv
    kloospath mc --f zero --eps 0.5 --N 128 --trials 10000 --seed 7

Usage errors (bad flags, composite moduli, unknown gallery ids) exit with 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .export import samples_csv, svg_polylines
from .gallery import GALLERY_IDS, gallery_function, gallery_verdict
from .membership import CONVENTIONS, classify_prime, path_verdict
from .modarith import is_prime
from .pathcore import PATH_KINDS, build_path
from .stochastic import MCResult, mc_ball_probability

COMMANDS = ("classify", "check", "path", "gallery", "mc")
FORMATS = ("csv", "json", "svg")
CLASSIFY_COLUMNS = ("p", "in_s_easy", "in_s_hard", "not_in_s")

_NUM = {"type": "number"}
_INT = {"type": "integer"}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["p", "a", "b", "kind", "status", "witness_h", "witness_value", "borderline"],
    "properties": {
        "p": _INT, "a": _INT, "b": _INT,
        "kind": {"enum": list(PATH_KINDS)},
        "status": {"enum": ["InS_Easy", "InS_Hard", "NotInS", "InS_Analytic", "Unknown"]},
        "witness_h": {"type": ["integer", "null"]},
        "witness_value": _NUM,
        "borderline": {"type": "boolean"},
        "f1_ok": {"type": "boolean"},
        "symmetry_ok": {"type": "boolean"},
        "sinc_profile_max": _NUM,
        "convention": {"enum": list(CONVENTIONS)},
    },
}

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["kind", "b", "convention", "rows"],
    "properties": {
        "kind": {"enum": ["plain", "swiss"]},
        "b": _INT,
        "convention": {"enum": list(CONVENTIONS)},
        "rows": {"type": "array", "items": {
            "type": "object", "required": list(CLASSIFY_COLUMNS),
            "properties": {c: _INT for c in CLASSIFY_COLUMNS}}},
    },
}

GALLERY_SCHEMA = {
    "type": "object",
    "required": ["id", "status", "witness_h", "witness_value", "borderline", "f1_ok", "symmetry_ok"],
    "properties": {
        "id": {"type": "string"},
        "status": {"enum": ["InS_Easy", "InS_Hard", "NotInS", "InS_Analytic", "Unknown"]},
        "witness_h": {"type": ["integer", "null"]},
        "witness_value": _NUM,
        "borderline": {"type": "boolean"},
        "f1_ok": {"type": "boolean"},
        "symmetry_ok": {"type": "boolean"},
    },
}

MC_SCHEMA = {
    "type": "object",
    "required": ["f_id", "eps", "N", "trials", "seed", "frequency"],
    "properties": {
        "f_id": {"type": "string"}, "eps": _NUM, "N": _INT, "trials": _INT, "seed": _INT,
        "frequency": {"type": "number", "minimum": 0, "maximum": 1},
    },
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p: list[int] = field(default_factory=list)
    a: int = 1
    b: int = 1
    kind: str = "plain"
    convention: str = "table"
    eps: float = 0.5
    N: int = 128
    trials: int = 10000
    seed: int = 0
    out: str | None = None
    format: str = "json"
    threads: int = 0
    gallery_id: str = ""
    f_id: str = "zero"
    grid: int = 1025

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {FORMATS}")
        if self.command in ("classify", "check", "path"):
            if not self.p:
                raise UsageError("--p is required")
            for q in self.p:
                if q < 3 or not is_prime(q):
                    raise UsageError(f"p must be an odd prime, got {q}")
                if self.b % q == 0 or (self.kind != "birch" and self.command != "classify" and self.a % q == 0):
                    raise UsageError(f"a and b must be coprime to p = {q}")
        if self.command == "classify" and self.kind not in ("plain", "swiss"):
            raise UsageError("classify supports --kind plain or swiss")
        if self.command in ("check", "path") and len(self.p) != 1:
            raise UsageError("give a single --p")
        if self.command == "gallery":
            base = self.gallery_id.split(":", 1)[0]
            if base not in GALLERY_IDS:
                raise UsageError(f"unknown gallery id {self.gallery_id!r}; expected one of {GALLERY_IDS}")
        if self.command == "mc":
            if self.trials < 1 or self.N < 1 or self.eps <= 0:
                raise UsageError("need trials >= 1, N >= 1 and eps > 0")
            if self.f_id != "zero" and self.f_id.split(":", 1)[0] not in GALLERY_IDS:
                raise UsageError(f"unknown function id {self.f_id!r}")
        if self.threads < 0:
            raise UsageError("threads must be >= 0")


def _prime_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kloospath", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--format", default=fmt_default, choices=FORMATS)

    c = sub.add_parser("classify", help="count verdict classes over a for each p")
    c.add_argument("--p", type=_prime_list, required=True)
    c.add_argument("--b", type=int, default=1)
    c.add_argument("--kind", default="plain", choices=("plain", "swiss"))
    c.add_argument("--convention", default="table", choices=CONVENTIONS)
    c.add_argument("--threads", type=int, default=None)
    common(c, "csv")

    for name, help_ in (("check", "verdict for one path"), ("path", "write the vertices of one path")):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--p", type=int, required=True)
        q.add_argument("--a", type=int, default=1)
        q.add_argument("--b", type=int, default=1)
        q.add_argument("--kind", default="plain", choices=PATH_KINDS)
        if name == "check":
            q.add_argument("--convention", default="table", choices=CONVENTIONS)
        common(q, "json" if name == "check" else "csv")

    g = sub.add_parser("gallery", help="samples, plot or verdict of a gallery function")
    g.add_argument("--id", dest="gallery_id", required=True, help="e.g. takagi, parabola:6.28, hilbert:3")
    g.add_argument("--grid", type=int, default=1025)
    g.add_argument("--convention", default="table", choices=CONVENTIONS)
    common(g, "json")

    m = sub.add_parser("mc", help="Monte Carlo ball probability around a function")
    m.add_argument("--f", dest="f_id", default="zero")
    m.add_argument("--eps", type=float, required=True)
    m.add_argument("--N", type=int, default=128)
    m.add_argument("--trials", type=int, default=10000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--grid", type=int, default=1025)
    common(m, "json")
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for key, value in vars(ns).items():
        if key == "p":
            value = value if isinstance(value, list) else [value]
        if key == "threads":
            value = value if value is not None else int(os.environ.get("KLOOSPATH_THREADS", "0") or 0)
        if hasattr(cfg, key):
            setattr(cfg, key, value)
    return cfg


# -- commands -------------------------------------------------------------------------


def cmd_classify(cfg: RunConfig) -> str:
    rows = [classify_prime(p, cfg.b, cfg.kind, cfg.convention, cfg.threads) for p in cfg.p]
    if cfg.format == "json":
        doc = {"kind": cfg.kind, "b": cfg.b, "convention": cfg.convention,
               "rows": [dict(zip(CLASSIFY_COLUMNS, (r.p, r.easy, r.hard, r.not_in_s))) for r in rows]}
        return json.dumps(doc, sort_keys=True) + "\n"
    if cfg.format != "csv":
        raise UsageError("classify writes csv or json")
    lines = [",".join(CLASSIFY_COLUMNS)]
    lines += [f"{r.p},{r.easy},{r.hard},{r.not_in_s}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_check(cfg: RunConfig) -> str:
    p = cfg.p[0]
    v = path_verdict(p, cfg.a, cfg.b, cfg.kind, cfg.convention)
    a = cfg.a % p
    b = 0 if cfg.kind in ("birch", "character") else cfg.b % p
    if cfg.kind == "character":
        a = 0
    rec = v.record(p=p, a=a, b=b, kind=cfg.kind, convention=cfg.convention)
    rec.pop("signs")
    return json.dumps(rec, sort_keys=True) + "\n"


def cmd_path(cfg: RunConfig) -> str:
    p = cfg.p[0]
    path = build_path(cfg.kind, p, cfg.a, cfg.b)
    if cfg.format == "svg":
        return svg_polylines([path.z], title=path.label)
    if cfg.format == "json":
        return json.dumps({"label": path.label, "t": path.t.tolist(),
                           "re": path.z.real.tolist(), "im": path.z.imag.tolist()}) + "\n"
    return samples_csv(path.t, path.z)


def _gallery_points(g, grid: int) -> tuple[np.ndarray, np.ndarray]:
    if g.path is not None:
        return g.path.t, g.path.z
    t = np.linspace(0.0, 1.0, grid)
    return t, np.asarray(g.evaluator(t), dtype=complex)


def cmd_gallery(cfg: RunConfig) -> str:
    g = gallery_function(cfg.gallery_id)
    if cfg.format == "json":
        v = gallery_verdict(g, convention=cfg.convention)
        rec = v.record(id=g.label, convention=cfg.convention)
        rec.pop("signs")
        return json.dumps(rec, sort_keys=True) + "\n"
    t, z = _gallery_points(g, cfg.grid)
    if cfg.format == "csv":
        return samples_csv(t, z)
    if g.id == "riemann":
        z = t + 1j * z.real  # a real function is drawn as its graph
    return svg_polylines([z], title=g.label)


def mc_center(f_id: str):
    if f_id == "zero":
        return None
    return gallery_function(f_id).evaluator


def cmd_mc(cfg: RunConfig) -> str:
    freq = mc_ball_probability(mc_center(cfg.f_id), cfg.eps, cfg.N, cfg.trials, cfg.seed, cfg.grid)
    return MCResult(cfg.f_id, cfg.eps, cfg.N, cfg.trials, cfg.seed, freq).to_json() + "\n"


HANDLERS = {"classify": cmd_classify, "check": cmd_check, "path": cmd_path,
            "gallery": cmd_gallery, "mc": cmd_mc}


def run(cfg: RunConfig) -> str:
    cfg.validate()
    return HANDLERS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        text = run(cfg)
    except UsageError as exc:
        parser.error(str(exc))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

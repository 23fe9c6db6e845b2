"""Membership in the support of the limiting random Fourier series.

A continuous ``f`` is in the support iff ``f(0) = 0``, it satisfies the
reflection symmetry ``f(t) + conj(f(1-t)) = f(1)``, ``|f(1)| <= 2`` and
``|alpha(h)| <= 2`` for every ``h != 0``, where ``alpha(h) = f(1) + 2 pi i h fhat(h)``.

Two conventions are offered for the Kloosterman tables:

* ``"exact"`` checks the criterion on the true path data for ``h`` of both signs.
* ``"table"`` reproduces the published tabulation: positive ``h`` only, and for
  the Swiss clock paths the mid-path statistic evaluated at the unshifted
  parameter ``a``.  See ``swiss_table_statistic``.
"""

from __future__ import annotations

import enum
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Mapping, Sequence

import numpy as np

from .modarith import is_prime, kloosterman_family
from .pathcore import PolyPath, build_path, symmetry_report
from .speccoef import naive_tilde, polygonal_alpha, sinc, step_sums, tilde_table

BOUND = 2.0
TOL = 1e-9
CONVENTIONS = ("table", "exact")
SIGNS = ("both", "positive")


class Status(str, enum.Enum):
    IN_S_EASY = "InS_Easy"
    IN_S_HARD = "InS_Hard"
    NOT_IN_S = "NotInS"
    IN_S_ANALYTIC = "InS_Analytic"
    UNKNOWN = "Unknown"

    @property
    def in_S(self) -> bool:
        return self in (Status.IN_S_EASY, Status.IN_S_HARD, Status.IN_S_ANALYTIC)


@dataclass(frozen=True)
class MembershipVerdict:
    status: Status
    witness_h: int | None
    witness_value: float
    f1_ok: bool
    symmetry_ok: bool
    sinc_profile_max: float
    borderline: bool = False
    signs: str = "both"

    @property
    def in_S(self) -> bool:
        return self.status.in_S

    def record(self, **extra) -> dict:
        d = asdict(self)
        d["status"] = self.status.value
        d.update(extra)
        return d

    def to_json(self, **extra) -> str:
        return json.dumps(self.record(**extra), sort_keys=True)


def _near(x: float) -> bool:
    return abs(x - BOUND) <= TOL


def _decide(hs: np.ndarray, mags: np.ndarray, easy_max: float, f1: complex,
            symmetry_ok: bool, signs: str, analytic: bool = False) -> MembershipVerdict:
    """Shared verdict rule; ``mags`` are ``|alpha(h)|`` at the checked ``hs``."""
    f1_ok = abs(f1) <= BOUND + TOL
    if len(mags):
        k = int(np.argmax(mags))
        witness_h, value = int(hs[k]), float(mags[k])
    else:
        witness_h, value = None, 0.0
    borderline = _near(value) or _near(abs(f1))
    if not symmetry_ok or not f1_ok or value > BOUND + TOL:
        status = Status.NOT_IN_S
    elif analytic:
        status = Status.IN_S_ANALYTIC
    elif easy_max <= BOUND + TOL:
        status = Status.IN_S_EASY
    else:
        status = Status.IN_S_HARD
    return MembershipVerdict(status, witness_h, value, f1_ok, symmetry_ok, value, borderline, signs)


def _signed(r: np.ndarray, signs: str) -> np.ndarray:
    if signs not in SIGNS:
        raise ValueError(f"signs must be one of {SIGNS}")
    return r if signs == "positive" else np.concatenate([r, -r])


def check_polygonal(path: PolyPath, signs: str = "both") -> MembershipVerdict:
    """Exact criterion for an equally spaced path via residue classes mod ``n``.

    ``|ftilde|`` is ``n``-periodic up to sign and ``|sin(pi h/n)|`` is constant
    on each class, so ``h = +-r`` with ``r = 1..n-1`` dominate their classes.
    The easy condition is ``|ftilde(r)| <= 2`` for all ``r``.
    """
    if not path.is_equally_spaced:
        raise ValueError("unequal spacing; use check_polygonal_general")
    sym = symmetry_report(path)
    n = path.n
    table = tilde_table(path)
    r = np.arange(1, n)
    hs = _signed(r, signs)
    ft = table.at(hs)
    mags = np.abs(path.z[0] + sinc(np.pi * hs / n) * ft)
    easy = float(np.max(np.abs(table.at(r)))) if n > 1 else 0.0
    return _decide(hs, mags, easy, path.f1, sym.is_F0, signs)


def certified_cutoff(path: PolyPath) -> int:
    """``H`` beyond which ``|alpha(h)| <= 2`` holds automatically.

    Each step contributes at most ``|d_j| / (pi |h| D_j)`` to ``alpha(h)``, so
    ``|alpha(h)| <= V / (pi |h| D_min)`` with ``D_min`` over non-zero steps;
    ``n`` is added as a safety margin.
    """
    d = np.abs(path.steps)
    moving = d > 0
    if not np.any(moving):
        return path.n
    dmin = float(np.min(path.deltas[moving]))
    return int(math.ceil(path.total_variation / (2 * math.pi * dmin))) + path.n


def check_polygonal_general(path: PolyPath, H: int | None = None, signs: str = "both") -> MembershipVerdict:
    """Criterion for arbitrary knots, checking ``1 <= |h| <= H`` (default: certified cutoff)."""
    sym = symmetry_report(path)
    H = certified_cutoff(path) if H is None else int(H)
    hs = _signed(np.arange(1, H + 1), signs)
    mags = np.abs(polygonal_alpha(path, hs))
    easy = float(np.max(np.abs(step_sums(path, hs, weighted=False))))
    return _decide(hs, mags, easy, path.f1, sym.is_F0, signs)


def brute_force_verdict(path: PolyPath, H: int, signs: str = "both") -> MembershipVerdict:
    """Literal check of every ``1 <= |h| <= H`` by direct summation; an oracle."""
    sym = symmetry_report(path)
    hs = _signed(np.arange(1, int(H) + 1), signs)
    mags = np.abs(polygonal_alpha(path, hs))
    if path.is_equally_spaced:
        easy = float(np.max(np.abs(naive_tilde(path.steps, hs))))
    else:
        easy = float(np.max(np.abs(step_sums(path, hs, weighted=False))))
    return _decide(hs, mags, easy, path.f1, sym.is_F0, signs)


def check_alpha_sequence(alphas: Mapping[int, float] | tuple[Sequence[int], Sequence[complex]],
                         f1: complex, tail_bound: float | None,
                         imag_tol: float = 1e-9) -> MembershipVerdict:
    """Verdict from listed ``alpha(h)`` plus a certified bound on the unlisted ones.

    Coefficients must be real (up to ``imag_tol``); a complex ``alpha`` means
    the function is not reflection-symmetric.
    """
    if isinstance(alphas, Mapping):
        hs = np.fromiter(alphas.keys(), dtype=np.int64, count=len(alphas))
        vals = np.array([complex(v) for v in alphas.values()], dtype=complex)
    else:
        hs = np.asarray(alphas[0], dtype=np.int64)
        vals = np.asarray(alphas[1], dtype=complex)
    symmetric = bool(np.all(np.abs(vals.imag) <= imag_tol)) and abs(complex(f1).imag) <= imag_tol
    mags = np.abs(vals)
    v = _decide(hs, mags, math.inf, complex(f1), symmetric, "both", analytic=True)
    if v.status is Status.NOT_IN_S:
        return v
    if tail_bound is None:
        return MembershipVerdict(Status.UNKNOWN, v.witness_h, v.witness_value, v.f1_ok,
                                 v.symmetry_ok, v.sinc_profile_max, v.borderline, v.signs)
    if tail_bound > BOUND + TOL:
        # the tail is not certified; nothing listed fails, so the verdict is open
        return MembershipVerdict(Status.UNKNOWN, None, float(tail_bound), v.f1_ok,
                                 v.symmetry_ok, v.sinc_profile_max, v.borderline, v.signs)
    return v


# -- Kloosterman paths ---------------------------------------------------------


def swiss_table_statistic(kl: float, klm: complex, p: int, hs: np.ndarray) -> np.ndarray:
    """``cos(pi h/p) Kl + 2 sin(pi h/p) Im Klm`` with ``Kl, Klm`` held at one parameter.

    The true step sum of the Swiss clock path ``K_p(a, b)`` is
    ``cos(pi h/p) Kl(a-h) - 2 sin(pi h/p) Im Klm(a-h)``; the published counts
    are reproduced by this unshifted variant.
    """
    x = np.pi * hs / p
    return np.cos(x) * kl + 2.0 * np.sin(x) * klm.imag


def _swiss_table_verdict(kl: float, klm: complex, p: int) -> MembershipVerdict:
    hs = np.arange(1, p)
    ft = swiss_table_statistic(kl, klm, p, hs)
    mags = np.abs(sinc(np.pi * hs / p) * ft)
    return _decide(hs, mags, float(np.max(np.abs(ft))), complex(kl), True, "positive")


def path_verdict(p: int, a: int, b: int = 1, kind: str = "plain", convention: str = "exact",
                 _family=None) -> MembershipVerdict:
    """Verdict for one Kloosterman-type path.

    Equally spaced kinds (plain, swiss) use the residue check; padded kinds use
    the general check with certified cutoff.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    if kind == "swiss" and convention == "table":
        kl, klm = _family if _family is not None else kloosterman_family(b, p)
        return _swiss_table_verdict(float(kl[a % p]), complex(klm[a % p]), p)
    path = build_path(kind, p, a, b)
    if kind in ("plain", "swiss"):
        return check_polygonal(path, "positive" if convention == "table" else "both")
    return check_polygonal_general(path)


@dataclass(frozen=True)
class ClassRow:
    p: int
    easy: int
    hard: int
    not_in_s: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.easy, self.hard, self.not_in_s)


def default_threads() -> int:
    env = os.environ.get("KLOOSPATH_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def classify_verdicts(p: int, b: int = 1, kind: str = "plain", convention: str = "table",
                      threads: int = 0) -> list[tuple[int, MembershipVerdict]]:
    """Verdicts for every ``a`` in ``1..p-1``, sorted by ``a``."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if b % p == 0:
        raise ValueError("b must be coprime to p")
    family = kloosterman_family(b, p) if (kind == "swiss" and convention == "table") else None
    threads = threads or default_threads()

    def work(a: int) -> tuple[int, MembershipVerdict]:
        return a, path_verdict(p, a, b, kind, convention, family)

    a_values = range(1, p)
    if threads == 1:
        out = [work(a) for a in a_values]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            out = list(pool.map(work, a_values))
    return sorted(out, key=lambda item: item[0])


def classify_prime(p: int, b: int = 1, kind: str = "plain", convention: str = "table",
                   threads: int = 0) -> ClassRow:
    """Counts of (easy, hard, not in S) over ``a`` in ``(Z/pZ)^*``."""
    counts = {Status.IN_S_EASY: 0, Status.IN_S_HARD: 0, Status.NOT_IN_S: 0}
    for _, v in classify_verdicts(p, b, kind, convention, threads):
        counts[v.status] += 1
    return ClassRow(p, counts[Status.IN_S_EASY], counts[Status.IN_S_HARD], counts[Status.NOT_IN_S])

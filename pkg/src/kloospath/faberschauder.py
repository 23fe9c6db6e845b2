"""Faber-Schauder expansions and symmetric reparameterizations.

The expansion of ``f`` on ``[0, 1]`` is
``f(0) + (f(1) - f(0)) t + sum_{m >= 0} sum_{j=1}^{2^m} beta(m, j) Lambda_{m,j}(t)``
where ``Lambda_{m,j}`` is the tent of height 1 on ``[(j-1)/2^m, j/2^m]`` and
``beta(m, j)`` is the midpoint second difference of ``f`` on that interval.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .speccoef import interpolant_fourier

MAX_DEPTH = 20
HOMEO_TOL = 1e-12


@dataclass(frozen=True)
class FaberExpansion:
    f0: complex
    f1: complex
    beta: tuple[np.ndarray, ...]  # beta[m][j-1] = beta(m, j)

    @property
    def depth(self) -> int:
        return len(self.beta)

    @property
    def beta0(self) -> complex:
        return self.f0

    @property
    def beta1(self) -> complex:
        return self.f1 - self.f0

    def coefficient(self, m: int, j: int) -> complex:
        if not 1 <= j <= 2 ** m:
            raise IndexError(f"j must lie in 1..{2 ** m}")
        return complex(self.beta[m][j - 1])

    def __call__(self, t):
        return reconstruct(self, t)


def _dyadic_samples(f: Callable, M: int) -> np.ndarray:
    return np.asarray(f(np.linspace(0.0, 1.0, 2 ** M + 1)), dtype=complex)


def faber_coefficients(f: Callable, M: int) -> FaberExpansion:
    """``beta(m, j)`` for ``m < M`` from samples of ``f`` on the grid ``k / 2^M``."""
    if not 0 <= M <= MAX_DEPTH:
        raise ValueError(f"depth must be in 0..{MAX_DEPTH}")
    z = _dyadic_samples(f, M)
    beta = []
    for m in range(M):
        s = 2 ** (M - m)
        left = z[0:-1:s]
        right = z[s::s]
        mid = z[s // 2::s]
        beta.append(mid - 0.5 * (left + right))
    return FaberExpansion(complex(z[0]), complex(z[-1]), tuple(beta))


def tent(m: int, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Index ``j - 1`` of the level-``m`` interval holding ``t`` and the tent height there."""
    u = np.asarray(t, dtype=float) * 2 ** m
    idx = np.minimum(np.floor(u), 2 ** m - 1).astype(np.int64)
    frac = u - idx
    return idx, 1.0 - np.abs(2.0 * frac - 1.0)


def reconstruct(exp: FaberExpansion, t):
    tt = np.asarray(t, dtype=float)
    out = exp.f0 + exp.beta1 * tt + 0j
    for m, b in enumerate(exp.beta):
        idx, height = tent(m, tt)
        out = out + b[idx] * height
    return complex(out) if out.ndim == 0 else out


# -- symmetric homeomorphisms ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SymmetricHomeo:
    """Increasing piecewise-linear ``phi`` with ``phi(1 - t) = 1 - phi(t)``."""

    knots: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.knots, dtype=float)
        y = np.asarray(self.values, dtype=float)
        if t.ndim != 1 or t.shape != y.shape or len(t) < 2:
            raise ValueError("knots and values must be 1-d arrays of equal length >= 2")
        if t[0] != 0.0 or t[-1] != 1.0 or y[0] != 0.0 or y[-1] != 1.0:
            raise ValueError("phi must fix 0 and 1")
        if np.any(np.diff(t) <= 0) or np.any(np.diff(y) <= 0):
            raise ValueError("phi must be strictly increasing")
        if np.max(np.abs(t + t[::-1] - 1.0)) > HOMEO_TOL or np.max(np.abs(y + y[::-1] - 1.0)) > HOMEO_TOL:
            raise ValueError("phi must satisfy phi(1 - t) = 1 - phi(t)")
        t.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "knots", t)
        object.__setattr__(self, "values", y)

    @classmethod
    def identity(cls) -> "SymmetricHomeo":
        return cls(np.array([0.0, 1.0]), np.array([0.0, 1.0]))

    @classmethod
    def from_left_half(cls, knots, values) -> "SymmetricHomeo":
        """Mirror data given on ``(0, 1/2)``; ``0``, ``1/2`` and ``1`` are added."""
        t = np.asarray(knots, dtype=float)
        y = np.asarray(values, dtype=float)
        full_t = np.concatenate([[0.0], t, [0.5], 1.0 - t[::-1], [1.0]])
        full_y = np.concatenate([[0.0], y, [0.5], 1.0 - y[::-1], [1.0]])
        return cls(full_t, full_y)

    def __call__(self, t):
        out = np.interp(np.asarray(t, dtype=float), self.knots, self.values)
        return float(out) if np.ndim(t) == 0 else out

    def inverse(self) -> "SymmetricHomeo":
        return SymmetricHomeo(self.values, self.knots)

    def then(self, outer: "SymmetricHomeo") -> "SymmetricHomeo":
        """``outer o self``, again symmetric and piecewise linear."""
        t = np.union1d(self.knots, self.inverse()(outer.knots))
        t = t[(t > 0.0) & (t < 0.5)]
        y = outer(self(t))
        # pulled-back knots can land within rounding of existing ones
        keep = (np.diff(t, prepend=0.0) > 1e-13) & (np.diff(y, prepend=0.0) > 1e-13) & (y < 0.5 - 1e-13)
        return SymmetricHomeo.from_left_half(t[keep], y[keep])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "phi"])
        for a, b in zip(self.knots, self.values):
            w.writerow([repr(float(a)), repr(float(b))])
        return buf.getvalue()


def compose(f: Callable, phi: SymmetricHomeo) -> Callable:
    """``f o phi``; a valid ``phi`` keeps ``f`` in the symmetric class."""
    if not isinstance(phi, SymmetricHomeo):
        phi = SymmetricHomeo(*phi)
    return lambda t: f(phi(t))


def coefficient_sup(f: Callable, H: int = 32, panels: int = 1 << 14) -> float:
    """``max_{1 <= |h| <= H} |h ghat(h)|`` with ``g = f - t f(1)``, from the sampled interpolant."""
    h = np.concatenate([-np.arange(H, 0, -1), np.arange(1, H + 1)])
    fhat = interpolant_fourier(f, h, panels)
    f1 = complex(np.asarray(f(np.array([1.0])))[0])
    ghat = fhat + f1 / (2j * np.pi * h)
    return float(np.max(np.abs(h * ghat)))


@dataclass(frozen=True)
class ReparamResult:
    phi: SymmetricHomeo
    achieved: float
    initial: float
    success: bool
    evaluations: int


TARGET = 1.0 / math.pi


def reparam_search(f: Callable, budget: int = 200, H: int = 32, level: int = 3,
                   panels: int = 1 << 14) -> ReparamResult:
    """Coordinate descent over symmetric piecewise-linear ``phi`` with dyadic knots.

    Minimizes ``max_{1 <= |h| <= H} |h ghat(h)|`` for ``f o phi``; success
    means the target ``1/pi`` was reached.  A heuristic: no existence
    guarantee is used or implied.
    """
    if level < 2:
        raise ValueError("level must be >= 2")
    knots = np.arange(1, 2 ** (level - 1)) / 2 ** level
    y = knots.copy()

    def objective(vals: np.ndarray) -> float:
        return coefficient_sup(compose(f, SymmetricHomeo.from_left_half(knots, vals)), H, panels)

    best = initial = objective(y)
    evals = 1
    step = 0.5 / 2 ** level
    while best > TARGET and evals < budget and step > 1e-6:
        improved = False
        for k in range(len(y)):
            lo = y[k - 1] if k > 0 else 0.0
            hi = y[k + 1] if k + 1 < len(y) else 0.5
            for cand in (y[k] - step, y[k] + step):
                if not lo < cand < hi or evals >= budget:
                    continue
                trial = y.copy()
                trial[k] = cand
                val = objective(trial)
                evals += 1
                if val < best:
                    best, y, improved = val, trial, True
                    break
        if not improved:
            step /= 2
    phi = SymmetricHomeo.from_left_half(knots, y)
    return ReparamResult(phi, best, initial, best <= TARGET, evals)

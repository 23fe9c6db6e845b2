"""Sampling the limiting random Fourier series and Monte Carlo ball probabilities.

``K(t) = t ST_0 + sum_{h != 0} (e(ht) - 1)/(2 pi i h) ST_h`` with independent
Sato-Tate (semicircle) coefficients.  Trial ``k`` of a run with seed ``s``
draws from ``numpy.random.default_rng([s, k])``, so results do not depend on
the order or partitioning of trials.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .modarith import SumSpec, is_prime, partial_sums

TWO_PI_I = 2j * np.pi
DEFAULT_GRID = 1025


def sample_sato_tate(rng: np.random.Generator, size=None):
    """Semicircle law on [-2, 2], density ``sqrt(4 - x^2) / (2 pi)``.

    Uses ``X = 4 B - 2`` with ``B ~ Beta(3/2, 3/2)``, an exact identity in law.
    """
    return 4.0 * rng.beta(1.5, 1.5, size) - 2.0


def sato_tate_cdf(x):
    x = np.clip(np.asarray(x, dtype=float), -2.0, 2.0)
    return 0.5 + (x * np.sqrt(4.0 - x * x) / 4.0 + np.arcsin(x / 2.0)) / np.pi


def _basis(N: int, t: np.ndarray) -> np.ndarray:
    """Columns ``t`` then ``(e(ht)-1)/(2 pi i h)`` for ``h = -N..-1, 1..N``."""
    h = np.concatenate([-np.arange(N, 0, -1), np.arange(1, N + 1)]).astype(float)
    cols = (np.exp(TWO_PI_I * np.outer(t, h)) - 1.0) / (TWO_PI_I * h)
    return np.column_stack([t.astype(complex), cols])


@dataclass(frozen=True)
class SeriesSample:
    """One realization of the symmetric partial sum with ``|h| <= N``.

    ``st[k]`` is the coefficient of frequency ``k - N``.
    """

    N: int
    st: np.ndarray
    t: np.ndarray
    values: np.ndarray
    seed: int | None

    @property
    def st0(self) -> float:
        return float(self.st[self.N])

    def alphas(self) -> tuple[np.ndarray, np.ndarray]:
        h = np.arange(-self.N, self.N + 1)
        keep = h != 0
        return h[keep], self.st[keep]


def _draws(N: int, rng: np.random.Generator) -> np.ndarray:
    # order: ST_{-N}, ..., ST_{-1}, ST_0, ST_1, ..., ST_N
    return sample_sato_tate(rng, 2 * N + 1)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(trial)])


def sample_K(N: int, grid_size: int = DEFAULT_GRID, rng: np.random.Generator | None = None,
             seed: int | None = None) -> SeriesSample:
    if N < 1:
        raise ValueError("N must be >= 1")
    if rng is None:
        rng = np.random.default_rng(seed)
    st = _draws(N, rng)
    t = np.linspace(0.0, 1.0, grid_size)
    coeffs = np.concatenate([[st[N]], st[:N], st[N + 1:]])
    values = _basis(N, t) @ coeffs
    values[0] = 0.0
    return SeriesSample(N, st, t, values, seed)


def _center_values(f: Callable | None, t: np.ndarray) -> np.ndarray:
    if f is None:
        return np.zeros(len(t), dtype=complex)
    return np.asarray(f(t), dtype=complex)


def mc_ball_probability(f: Callable | None, eps: float, N: int, trials: int, seed: int = 0,
                        grid_size: int = DEFAULT_GRID, batch: int = 512) -> float:
    """Fraction of draws of ``K_N`` within sup-distance ``eps`` of ``f`` on the grid.

    ``f=None`` means the zero function.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    hits = _ball_hits(f, np.array([eps]), N, trials, seed, grid_size, batch)
    return float(hits[0] / trials)


def _ball_hits(f, eps: np.ndarray, N: int, trials: int, seed: int, grid_size: int, batch: int) -> np.ndarray:
    t = np.linspace(0.0, 1.0, grid_size)
    basis = _basis(N, t).T
    center = _center_values(f, t)
    hits = np.zeros(len(eps), dtype=np.int64)
    for start in range(0, trials, batch):
        stop = min(trials, start + batch)
        st = np.stack([_draws(N, _trial_rng(seed, k)) for k in range(start, stop)])
        coeffs = np.column_stack([st[:, N], st[:, :N], st[:, N + 1:]])
        dist = np.max(np.abs(coeffs @ basis - center), axis=1)
        hits += np.sum(dist[:, None] < eps[None, :], axis=0)
    return hits


def mc_ball_profile(f: Callable | None, eps_values, N: int, trials: int, seed: int = 0,
                    grid_size: int = DEFAULT_GRID) -> np.ndarray:
    """Frequencies for several radii from one shared set of draws."""
    eps = np.asarray(eps_values, dtype=float)
    return _ball_hits(f, eps, N, trials, seed, grid_size, 512) / trials


@dataclass(frozen=True)
class MCResult:
    f_id: str
    eps: float
    N: int
    trials: int
    seed: int
    frequency: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def empirical_grid_size(p: int) -> int:
    """Smallest multiple of ``p - 1`` plus one reaching ``max(1025, 4(p-1)+1)``; holds every knot."""
    n = p - 1
    m = max(4, math.ceil((DEFAULT_GRID - 1) / n))
    return m * n + 1


@dataclass(frozen=True)
class EmpiricalComparison:
    p: int
    b: int
    eps: float
    empirical: float
    mc: float
    N: int
    trials: int
    seed: int
    grid_size: int
    note: str = "b fixed, a varies over (Z/pZ)^*"


def kloosterman_sup_distances(p: int, b: int, f: Callable | None) -> np.ndarray:
    """``max_j |z_j - f(j/(p-1))|`` over the knots, for each ``a = 1..p-1``."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    t = np.linspace(0.0, 1.0, p)
    center = _center_values(f, t)
    out = np.empty(p - 1)
    for a in range(1, p):
        z = partial_sums(SumSpec.kloosterman(a, b, p))
        out[a - 1] = np.max(np.abs(z - center))
    return out


def empirical_vs_limit(p: int, b: int, f: Callable | None, eps: float, N: int = 128,
                       trials: int = 2000, seed: int = 0) -> EmpiricalComparison:
    """Fraction of Kloosterman paths within ``eps`` of ``f``, next to the Monte Carlo estimate.

    The paths are compared at their knots ``j/(p-1)``, where both are exact.
    """
    d = kloosterman_sup_distances(p, b, f)
    empirical = float(np.mean(d < eps))
    g = empirical_grid_size(p)
    mc = mc_ball_probability(f, eps, N, trials, seed, g)
    return EmpiricalComparison(p, b, eps, empirical, mc, N, trials, seed, g)

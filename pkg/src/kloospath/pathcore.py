"""Polygonal paths in the complex plane parameterized on [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .modarith import SumSpec, partial_sums, summands

SYMMETRY_TOL = 1e-9
DEFAULT_GRID = 4097

Evaluable = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class PolyPath:
    """Vertices ``z[0..n]`` reached at knot times ``t[0..n]``; linear in between."""

    z: np.ndarray
    t: np.ndarray
    label: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        z = np.asarray(self.z, dtype=complex)
        t = np.asarray(self.t, dtype=float)
        if z.ndim != 1 or t.shape != z.shape:
            raise ValueError("vertices and knots must be 1-d arrays of equal length")
        if len(z) < 2:
            raise ValueError("a path needs at least one segment")
        if t[0] != 0.0 or t[-1] != 1.0:
            raise ValueError("knots must start at 0 and end at 1")
        if np.any(np.diff(t) <= 0):
            raise ValueError("knots must be strictly increasing")
        z.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "t", t)

    @classmethod
    def equally_spaced(cls, z, label: str = "", **meta) -> "PolyPath":
        z = np.asarray(z, dtype=complex)
        return cls(z, np.linspace(0.0, 1.0, len(z)), label, meta)

    @classmethod
    def from_steps(cls, steps, t=None, label: str = "", **meta) -> "PolyPath":
        steps = np.asarray(steps, dtype=complex)
        z = np.concatenate([[0.0], np.cumsum(steps)])
        if t is None:
            t = np.linspace(0.0, 1.0, len(z))
        return cls(z, t, label, meta)

    @property
    def n(self) -> int:
        return len(self.z) - 1

    @property
    def deltas(self) -> np.ndarray:
        return np.diff(self.t)

    @property
    def steps(self) -> np.ndarray:
        return np.diff(self.z)

    @property
    def f1(self) -> complex:
        return complex(self.z[-1])

    @property
    def total_variation(self) -> float:
        return float(np.sum(np.abs(self.steps)))

    @property
    def is_equally_spaced(self) -> bool:
        return bool(np.allclose(self.deltas, 1.0 / self.n, rtol=0, atol=1e-12))

    def __call__(self, t):
        return self.eval(t)

    def eval(self, t):
        """Piecewise-linear value at ``t`` (scalar or array), exact at knots."""
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise ValueError("t must lie in [0, 1]")
        out = np.interp(arr, self.t, self.z.real) + 1j * np.interp(arr, self.t, self.z.imag)
        return complex(out) if np.ndim(t) == 0 else out

    def scaled(self, lam: complex) -> "PolyPath":
        return PolyPath(self.z * lam, self.t, f"{lam}*{self.label}", dict(self.meta))

    def conjugate(self) -> "PolyPath":
        return PolyPath(np.conj(self.z), self.t, f"conj({self.label})", dict(self.meta))

    def reflected(self) -> "PolyPath":
        """``t -> f(1) - conj(f(1 - t))``; maps the symmetric class to itself."""
        z = self.f1 - np.conj(self.z[::-1])
        t = 1.0 - self.t[::-1]
        t[0], t[-1] = 0.0, 1.0
        return PolyPath(z, t, f"refl({self.label})", dict(self.meta))


@dataclass(frozen=True)
class SymmetryReport:
    is_F0: bool
    f1: complex
    max_defect: float
    f0_defect: float


def symmetry_report(f, grid_size: int = DEFAULT_GRID, tol: float = SYMMETRY_TOL) -> SymmetryReport:
    """Test ``f(t) + conj(f(1 - t)) = f(1)`` together with ``f(0) = 0``.

    A :class:`PolyPath` is tested at its knots and their mirror images,
    where the piecewise-linear defect attains its maximum.  Any other
    callable must accept arrays and is tested on a uniform grid.
    """
    if isinstance(f, PolyPath):
        pts = np.union1d(f.t, 1.0 - f.t)
        pts = np.clip(pts, 0.0, 1.0)
    else:
        if grid_size < 2:
            raise ValueError("grid_size must be at least 2")
        pts = np.linspace(0.0, 1.0, grid_size)
    vals = np.asarray(f(pts), dtype=complex)
    mirror = np.asarray(f(1.0 - pts), dtype=complex)
    f0 = complex(np.asarray(f(np.array([0.0])), dtype=complex)[0])
    f1 = complex(np.asarray(f(np.array([1.0])), dtype=complex)[0])
    defect = float(np.max(np.abs(vals + np.conj(mirror) - f1)))
    f0_defect = abs(f0)
    ok = f0_defect <= tol and defect <= tol and abs(f1.imag) <= tol
    return SymmetryReport(ok, f1, defect, f0_defect)


# -- constructions -------------------------------------------------------------


def kloosterman_path(a: int, b: int, p: int) -> PolyPath:
    """Plain Kloosterman path: ``p - 1`` equal segments through the partial sums."""
    spec = SumSpec.kloosterman(a, b, p)
    return PolyPath.equally_spaced(partial_sums(spec), f"K_{p}({a},{b})", kind="plain", p=p, a=a, b=b)


def swiss_clock_path(a: int, b: int, p: int) -> PolyPath:
    """Kloosterman path with a one-step pause inserted at the middle vertex."""
    spec = SumSpec.kloosterman(a, b, p)
    s = summands(spec)
    half = (p - 1) // 2
    steps = np.concatenate([s[:half], [0.0], s[half:]])
    return PolyPath.from_steps(steps, None, f"swiss K_{p}({a},{b})", kind="swiss", p=p, a=a, b=b)


def _padded_knots(p: int) -> np.ndarray:
    t = np.empty(p + 2)
    t[0] = 0.0
    t[1:-1] = (np.arange(1, p + 1) - 0.5) / p
    t[-1] = 1.0
    return t


def padded_kloosterman_path(a: int, b: int, p: int) -> PolyPath:
    """Pauses of length ``1/(2p)`` at both ends; ``p + 1`` segments."""
    spec = SumSpec.kloosterman(a, b, p)
    s = summands(spec)
    steps = np.concatenate([[0.0], s, [0.0]])
    return PolyPath.from_steps(steps, _padded_knots(p), f"padded K_{p}({a},{b})",
                               kind="padded", p=p, a=a, b=b)


def padded_birch_path(a: int, p: int) -> PolyPath:
    """Birch path with the ``x = 0`` summand split in halves at both ends."""
    spec = SumSpec.birch(a, p)
    s = summands(spec)
    half_first = s[0] / 2
    steps = np.concatenate([[half_first], s[1:], [half_first]])
    return PolyPath.from_steps(steps, _padded_knots(p), f"padded B_{p}({a})",
                               kind="birch", p=p, a=a)


def padded_character_path(p: int) -> PolyPath:
    """Legendre-symbol partial sums with pauses of length ``1/(2p)`` at both ends."""
    spec = SumSpec.legendre(p)
    s = summands(spec)
    steps = np.concatenate([[0.0], s, [0.0]])
    return PolyPath.from_steps(steps, _padded_knots(p), f"padded chi_{p}",
                               kind="character", p=p)


def spike_path() -> PolyPath:
    """The two-segment tent ``0 -> i -> 0``; a small worked example."""
    return PolyPath([0, 1j, 0], [0.0, 0.5, 1.0], "spike")


PATH_KINDS = ("plain", "swiss", "padded", "birch", "character")


def build_path(kind: str, p: int, a: int = 1, b: int = 1) -> PolyPath:
    if kind == "plain":
        return kloosterman_path(a, b, p)
    if kind == "swiss":
        return swiss_clock_path(a, b, p)
    if kind == "padded":
        return padded_kloosterman_path(a, b, p)
    if kind == "birch":
        return padded_birch_path(a, p)
    if kind == "character":
        return padded_character_path(p)
    raise ValueError(f"unknown path kind {kind!r}; expected one of {PATH_KINDS}")


def sup_distance(f: Evaluable, g: Evaluable, grid_size: int = 1025) -> float:
    t = np.linspace(0.0, 1.0, grid_size)
    return float(np.max(np.abs(np.asarray(f(t)) - np.asarray(g(t)))))

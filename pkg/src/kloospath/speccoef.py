"""Fourier data of paths: exact polygonal coefficients, step sums, quadrature.

Conventions: ``e(x) = exp(2 pi i x)`` and ``fhat(h) = int_0^1 f(t) e(-h t) dt``.
For a path ``f`` with ``f(0) = 0`` the expansion coefficients are
``alpha(h) = f(1) + 2 pi i h fhat(h)``, so that ``alpha(h) = 2 pi i h ghat(h)``
with ``g(t) = f(t) - t f(1)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .pathcore import PolyPath

TWO_PI_I = 2j * np.pi


class QuadratureError(RuntimeError):
    def __init__(self, msg: str, last: complex, previous: complex):
        super().__init__(f"{msg} (last={last!r}, previous={previous!r})")
        self.last = last
        self.previous = previous


def sinc(x):
    """``sin(x)/x`` with ``sinc(0) = 1``; Taylor series near 0."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    x2 = x * x
    out = np.where(small, 1.0 - x2 / 6.0 + x2 * x2 / 120.0, np.sin(safe) / safe)
    return float(out) if out.ndim == 0 else out


# -- DFT -----------------------------------------------------------------------


def naive_dft(x) -> np.ndarray:
    """``X[k] = sum_j x[j] e(-jk/n)`` by direct O(n^2) summation."""
    x = np.asarray(x, dtype=complex)
    n = len(x)
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-TWO_PI_I * jk / n).T @ x


def _chirp(n: int, m: np.ndarray) -> np.ndarray:
    # e(m^2 / 2n) with the exponent reduced exactly mod 2n
    r = (m.astype(np.int64) ** 2) % (2 * n)
    return np.exp(1j * np.pi * r / n)


def bluestein_dft(x) -> np.ndarray:
    """DFT of arbitrary length via the chirp-z identity ``jk = (j^2 + k^2 - (k-j)^2)/2``.

    The convolution runs on power-of-two FFTs.
    """
    x = np.asarray(x, dtype=complex)
    n = len(x)
    if n == 0:
        return x.copy()
    if n & (n - 1) == 0:
        return np.fft.fft(x)
    m = 1 << (2 * n - 1).bit_length()
    j = np.arange(n)
    w = _chirp(n, j)  # e(j^2/2n)
    a = np.zeros(m, dtype=complex)
    a[:n] = x * np.conj(w)
    b = np.zeros(m, dtype=complex)
    b[:n] = w
    b[m - n + 1:] = w[1:][::-1]
    conv = np.fft.ifft(np.fft.fft(a) * np.fft.fft(b))
    return np.conj(w) * conv[:n]


dft = bluestein_dft


# -- polygonal coefficients ----------------------------------------------------


def step_sums(path: PolyPath, hs: np.ndarray, weighted: bool = True, chunk: int = 64) -> np.ndarray:
    """``sum_j d_j e(-h (t_j + D_j/2)) sinc(pi h D_j)`` for each ``h`` (no sinc if not ``weighted``)."""
    d = path.steps
    dt = path.deltas
    mid = path.t[:-1] + dt / 2
    hs = np.asarray(hs)
    out = np.empty(len(hs), dtype=complex)
    for i in range(0, len(hs), chunk):
        h = hs[i:i + chunk, None].astype(float)
        kernel = np.exp(-TWO_PI_I * h * mid)
        if weighted:
            kernel = kernel * sinc(np.pi * h * dt)
        out[i:i + chunk] = kernel @ d
    return out


def _as_h_array(h) -> tuple[np.ndarray, bool]:
    arr = np.atleast_1d(np.asarray(h))
    if not np.issubdtype(arr.dtype, np.integer):
        if np.any(arr != np.round(arr)):
            raise ValueError("frequencies must be integers")
        arr = arr.astype(np.int64)
    if np.any(arr == 0):
        raise ValueError("h = 0 is excluded; the mean is not part of the coefficient data")
    return arr, np.ndim(h) == 0


def polygonal_fourier(path: PolyPath, h):
    """Exact Fourier coefficient of the piecewise-linear path (telescoped form)."""
    hs, scalar = _as_h_array(h)
    s = step_sums(path, hs)
    out = (-(path.z[-1] - path.z[0]) + s) / (TWO_PI_I * hs)
    return complex(out[0]) if scalar else out


def polygonal_alpha(path: PolyPath, h):
    """``f(1) + 2 pi i h fhat(h)``; computed without the divide-multiply by ``h``."""
    hs, scalar = _as_h_array(h)
    out = path.z[0] + step_sums(path, hs)
    return complex(out[0]) if scalar else out


# -- step sums for equally spaced paths ---------------------------------------


@dataclass(frozen=True)
class TildeTable:
    """``ftilde(h) = sum_j d_j e(-h (j + 1/2)/n)`` for ``0 < |h| <= n``."""

    n: int
    steps: np.ndarray
    h: np.ndarray
    values: np.ndarray
    spectrum: np.ndarray  # DFT of the steps, ftilde(h) = e(-h/2n) spectrum[h mod n]

    def at(self, h):
        """Value at any integer ``h``, using ``ftilde(h + n) = -ftilde(h)``."""
        out = _tilde_from_spectrum(self.spectrum, np.asarray(h, dtype=np.int64))
        return complex(out) if out.ndim == 0 else out


def _tilde_from_spectrum(spectrum: np.ndarray, h: np.ndarray) -> np.ndarray:
    n = len(spectrum)
    return np.exp(-1j * np.pi * np.mod(h, 2 * n) / n) * spectrum[np.mod(h, n)]


def tilde_table(path: PolyPath) -> TildeTable:
    if not path.is_equally_spaced:
        raise ValueError("step sums need equally spaced knots; use the general coefficient formula")
    n = path.n
    d = np.array(path.steps)
    spectrum = dft(d)
    h = np.concatenate([-np.arange(n, 0, -1), np.arange(1, n + 1)])
    return TildeTable(n, d, h, _tilde_from_spectrum(spectrum, h), spectrum)


def naive_tilde(steps, h) -> np.ndarray:
    d = np.asarray(steps, dtype=complex)
    n = len(d)
    hs = np.atleast_1d(np.asarray(h, dtype=float))
    j = np.arange(n) + 0.5
    return np.exp(-TWO_PI_I * np.outer(hs, j) / n) @ d


# -- coefficient tables --------------------------------------------------------


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients for ``h`` in ``[-H, H] \\ {0}`` (both signs stored)."""

    f1: complex
    h: np.ndarray
    fhat: np.ndarray
    alpha: np.ndarray

    @property
    def H(self) -> int:
        return int(np.max(np.abs(self.h)))

    @property
    def ghat(self) -> np.ndarray:
        return self.fhat + self.f1 / (TWO_PI_I * self.h)

    @classmethod
    def from_alpha(cls, f1: complex, h, alpha) -> "CoeffTable":
        h = np.asarray(h, dtype=np.int64)
        alpha = np.asarray(alpha, dtype=complex)
        fhat = (alpha - f1) / (TWO_PI_I * h)
        return cls(complex(f1), h, fhat, alpha)

    def with_alpha(self, alpha) -> "CoeffTable":
        return CoeffTable.from_alpha(self.f1, self.h, alpha)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["h", "re_fhat", "im_fhat", "re_alpha", "im_alpha"])
        order = np.argsort(self.h, kind="stable")
        for k in order:
            w.writerow([int(self.h[k]), repr(float(self.fhat[k].real)), repr(float(self.fhat[k].imag)),
                        repr(float(self.alpha[k].real)), repr(float(self.alpha[k].imag))])
        return buf.getvalue()


def signed_range(H: int) -> np.ndarray:
    return np.concatenate([-np.arange(H, 0, -1), np.arange(1, H + 1)])


def coeff_table(path: PolyPath, H: int) -> CoeffTable:
    h = signed_range(H)
    return CoeffTable(path.f1, h, polygonal_fourier(path, h), polygonal_alpha(path, h))


def coeff_table_quadrature(f: Callable, H: int, **kw) -> CoeffTable:
    h = signed_range(H)
    fhat = quadrature_fourier(f, h, **kw)
    f1 = complex(np.asarray(f(np.array([1.0])))[0])
    return CoeffTable(f1, h, fhat, f1 + TWO_PI_I * h * fhat)


# -- quadrature ----------------------------------------------------------------


def interpolant_fourier(f: Callable, h, panels: int):
    """Exact Fourier coefficients of the piecewise-linear interpolant of ``f`` on ``panels`` equal panels."""
    hs, scalar = _as_h_array(h)
    out = _interpolant_coefficients(f, hs, panels)
    return complex(out[0]) if scalar else out


def _interpolant_coefficients(f: Callable, hs: np.ndarray, panels: int) -> np.ndarray:
    t = np.linspace(0.0, 1.0, panels + 1)
    z = np.asarray(f(t), dtype=complex)
    d = np.diff(z)
    s = sinc(np.pi * hs / panels) * _tilde_from_spectrum(dft(d), hs)
    return (-(z[-1] - z[0]) + s) / (TWO_PI_I * hs)


def quadrature_fourier(f: Callable, h, panels: int = 64, refine: int = 2,
                       tol: float = 1e-9, max_panels: int = 1 << 22):
    """Fourier coefficients of ``f`` by integrating its piecewise-linear interpolant exactly.

    The panel count is multiplied by ``refine`` until successive estimates
    agree within ``tol`` (max over the requested ``h``).  ``refine=3`` suits
    functions self-similar under tripling, such as the Cantor staircase.
    """
    if panels < 64:
        raise ValueError("use at least 64 panels")
    hs, scalar = _as_h_array(h)
    previous = None
    last = _interpolant_coefficients(f, hs, panels)
    while panels * refine <= max_panels:
        panels *= refine
        previous, last = last, _interpolant_coefficients(f, hs, panels)
        if np.max(np.abs(last - previous)) < tol:
            return complex(last[0]) if scalar else last
    k = 0 if previous is None else int(np.argmax(np.abs(last - previous)))
    raise QuadratureError(f"no convergence within {max_panels} panels",
                          complex(last[k]), complex(previous[k]) if previous is not None else complex("nan"))


# -- Cesaro reconstruction -----------------------------------------------------


def cesaro_reconstruct(table: CoeffTable, N: int, t):
    """Fejer-weighted partial sum ``f(1) t + sum alpha(h) (e(ht)-1)/(2 pi i h) (1 - |h|/N)``."""
    if N > table.H + 1:
        raise ValueError(f"table only holds |h| <= {table.H}")
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    keep = np.abs(table.h) < N
    h = table.h[keep].astype(float)
    w = table.alpha[keep] * (1.0 - np.abs(h) / N) / (TWO_PI_I * h)
    out = table.f1 * tt + (np.exp(TWO_PI_I * np.outer(tt, h)) - 1.0) @ w
    return complex(out[0]) if np.ndim(t) == 0 else out

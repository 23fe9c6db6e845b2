"""Classical example functions with closed-form expansion coefficients.

Every function here satisfies ``f(0) = 0`` and the reflection symmetry.  For
each one ``alpha(h) = 2 pi i h ghat(h)`` with ``g(t) = f(t) - t f(1)`` is known
in closed form, together with a bound on ``|alpha(h)|`` for ``|h| > H``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from typing import Callable

import numpy as np

from .membership import MembershipVerdict, check_alpha_sequence, check_polygonal
from .pathcore import PolyPath
from .speccoef import coeff_table_quadrature, signed_range, tilde_table

HILBERT_MAX_LEVEL = 8


# -- evaluators ----------------------------------------------------------------


def _dist_to_int(x: np.ndarray) -> np.ndarray:
    return np.abs(x - np.round(x))


def takagi(t, terms: int = 53):
    """``sum_{j < terms} <2^j t> / 2^j``; truncation error at most ``2^-terms``."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    x = np.asarray(t, dtype=float)
    out = np.zeros_like(x)
    for j in range(terms):
        out += _dist_to_int(np.ldexp(x, j)) / 2.0 ** j
    return float(out) if out.ndim == 0 else out


def riemann_rho(t, terms: int = 2000):
    """``sum_{n <= terms} sin(pi n^2 t) / (pi n^2)``."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    x = np.asarray(t, dtype=float)
    flat = np.atleast_1d(x).ravel()
    out = np.zeros(flat.shape)
    for n in range(1, terms + 1):
        sq = n * n
        # sin(pi sq t) with sq t reduced mod 2 to keep the argument small
        out += np.sin(np.pi * np.mod(sq * flat, 2.0)) / (np.pi * sq)
    return float(out[0]) if x.ndim == 0 else out.reshape(x.shape)


def cantor(t, iterations: int = 40):
    """Cantor staircase by ternary digit scan; stops at the first digit 1.

    Error at most ``2^-iterations``.
    """
    x = np.array(t, dtype=float, ndmin=1)
    scalar = np.ndim(t) == 0
    out = np.where(x >= 1.0, 1.0, 0.0)
    active = x < 1.0
    scale = 0.5
    for _ in range(iterations):
        x3 = 3.0 * x
        d = np.floor(x3)
        x = x3 - d
        hit = active & (d == 1)
        out += np.where(hit | (active & (d == 2)), scale, 0.0)
        active &= ~hit
        scale /= 2
    return float(out[0]) if scalar else out


def _primes_upto(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q::q] = False
    return np.flatnonzero(sieve)


@lru_cache(maxsize=8)
def _omega_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Number of prime factors with multiplicity, and a squarefree flag, for ``0..n``."""
    big_omega = np.zeros(n + 1, dtype=np.int64)
    squarefree = np.ones(n + 1, dtype=bool)
    for q in _primes_upto(n):
        qk = int(q)
        while qk <= n:
            big_omega[qk::qk] += 1
            if qk > q:
                squarefree[qk::qk] = False
            qk *= int(q)
    return big_omega, squarefree


def mobius(n: int) -> np.ndarray:
    """``mu(h)`` for ``h = 0..n`` (``mu(0)`` set to 0)."""
    big_omega, squarefree = _omega_table(n)
    out = np.where(squarefree, 1 - 2 * (big_omega % 2), 0)
    out[0] = 0
    return out


def liouville(n: int) -> np.ndarray:
    """``lambda(h)`` for ``h = 0..n`` (``lambda(0)`` set to 0)."""
    big_omega, _ = _omega_table(n)
    out = 1 - 2 * (big_omega % 2)
    out[0] = 0
    return out


ARITH_WEIGHTS = {"mobius": mobius, "liouville": liouville}


def davenport(t, terms: int = 4096, variant: str = "mobius"):
    """``sum_{1 <= h <= terms} c(h) (e(ht) - 1) / (2 pi i h)`` with ``c`` Mobius or Liouville."""
    if variant not in ARITH_WEIGHTS:
        raise ValueError(f"variant must be one of {tuple(ARITH_WEIGHTS)}")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    c = ARITH_WEIGHTS[variant](terms)[1:].astype(float)
    h = np.arange(1, terms + 1, dtype=float)
    w = c / (2j * np.pi * h)
    x = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    out = np.empty(x.shape, dtype=complex)
    for i in range(0, len(x), 256):
        phase = np.exp(2j * np.pi * np.outer(x[i:i + 256], h))
        out[i:i + 256] = (phase - 1.0) @ w
    return complex(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))


# -- semicircles -----------------------------------------------------------------


@lru_cache(maxsize=4096)
def _j1_decimal(x: float) -> float:
    # the terms grow to about e^|x| before cancelling, so carry enough digits
    with localcontext() as ctx:
        ctx.prec = 40 + int(abs(x) / math.log(10))
        half = Decimal(x) / 2
        sq = half * half
        term = half
        total = term
        k = 0
        while True:
            k += 1
            term = -term * sq / (k * (k + 1))
            total += term
            if k > abs(x) and abs(term) < Decimal(10) ** -30:
                break
        return float(total)


def bessel_j1(x):
    """Bessel ``J_1`` by its ascending series evaluated in extended precision."""
    arr = np.asarray(x, dtype=float)
    out = np.vectorize(_j1_decimal, otypes=[float])(arr)
    return float(out) if out.ndim == 0 else out


SEMICIRCLE_VARIANTS = ("sqrt", "trig")


def semicircle_coeff(variant: str, alpha: float, h):
    """``ghat(h)`` for the two semicircle parameterizations.

    ``sqrt``: ``f(t) = 2 alpha t + i sqrt(alpha^2 - alpha^2 (2t-1)^2)``, giving
    ``i |alpha| (-1)^h J_1(pi h) / (2h)``.
    ``trig``: ``f(t) = 2 alpha (1 - cos(pi t) + i sin(pi t))``, giving
    ``2 alpha (1/(i pi h) - 1/(i pi (h + 1/2)))``.
    """
    hs = np.asarray(h)
    if np.any(hs == 0):
        raise ValueError("h = 0 is excluded")
    hf = hs.astype(float)
    if variant == "sqrt":
        sign = np.where(hs % 2 == 0, 1.0, -1.0)
        out = 1j * abs(alpha) * sign * bessel_j1(np.pi * hf) / (2 * hf)
    elif variant == "trig":
        out = 2 * alpha * (1 / (1j * np.pi * hf) - 1 / (1j * np.pi * (hf + 0.5)))
    else:
        raise ValueError(f"variant must be one of {SEMICIRCLE_VARIANTS}")
    return complex(out) if np.ndim(out) == 0 else out


# -- Hilbert curve approximations -----------------------------------------------


@lru_cache(maxsize=HILBERT_MAX_LEVEL)
def hilbert_delta(n: int) -> np.ndarray:
    """Direction exponents (powers of ``i``) of the ``4^n`` steps at level ``n``."""
    if not 1 <= n <= HILBERT_MAX_LEVEL:
        raise ValueError(f"level must be in 1..{HILBERT_MAX_LEVEL}")
    d = np.array([1, 0, 0, 3], dtype=np.int64)
    for _ in range(n - 1):
        nxt = np.empty(4 * len(d), dtype=np.int64)
        nxt[0::4] = (1 - d) % 4
        nxt[1::4] = d
        nxt[2::4] = d
        nxt[3::4] = (3 - d) % 4
        d = nxt
    d.flags.writeable = False
    return d


def hilbert_path(n: int) -> PolyPath:
    steps = (1j ** hilbert_delta(n)) / 2.0 ** n
    return PolyPath.from_steps(steps, None, f"hilbert_{n}", kind="hilbert", level=n)


def hilbert_tilde(n: int, h):
    """``2^-n sum_j i^delta(j) e(-h (j + 1/2) / 4^n)``."""
    if np.any(np.asarray(h) == 0):
        raise ValueError("h = 0 is excluded")
    return tilde_table(hilbert_path(n)).at(h)


# -- registry --------------------------------------------------------------------


def _odd_part(h: np.ndarray) -> np.ndarray:
    k = np.abs(h).astype(np.int64)
    while np.any(k % 2 == 0):
        k = np.where(k % 2 == 0, k // 2, k)
    return k


def _is_square(h: np.ndarray) -> np.ndarray:
    a = np.abs(h).astype(np.int64)
    r = np.round(np.sqrt(a)).astype(np.int64)
    return r * r == a


def _cantor_alpha(h: np.ndarray) -> np.ndarray:
    hf = np.asarray(h, dtype=float)
    prod = np.ones_like(hf)
    for k in range(1, 41):
        prod *= np.cos(2 * np.pi * np.mod(hf, 3.0 ** k) / 3.0 ** k)
    return np.where(np.asarray(h) % 2 == 0, 1.0, -1.0) * prod


def _one_sided(weights: Callable[[int], np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    def alpha(h: np.ndarray) -> np.ndarray:
        h = np.asarray(h, dtype=np.int64)
        c = weights(int(max(np.max(h), 1)))
        return np.where(h > 0, c[np.clip(h, 0, None)], 0).astype(float)
    return alpha


@dataclass(frozen=True)
class GalleryFunction:
    """An example function with its expansion data.

    ``alpha_formula(h)`` returns ``alpha(h)`` for integer arrays ``h``;
    ``tail_bound(H)`` bounds ``|alpha(h)|`` over ``|h| > H``.
    Polygonal examples carry ``path`` instead.
    """

    id: str
    param: float | None
    evaluator: Callable
    f1: complex
    alpha_formula: Callable[[np.ndarray], np.ndarray] | None = None
    tail_bound: Callable[[int], float] | None = None
    path: PolyPath | None = None

    @property
    def label(self) -> str:
        return self.id if self.param is None else f"{self.id}:{self.param:g}"

    def __call__(self, t):
        return self.evaluator(t)


GALLERY_IDS = ("line", "parabola", "semicircle_sqrt", "semicircle_trig", "takagi",
               "riemann", "cantor", "davenport", "liouville", "hilbert")
_DEFAULT_PARAM = {"line": 2.0, "parabola": 2 * math.pi, "semicircle_sqrt": 1.0,
                  "semicircle_trig": 1.0, "hilbert": 2}


def _to_complex(fn: Callable) -> Callable:
    return lambda t: np.asarray(fn(t), dtype=complex)


def gallery_function(gid: str, param: float | None = None, terms: int | None = None) -> GalleryFunction:
    """Build a gallery entry; ``gid`` may carry its parameter as ``"id:value"``."""
    if ":" in gid:
        gid, raw = gid.split(":", 1)
        param = float(raw)
    if gid not in GALLERY_IDS:
        raise KeyError(f"unknown gallery id {gid!r}; expected one of {GALLERY_IDS}")
    if param is None:
        param = _DEFAULT_PARAM.get(gid)
    a = param

    if gid == "line":
        return GalleryFunction(gid, a, _to_complex(lambda t: a * np.asarray(t, float)), complex(a),
                               lambda h: np.zeros(np.shape(h)), lambda H: 0.0)
    if gid == "parabola":
        return GalleryFunction(gid, a, lambda t: 1j * a * np.asarray(t, float) * (1 - np.asarray(t, float)),
                               0j, lambda h: a / (np.pi * np.asarray(h, float)),
                               lambda H: abs(a) / (np.pi * (H + 1)))
    if gid == "semicircle_sqrt":
        def ev(t):
            s = 2 * np.asarray(t, float) - 1
            return 2 * a * np.asarray(t, float) + 1j * abs(a) * np.sqrt(np.clip(1 - s * s, 0, None))

        def alpha(h):
            h = np.asarray(h)
            return (2j * np.pi * h * semicircle_coeff("sqrt", a, h)).real

        # |J_1| <= 0.5819 everywhere
        return GalleryFunction(gid, a, ev, complex(2 * a), alpha, lambda H: 0.5819 * np.pi * abs(a))
    if gid == "semicircle_trig":
        # same semicircle as semicircle_sqrt, diameter [0, 2a]: amplitude a/2 in the trig form
        def ev(t):
            x = np.pi * np.asarray(t, float)
            return a * (1 - np.cos(x) + 1j * np.sin(x))

        def alpha(h):
            h = np.asarray(h)
            return (2j * np.pi * h * semicircle_coeff("trig", a / 2, h)).real

        return GalleryFunction(gid, a, ev, complex(2 * a), alpha, lambda H: 2 * abs(a) / (2 * H + 1))
    if gid == "takagi":
        n = terms or 53
        return GalleryFunction(gid, None, lambda t: np.asarray(t, float) + 1j * takagi(t, n), 1 + 0j,
                               lambda h: 2 * np.sign(h) / (np.pi * _odd_part(h)), lambda H: 2 / np.pi)
    if gid == "riemann":
        n = terms or 2000
        return GalleryFunction(gid, None, _to_complex(lambda t: riemann_rho(2 * np.asarray(t, float), n)), 0j,
                               lambda h: _is_square(h).astype(float), lambda H: 1.0)
    if gid == "cantor":
        n = terms or 40
        return GalleryFunction(gid, None, _to_complex(lambda t: cantor(t, n)), 1 + 0j, _cantor_alpha,
                               lambda H: 1.0)
    if gid in ("davenport", "liouville"):
        n = terms or 4096
        variant = "mobius" if gid == "davenport" else "liouville"
        return GalleryFunction(gid, None, lambda t: davenport(t, n, variant), 0j,
                               _one_sided(ARITH_WEIGHTS[variant]), lambda H: 1.0)
    level = int(a)
    path = hilbert_path(level)
    return GalleryFunction(gid, float(level), path, path.f1, path=path)


def gallery_verdict(g: GalleryFunction | str, H: int = 256, convention: str = "table") -> MembershipVerdict:
    """Membership of a gallery function.

    Polygonal entries go through :func:`check_polygonal` (positive ``h`` under
    ``"table"``); the rest through listed coefficients and the tail bound.
    Without a closed form the coefficients come from quadrature and the
    verdict is at best Unknown.
    """
    if isinstance(g, str):
        g = gallery_function(g)
    if g.path is not None:
        return check_polygonal(g.path, "positive" if convention == "table" else "both")
    hs = signed_range(H)
    if g.alpha_formula is not None:
        return check_alpha_sequence((hs, g.alpha_formula(hs)), g.f1, g.tail_bound(H) if g.tail_bound else None)
    table = coeff_table_quadrature(g.evaluator, H)
    return check_alpha_sequence((table.h, table.alpha), table.f1, None, imag_tol=1e-6)

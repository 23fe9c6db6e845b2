"""Modular arithmetic and complete/partial exponential sums modulo a prime.

All sums are normalized by ``p**-1/2``.  Exponents are reduced in integers
mod ``p`` and looked up in a table of ``p``-th roots of unity, so no trig
call sees a large argument.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class SumKind(str, enum.Enum):
    KLOOSTERMAN = "kloosterman"
    BIRCH = "birch"
    LEGENDRE = "legendre"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    for d in range(3, r + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class SumSpec:
    """Which complete sum modulo ``p`` to evaluate.

    ``a`` and ``b`` are only meaningful for the kinds that use them
    (Kloosterman uses both, Birch uses ``a``).
    """

    p: int
    kind: SumKind = SumKind.KLOOSTERMAN
    a: int = 1
    b: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", SumKind(self.kind))
        if not isinstance(self.p, (int, np.integer)) or self.p < 3 or not is_prime(int(self.p)):
            raise ValueError(f"modulus must be an odd prime, got {self.p!r}")
        p = int(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", int(self.a) % p)
        object.__setattr__(self, "b", int(self.b) % p)
        if self.kind is SumKind.KLOOSTERMAN and (self.a == 0 or self.b == 0):
            raise ValueError(f"Kloosterman sums need a, b coprime to p (got a={self.a}, b={self.b})")

    @classmethod
    def kloosterman(cls, a: int, b: int, p: int) -> "SumSpec":
        return cls(p, SumKind.KLOOSTERMAN, a, b)

    @classmethod
    def birch(cls, a: int, p: int) -> "SumSpec":
        return cls(p, SumKind.BIRCH, a, 0)

    @classmethod
    def legendre(cls, p: int) -> "SumSpec":
        return cls(p, SumKind.LEGENDRE, 0, 0)


@dataclass(frozen=True)
class CompleteSum:
    spec: SumSpec
    value: complex
    half_value: complex | None = None


def mod_inverse(x: int, p: int) -> int:
    """Inverse of ``x`` modulo ``p`` by the extended Euclidean algorithm."""
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    old_r, r = x, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroDivisionError(f"{x} is not invertible modulo {p}")
    return old_s % p


@lru_cache(maxsize=64)
def inverse_table(p: int) -> np.ndarray:
    """``inv[x] = x^-1 mod p`` for ``x = 1..p-1`` (``inv[0] = 0``).

    Batch inversion: one modular inverse plus three multiplications per
    entry (Montgomery's trick).
    """
    n = p - 1
    prefix = [1] * (n + 1)
    for x in range(1, n + 1):
        prefix[x] = prefix[x - 1] * x % p
    inv_all = mod_inverse(prefix[n], p)
    inv = [0] * p
    for x in range(n, 0, -1):
        inv[x] = inv_all * prefix[x - 1] % p
        inv_all = inv_all * x % p
    out = np.array(inv, dtype=np.int64)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=64)
def roots_of_unity(p: int) -> np.ndarray:
    """``e(k/p)`` for ``k = 0..p-1``; read-only."""
    k = np.arange(p)
    r = np.exp(2j * np.pi * k / p)
    r.flags.writeable = False
    return r


def legendre_symbol(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=64)
def legendre_table(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int64)
    chi[0] = 0
    x = np.arange(1, p, dtype=np.int64)
    chi[x * x % p] = 1
    chi.flags.writeable = False
    return chi


def summands(spec: SumSpec) -> np.ndarray:
    """Normalized summands in summation order.

    Kloosterman: ``x = 1..p-1``; Birch: ``x = 0..p-1``; Legendre: ``x = 1..p-1``.
    """
    p = spec.p
    scale = 1.0 / math.sqrt(p)
    if spec.kind is SumKind.KLOOSTERMAN:
        x = np.arange(1, p, dtype=np.int64)
        idx = (spec.a * x + spec.b * inverse_table(p)[1:]) % p
        return roots_of_unity(p)[idx] * scale
    if spec.kind is SumKind.BIRCH:
        x = np.arange(p, dtype=np.int64)
        idx = (spec.a * x + x * x % p * x) % p
        return roots_of_unity(p)[idx] * scale
    return legendre_table(p)[1:].astype(complex) * scale


def partial_sums(spec: SumSpec) -> np.ndarray:
    """Normalized partial sums ``z_0 = 0, z_1, ...`` of the complete sum."""
    s = summands(spec)
    out = np.empty(len(s) + 1, dtype=complex)
    out[0] = 0.0
    np.cumsum(s, out=out[1:])
    return out


def complete_sum(spec: SumSpec) -> CompleteSum:
    z = partial_sums(spec)
    value = complex(z[-1])
    half = None
    if spec.kind is SumKind.KLOOSTERMAN:
        half = complex(z[(spec.p - 1) // 2])
    if spec.kind in (SumKind.KLOOSTERMAN, SumKind.BIRCH):
        # real by x -> -x (Birch) or x -> x^-1 pairing (Kloosterman); drop roundoff
        value = complex(value.real, 0.0) if abs(value.imag) < 1e-9 else value
    return CompleteSum(spec, value, half)


def kloosterman(a: int, b: int, p: int) -> float:
    """Normalized Kl_2(a, b; p); real."""
    return complete_sum(SumSpec.kloosterman(a, b, p)).value.real


def birch(a: int, p: int) -> float:
    return complete_sum(SumSpec.birch(a, p)).value.real


def kloosterman_family(b: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Kl_2(c, b; p) and the mid-path value Klm(c, b; p) for every ``c`` in 0..p-1.

    ``c = 0`` is included (a Ramanujan sum, value ``-1/sqrt(p)``) since
    shifted sums ``Kl_2(a - h, b; p)`` hit it.
    """
    p = int(p)
    inv = inverse_table(p)[1:]
    x = np.arange(1, p, dtype=np.int64)
    root = roots_of_unity(p)
    half = (p - 1) // 2
    kl = np.empty(p)
    klm = np.empty(p, dtype=complex)
    binv = (b * inv) % p
    for c in range(p):
        t = root[(c * x + binv) % p]
        klm[c] = t[:half].sum()
        kl[c] = (klm[c] + t[half:].sum()).real
    s = 1.0 / math.sqrt(p)
    return kl * s, klm * s


def gauss_sum(p: int) -> complex:
    """Normalized Gauss sum of the Legendre symbol modulo ``p``."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    chi = legendre_table(p)
    return complex(np.sum(chi[1:] * roots_of_unity(p)[1:]) / math.sqrt(p))

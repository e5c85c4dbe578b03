"""Homogeneous weights and distances over Z_q.

Every scaling is an exact rational multiple of the integer weight
phi(q) - c_q(x). The search code works on an integer table and applies the
rational factor once at the end, so no floating point enters a comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .cyclo import CycloElem, euler_phi, prime_power, ramanujan_table, trace_T

HONOLD = "honold"
STANDARD = "standard"
CUSTOM = "custom"


@dataclass(frozen=True)
class WeightScaling:
    """Normalization of the homogeneous weight wt(x) = lam * (1 - c_q(x)/phi(q)).

    ``honold`` takes lam = phi(q); ``standard`` (prime powers q = p^k only)
    takes lam = p^(k-1) - p^(k-2), i.e. phi(q)/p; ``custom`` takes an
    arbitrary positive rational lam.
    """

    kind: str
    q: int
    lam: Fraction | None = field(default=None)

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.kind == HONOLD:
            object.__setattr__(self, "lam", Fraction(euler_phi(self.q)))
        elif self.kind == STANDARD:
            pk = prime_power(self.q)
            if pk is None:
                raise ValueError(f"standard scaling needs a prime power modulus, got q={self.q}")
            object.__setattr__(self, "lam", Fraction(euler_phi(self.q), pk[0]))
        elif self.kind == CUSTOM:
            if self.lam is None or Fraction(self.lam) <= 0:
                raise ValueError("custom scaling needs a positive lambda")
            object.__setattr__(self, "lam", Fraction(self.lam))
        else:
            raise ValueError(f"unknown scaling kind {self.kind!r}")

    @classmethod
    def honold(cls, q: int) -> WeightScaling:
        return cls(HONOLD, q)

    @classmethod
    def standard(cls, q: int) -> WeightScaling:
        return cls(STANDARD, q)

    @classmethod
    def custom(cls, q: int, lam) -> WeightScaling:
        return cls(CUSTOM, q, Fraction(lam))

    @classmethod
    def parse(cls, text: str, q: int) -> WeightScaling:
        """Parse ``honold``, ``standard`` or ``custom:NUM/DEN``."""
        if text.startswith(CUSTOM + ":"):
            return cls.custom(q, Fraction(text.split(":", 1)[1]))
        return cls(text, q)

    def label(self) -> str:
        if self.kind == CUSTOM:
            return f"custom:{self.lam}"
        return self.kind

    @cached_property
    def divisor(self) -> int:
        """Integer table = (phi(q) - c_q(x)) / divisor."""
        return prime_power(self.q)[0] if self.kind == STANDARD else 1

    @cached_property
    def factor(self) -> Fraction:
        """Rational multiplier taking table units to actual weights."""
        if self.kind == CUSTOM:
            return self.lam / euler_phi(self.q)
        return Fraction(1)

    @cached_property
    def table(self) -> np.ndarray:
        """Read-only per-symbol integer weights in table units."""
        phi = euler_phi(self.q)
        t = np.array([(phi - c) // self.divisor for c in ramanujan_table(self.q)], dtype=np.int64)
        t.setflags(write=False)
        return t

    def scale(self, units) -> Fraction:
        return Fraction(int(units)) * self.factor


def symbol_weight(x: int, s: WeightScaling) -> Fraction:
    if not 0 <= x < s.q:
        raise ValueError(f"symbol {x} out of range for q={s.q}")
    return s.scale(s.table[x])


def _as_array(v, q: int) -> np.ndarray:
    a = np.asarray(v, dtype=np.int64)
    if a.ndim != 1:
        raise ValueError("expected a 1-d vector")
    if a.size and (a.min() < 0 or a.max() >= q):
        raise ValueError(f"symbols must lie in [0, {q})")
    return a


def vector_weight(v: Sequence[int], s: WeightScaling) -> Fraction:
    a = _as_array(v, s.q)
    return s.scale(s.table[a].sum())


def distance(u: Sequence[int], v: Sequence[int], s: WeightScaling) -> Fraction:
    a, b = _as_array(u, s.q), _as_array(v, s.q)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    return s.scale(s.table[(a - b) % s.q].sum())


def hermitian_product(v: Sequence[int], w: Sequence[int], q: int) -> CycloElem:
    """<v, w> = sum_k zeta^(v_k - w_k) for vectors given in log form."""
    return CycloElem.from_exponents(q, (np.asarray(v) - np.asarray(w)) % q)


@dataclass(frozen=True)
class Lemma2Check:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def lemma2_check(v: Sequence[int], w: Sequence[int], q: int) -> Lemma2Check:
    """Both sides of d(v, w) = n*phi(q) - T(<v, w>), Honold scaling."""
    a, b = _as_array(v, q), _as_array(w, q)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    s = WeightScaling.honold(q)
    lhs = int(s.table[(a - b) % q].sum())
    rhs = a.size * euler_phi(q) - trace_T(hermitian_product(a, b, q))
    return Lemma2Check(lhs, rhs)

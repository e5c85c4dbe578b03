"""Exact arithmetic in the cyclotomic integers Z[zeta_q].

Elements are stored as coefficient profiles over the q powers of zeta_q.
The representation is not canonical; reduction modulo the q-th cyclotomic
polynomial only happens when an element is compared against zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of ``m`` by trial division."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def is_prime(m: int) -> bool:
    return m >= 2 and factorize(m) == {m: 1}


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


@lru_cache(maxsize=None)
def euler_phi(q: int) -> int:
    result = q
    for p in factorize(q):
        result = result // p * (p - 1)
    return result


def mobius(m: int) -> int:
    f = factorize(m)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists in ascending degree


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Exact division by a monic integer polynomial ``b``."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [0], _trim(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    return _trim(quot), _trim(rem[:db] or [0])


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the q-th cyclotomic polynomial.

    Built recursively as (x^q - 1) divided by the product of Phi_d over the
    proper divisors d of q.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    num = [-1] + [0] * (q - 1) + [1]
    den = [1]
    for d in divisors(q)[:-1]:
        den = poly_mul(den, list(cyclotomic_poly(d)))
    quot, rem = poly_divmod(num, den)
    assert rem == [0]
    return tuple(quot)


@lru_cache(maxsize=None)
def reduction_matrix(q: int) -> np.ndarray:
    """Row i holds the coefficients of x^i mod Phi_q (length phi(q)).

    Reduction is linear, so ``coeffs @ reduction_matrix(q)`` reduces a whole
    batch of coefficient profiles at once.
    """
    phi = list(cyclotomic_poly(q))
    deg = len(phi) - 1
    rows = []
    for i in range(q):
        mono = [0] * i + [1]
        _, rem = poly_divmod(mono, phi)
        rows.append(rem + [0] * (deg - len(rem)))
    mat = np.array(rows, dtype=np.int64)
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def ramanujan_sum(q: int, x: int) -> int:
    """c_q(x), the sum of zeta_q^(a x) over units a, in closed form."""
    g = gcd(x % q, q)
    m = q // g
    return mobius(m) * euler_phi(q) // euler_phi(m)


@lru_cache(maxsize=None)
def ramanujan_table(q: int) -> tuple[int, ...]:
    return tuple(ramanujan_sum(q, x) for x in range(q))


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CycloElem:
    """Sum of c_i * zeta_q^i for i in range(q)."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if len(self.coeffs) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, q: int, c: int) -> CycloElem:
        return cls(q, (c,) + (0,) * (q - 1))

    @classmethod
    def root(cls, q: int, k: int = 1, c: int = 1) -> CycloElem:
        """``c * zeta_q^k``."""
        coeffs = [0] * q
        coeffs[k % q] = c
        return cls(q, tuple(coeffs))

    @classmethod
    def from_exponents(cls, q: int, exponents) -> CycloElem:
        """Sum of zeta_q^e over the given exponents (a histogram)."""
        coeffs = [0] * q
        for e in exponents:
            coeffs[int(e) % q] += 1
        return cls(q, tuple(coeffs))

    def _check(self, other: CycloElem):
        if not isinstance(other, CycloElem):
            return NotImplemented
        if other.q != self.q:
            raise ValueError(f"modulus mismatch: {self.q} vs {other.q}")

    def __add__(self, other: CycloElem) -> CycloElem:
        self._check(other)
        return CycloElem(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycloElem:
        return CycloElem(self.q, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycloElem) -> CycloElem:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.q, tuple(other * a for a in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem) or other.q != self.q:
            return NotImplemented
        return is_zero(self - other)

    __hash__ = None  # equality is up to reduction, no canonical hash

    def reduced(self) -> tuple[int, ...]:
        """Canonical coefficients modulo Phi_q (degree < phi(q))."""
        _, rem = poly_divmod(list(self.coeffs), list(cyclotomic_poly(self.q)))
        deg = euler_phi(self.q)
        return tuple(rem + [0] * (deg - len(rem)))

    def constant_value(self) -> int | None:
        """The integer this element equals, or None if it is not rational."""
        r = self.reduced()
        if any(r[1:]):
            return None
        return r[0]

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi * np.arange(self.q) / self.q)
        return complex(np.dot(np.array(self.coeffs, dtype=float), z))


def is_zero(z: CycloElem) -> bool:
    return not any(z.reduced())


def mul(a: CycloElem, b: CycloElem) -> CycloElem:
    if a.q != b.q:
        raise ValueError(f"modulus mismatch: {a.q} vs {b.q}")
    q = a.q
    out = [0] * q
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[(i + j) % q] += x * y
    return CycloElem(q, tuple(out))


def conj(z: CycloElem) -> CycloElem:
    q = z.q
    out = [0] * q
    for i, c in enumerate(z.coeffs):
        out[-i % q] = c
    return CycloElem(q, tuple(out))


def norm_sq(z: CycloElem) -> CycloElem:
    return mul(z, conj(z))


def trace_T(z: CycloElem) -> int:
    """Trace down to Q: the linear map sending zeta_q^i to c_q(i)."""
    table = ramanujan_table(z.q)
    return sum(c * t for c, t in zip(z.coeffs, table))

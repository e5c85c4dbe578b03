"""Bent, self-dual bent and conjugate self-dual bent vectors of a BH matrix.

A candidate x (log form) is bent for M when every entry of Hx has squared
modulus n. Everything is decided in Z[zeta_q]; the batched search filter
works on the same integer reductions, and every hit is re-checked and
classified one vector at a time with :class:`~butson.cyclo.CycloElem`.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

import numpy as np

from .bhcode import DEFAULT_BUDGET, BudgetExceeded, _decode, _run
from .bhmatrix import LogMatrix
from .cyclo import CycloElem, norm_sq, reduction_matrix

BENT = "Bent"
SELF_DUAL = "SelfDual"
CONJ_SELF_DUAL = "ConjugateSelfDual"
NOT_BENT = "NotBent"

MODES = ("any", "self_dual", "conj_self_dual")

_BLOCK_CELLS = 1 << 22


@dataclass(frozen=True)
class BentClass:
    kind: str
    lambda_log: int | None = None
    self_dual: bool = False
    conj_self_dual: bool = False

    @property
    def is_bent(self) -> bool:
        return self.kind != NOT_BENT


def _lambda_log(common: CycloElem, n: int) -> int | None:
    # common value is sqrt(n) * lambda; only recoverable exactly when sqrt(n) is an integer
    r = isqrt(n)
    if r * r != n:
        return None
    for t in range(common.q):
        if common == CycloElem.root(common.q, t, r):
            return t
    return None


def _all_equal(values: list[CycloElem]) -> bool:
    return all(v == values[0] for v in values[1:])


def is_bent(m: LogMatrix, x: Sequence[int]) -> BentClass:
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (m.n,):
        raise ValueError(f"expected a vector of length {m.n}, got shape {x.shape}")
    if x.size and (x.min() < 0 or x.max() >= m.q):
        raise ValueError(f"symbols must lie in [0, {m.q})")
    q, n = m.q, m.n
    target = CycloElem.constant(q, n)
    z = [CycloElem.from_exponents(q, m.entries[i] + x) for i in range(n)]
    if not all(norm_sq(zi) == target for zi in z):
        return BentClass(NOT_BENT)

    # y = lam * x  <=>  z_i * zeta^(-x_i) constant; y = lam * conj(x) likewise with +x_i
    sd = [zi * CycloElem.root(q, -int(x[i])) for i, zi in enumerate(z)]
    csd = [zi * CycloElem.root(q, int(x[i])) for i, zi in enumerate(z)]
    self_dual = _all_equal(sd)
    conj_self_dual = _all_equal(csd)
    if self_dual:
        return BentClass(SELF_DUAL, _lambda_log(sd[0], n), True, conj_self_dual)
    if conj_self_dual:
        return BentClass(CONJ_SELF_DUAL, _lambda_log(csd[0], n), False, True)
    return BentClass(BENT)


def _bent_mask(m: LogMatrix, x: np.ndarray) -> np.ndarray:
    """Batched exact test of |(Hx)_i|^2 == n for every row i."""
    q, n = m.q, m.n
    s = (m.entries[None, :, :] + x[:, None, :]) % q
    hist = (s[..., None] == np.arange(q)).sum(axis=2, dtype=np.int64)
    # coefficient d of z * conj(z) is sum_r h_r h_(r-d)
    auto = np.stack([(hist * np.roll(hist, d, axis=-1)).sum(axis=-1) for d in range(q)], axis=-1)
    auto[..., 0] -= n
    red = auto @ reduction_matrix(q)
    return ~red.any(axis=(1, 2))


def _wanted(cls: BentClass, mode: str) -> bool:
    if mode == "self_dual":
        return cls.self_dual
    if mode == "conj_self_dual":
        return cls.conj_self_dual
    return cls.is_bent


@dataclass(frozen=True)
class BentReport:
    matrix_id: str
    mode: str
    found: list[tuple[tuple[int, ...], BentClass]]
    searched: int
    exhaustive: bool
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "exhaustive": self.exhaustive,
            "found": [
                {"class": c.kind, "lambda_log": c.lambda_log, "vector": list(v)}
                for v, c in self.found
            ],
            "matrix": self.matrix_id,
            "mode": self.mode,
            "searched": self.searched,
        }


def find_bent(
    m: LogMatrix,
    mode: str = "any",
    limit: int | None = None,
    *,
    matrix_id: str = "",
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    use_symmetry: bool = True,
) -> BentReport:
    """Scan candidate vectors in odometer order and collect bent hits.

    Global phase x -> x + t*1 preserves bentness and both dualities, so by
    default only vectors with first symbol 0 are scanned.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")
    t0 = time.perf_counter()
    q, n = m.q, m.n
    space = q ** (n - 1) if use_symmetry else q**n
    if space * n * n > budget:
        raise BudgetExceeded(space * n * n, budget)

    step = max(1, _BLOCK_CELLS // (n * n * q))
    ranges = [(lo, min(lo + step, space)) for lo in range(0, space, step)]

    def scan(r):
        idx = np.arange(r[0], r[1], dtype=np.int64)
        x = _decode(idx, q, n)
        hits = []
        for k in np.flatnonzero(_bent_mask(m, x)):
            vec = tuple(int(v) for v in x[k])
            cls = is_bent(m, vec)
            if not cls.is_bent:
                raise AssertionError(f"batched filter and exact check disagree on {vec}")
            if _wanted(cls, mode):
                hits.append((r[0] + int(k), vec, cls))
        return hits

    found = []
    searched = space
    for hits in _run(ranges, scan, workers):
        found.extend(hits)
        if limit is not None and len(found) >= limit:
            found = found[:limit]
            searched = found[-1][0] + 1
            break
    return BentReport(
        matrix_id=matrix_id,
        mode=mode,
        found=[(v, c) for _, v, c in found],
        searched=searched,
        exhaustive=searched == space,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )

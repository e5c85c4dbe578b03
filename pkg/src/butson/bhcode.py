"""BH-codes: construction, orthogonal-array strength, moments, covering radius."""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .bhmatrix import LogMatrix, ParseError, _data_lines, parse_header, parse_rows
from .cyclo import is_prime
from .homweight import WeightScaling

DEFAULT_BUDGET = 2**28
# target number of int64 cells in one candidates x codewords distance block
_BLOCK_CELLS = 1 << 20


class BudgetExceeded(RuntimeError):
    """The requested exhaustive search is larger than the work budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"search needs {needed} evaluations, budget is {budget}")
        self.needed = needed
        self.budget = budget


class Code:
    """A set of words of length n over Z_q, stored lexicographically sorted."""

    def __init__(self, q: int, words, n: int | None = None):
        a = np.asarray(words, dtype=np.int64)
        if a.size == 0:
            if n is None:
                raise ValueError("length of an empty code must be given")
            a = a.reshape(0, n)
        if a.ndim != 2:
            raise ValueError("words must form a 2-d array")
        if n is not None and a.shape[1] != n:
            raise ValueError(f"expected words of length {n}, got {a.shape[1]}")
        if q < 2:
            raise ValueError(f"q must be >= 2, got {q}")
        if a.size and (a.min() < 0 or a.max() >= q):
            raise ValueError(f"symbols must lie in [0, {q})")
        if len(a):
            a = np.unique(a, axis=0)
        a.setflags(write=False)
        self.q = q
        self.n = a.shape[1]
        self.words = a

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return (tuple(int(v) for v in w) for w in self.words)

    def __contains__(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)
        return bool((self.words == w).all(axis=1).any())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.q == other.q and self.n == other.n and np.array_equal(self.words, other.words)

    def __repr__(self):
        return f"Code(q={self.q}, n={self.n}, size={len(self)})"

    @classmethod
    def full_space(cls, q: int, n: int) -> Code:
        return cls(q, _decode(np.arange(q**n), q, n))


def row_code(m: LogMatrix) -> Code:
    return Code(m.q, m.entries)


def bh_code(m: LogMatrix) -> Code:
    """Rows of the log matrix together with all their constant shifts."""
    shifts = np.arange(m.q)[:, None, None]
    return Code(m.q, ((m.entries[None, :, :] + shifts) % m.q).reshape(-1, m.n))


def is_self_complementary(c: Code) -> bool:
    words = {w for w in c}
    return all(tuple((x + a) % c.q for x in w) in words for w in words for a in range(1, c.q))


def strength(c: Code, s: int) -> bool:
    """True if every s columns show each of the q^s patterns equally often."""
    if not 1 <= s <= c.n:
        raise ValueError(f"strength must lie in [1, {c.n}], got {s}")
    total = c.q**s
    if len(c) == 0 or len(c) % total:
        return False
    expected = len(c) // total
    place = c.q ** np.arange(s)
    for cols in combinations(range(c.n), s):
        keys = c.words[:, cols] @ place
        counts = np.bincount(keys, minlength=total)
        if (counts != expected).any():
            return False
    return True


def max_strength(c: Code) -> int:
    t = 0
    while t < c.n and strength(c, t + 1):
        t += 1
    return t


@dataclass(frozen=True)
class MomentCheck:
    sum: Fraction
    predicted: Fraction | None

    @property
    def holds(self) -> bool | None:
        return None if self.predicted is None else self.sum == self.predicted


def _coset_table_sums(c: Code, v, table: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (c.n,):
        raise ValueError(f"expected a vector of length {c.n}")
    return table[(c.words + v) % c.q].sum(axis=1)


def first_moment(c: Code, v: Sequence[int], s: WeightScaling) -> MomentCheck:
    """Total weight over the coset v + C, and n*lam*|C| when C has strength 1."""
    if s.q != c.q:
        raise ValueError(f"scaling is for q={s.q}, code is over q={c.q}")
    total = s.scale(_coset_table_sums(c, v, s.table).sum())
    predicted = c.n * s.lam * len(c) if strength(c, 1) else None
    return MomentCheck(total, predicted)


def second_moment(c: Code, v: Sequence[int]) -> MomentCheck:
    """Sum of squared Honold weights over v + C against n^2(p-1)((p-1)|C|+p).

    The closed form is only claimed for the Kronecker-of-Fourier codes; for
    other codes both numbers are returned for the caller to judge.
    """
    p = c.q
    if not is_prime(p):
        raise ValueError(f"second moment identity needs a prime modulus, got q={p}")
    w = _coset_table_sums(c, v, WeightScaling.honold(p).table)
    total = int((w * w).sum())
    predicted = c.n**2 * (p - 1) * ((p - 1) * len(c) + p)
    return MomentCheck(Fraction(total), Fraction(predicted))


# ---------------------------------------------------------------------------
# covering radius


@dataclass(frozen=True)
class RadiusReport:
    radius: Fraction
    deep_hole: tuple[int, ...]
    method: str
    scaling: str
    searched: int
    samples: int | None = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "deep_hole": list(self.deep_hole),
            "method": self.method,
            "radius": self.radius,
            "samples": self.samples,
            "scaling": self.scaling,
            "searched": self.searched,
        }


def _decode(idx: np.ndarray, q: int, n: int) -> np.ndarray:
    """Odometer order: index -> vector, last coordinate fastest."""
    place = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // place) % q


def _coordinate_tables(c: Code, table: np.ndarray) -> np.ndarray:
    # tabs[i, x, j] = weight of (x - c_j[i])
    x = np.arange(c.q)
    return table[(x[None, :, None] - c.words.T[:, None, :]) % c.q]


def _min_distances(x: np.ndarray, tabs: np.ndarray) -> np.ndarray:
    acc = tabs[0][x[:, 0]].copy()
    for i in range(1, x.shape[1]):
        acc += tabs[i][x[:, i]]
    return acc.min(axis=1)


def _block_size(c: Code) -> int:
    return max(1, _BLOCK_CELLS // max(1, len(c)))


def _run(tasks, fn, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _check_search(c: Code, s: WeightScaling):
    if len(c) == 0:
        raise ValueError("covering radius of an empty code is undefined")
    if s.q != c.q:
        raise ValueError(f"scaling is for q={s.q}, code is over q={c.q}")


def covering_radius_exact(
    c: Code,
    s: WeightScaling,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    use_symmetry: bool = True,
) -> RadiusReport:
    """Exhaustive max-min distance over Z_q^n.

    For self-complementary codes only vectors with first symbol 0 are
    scanned; d(x + a1, C) = d(x, C) makes this lossless. The deep hole is the
    lexicographically smallest maximizer, independent of ``workers``.
    """
    _check_search(c, s)
    t0 = time.perf_counter()
    q, n = c.q, c.n
    reduced = use_symmetry and is_self_complementary(c)
    space = q ** (n - 1) if reduced else q**n
    needed = space * len(c)
    if needed > budget:
        raise BudgetExceeded(needed, budget)

    tabs = _coordinate_tables(c, s.table)
    step = _block_size(c)
    ranges = [(lo, min(lo + step, space)) for lo in range(0, space, step)]

    def scan(r):
        idx = np.arange(r[0], r[1], dtype=np.int64)
        d = _min_distances(_decode(idx, q, n), tabs)
        k = int(d.argmax())
        return int(d[k]), r[0] + k

    best, best_idx = -1, 0
    for val, idx in _run(ranges, scan, workers):
        if val > best:
            best, best_idx = val, idx
    hole = tuple(int(v) for v in _decode(np.array([best_idx]), q, n)[0])
    return RadiusReport(
        radius=s.scale(best),
        deep_hole=hole,
        method="exact",
        scaling=s.label(),
        searched=space,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )


def covering_radius_sampled(
    c: Code,
    s: WeightScaling,
    samples: int,
    seed: int,
    *,
    workers: int = 1,
) -> RadiusReport:
    """Max over uniformly drawn vectors of the distance to C (a lower bound).

    Samples are drawn in fixed-size blocks from one seeded generator so the
    result does not depend on ``workers``.
    """
    _check_search(c, s)
    if samples < 1:
        raise ValueError("need at least one sample")
    t0 = time.perf_counter()
    q, n = c.q, c.n
    rng = np.random.default_rng(seed)
    step = _block_size(c)
    blocks = []
    left = samples
    while left:
        k = min(step, left)
        blocks.append(rng.integers(0, q, size=(k, n), dtype=np.int64))
        left -= k
    tabs = _coordinate_tables(c, s.table)

    def scan(x):
        d = _min_distances(x, tabs)
        top = int(d.max())
        hits = x[d == top]
        first = hits[np.lexsort(hits.T[::-1])[0]]
        return top, tuple(int(v) for v in first)

    best, hole = -1, ()
    for val, vec in _run(blocks, scan, workers):
        if val > best or (val == best and vec < hole):
            best, hole = val, vec
    return RadiusReport(
        radius=s.scale(best),
        deep_hole=hole,
        method="sampled",
        scaling=s.label(),
        searched=samples,
        samples=samples,
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
    )


# ---------------------------------------------------------------------------
# code files share the matrix header "q n", then one word per line


def loads_code(text: str) -> Code:
    tokens = _data_lines(text.splitlines())
    q, n = parse_header(tokens)
    words = parse_rows(tokens[1:], q, n)
    if len(words) == 0:
        raise ParseError("code file has no words")
    return Code(q, words, n=n)


def dumps_code(c: Code) -> str:
    lines = [f"{c.q} {c.n}"]
    lines += [" ".join(str(v) for v in w) for w in c]
    return "\n".join(lines) + "\n"

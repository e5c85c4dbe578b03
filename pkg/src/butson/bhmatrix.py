"""Butson Hadamard matrices in logarithmic form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .cyclo import CycloElem, is_zero


class ParseError(ValueError):
    """Malformed matrix or code text."""


@dataclass(frozen=True, eq=False)
class LogMatrix:
    """An n x n matrix of exponents mod q; entry e stands for zeta_q^e."""

    q: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64)
        if self.q < 2:
            raise ValueError(f"phase q must be >= 2, got {self.q}")
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
        if a.min() < 0 or a.max() >= self.q:
            raise ValueError(f"entries must lie in [0, {self.q})")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogMatrix):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.q, self.entries.tobytes()))

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in r) for r in self.entries]

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.entries / self.q)

    def __repr__(self):
        return f"LogMatrix(q={self.q}, n={self.n})"


@dataclass(frozen=True)
class BhVerification:
    is_butson: bool
    failing_pair: tuple[int, int] | None = None


def fourier(m: int) -> LogMatrix:
    """Log form of the Fourier matrix F_m, entry (i, j) = i*j mod m (0-based)."""
    if m < 2:
        raise ValueError(f"Fourier order must be >= 2, got {m}")
    i = np.arange(m)
    return LogMatrix(m, np.outer(i, i) % m)


def kronecker(a: LogMatrix, b: LogMatrix) -> LogMatrix:
    if a.q != b.q:
        raise ValueError(f"phase mismatch: {a.q} vs {b.q}")
    # entrywise product of phases is a sum of exponents
    blocks = a.entries[:, None, :, None] + b.entries[None, :, None, :]
    return LogMatrix(a.q, blocks.reshape(a.n * b.n, a.n * b.n) % a.q)


def sylvester(k: int) -> LogMatrix:
    """The 2^k x 2^k Sylvester Hadamard matrix over Z_2."""
    m = LogMatrix(2, [[0]])
    for _ in range(k):
        m = kronecker(m, fourier(2))
    return m


def dephase(m: LogMatrix) -> LogMatrix:
    e = (m.entries - m.entries[0:1, :]) % m.q
    e = (e - e[:, 0:1]) % m.q
    return LogMatrix(m.q, e)


def is_dephased(m: LogMatrix) -> bool:
    return not m.entries[0].any() and not m.entries[:, 0].any()


def is_bh(m: LogMatrix) -> BhVerification:
    """Exact check of H H* = n I via vanishing of every row-pair inner product.

    Stops at the first non-orthogonal pair in lexicographic order.
    """
    e = m.entries
    for i in range(m.n):
        for j in range(i + 1, m.n):
            z = CycloElem.from_exponents(m.q, (e[i] - e[j]) % m.q)
            if not is_zero(z):
                return BhVerification(False, (i, j))
    return BhVerification(True)


# ---------------------------------------------------------------------------
# text format: "q n" header, then rows of space-separated residues


def _data_lines(lines: Iterable[str]) -> list[list[str]]:
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def parse_header(tokens: list[list[str]]) -> tuple[int, int]:
    if not tokens or len(tokens[0]) != 2:
        raise ParseError("expected header line 'q n'")
    try:
        q, n = (int(t) for t in tokens[0])
    except ValueError as exc:
        raise ParseError(f"bad header {tokens[0]!r}") from exc
    if q < 2 or n < 1:
        raise ParseError(f"header out of range: q={q}, n={n}")
    return q, n


def parse_rows(tokens: list[list[str]], q: int, n: int) -> np.ndarray:
    rows = []
    for k, tok in enumerate(tokens, start=2):
        if len(tok) != n:
            raise ParseError(f"row {k}: expected {n} entries, got {len(tok)}")
        try:
            row = [int(t) for t in tok]
        except ValueError as exc:
            raise ParseError(f"row {k}: non-integer entry") from exc
        if any(v < 0 or v >= q for v in row):
            raise ParseError(f"row {k}: entries must lie in [0, {q})")
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def loads_matrix(text: str) -> LogMatrix:
    tokens = _data_lines(text.splitlines())
    q, n = parse_header(tokens)
    if len(tokens) - 1 != n:
        raise ParseError(f"expected {n} rows, got {len(tokens) - 1}")
    return LogMatrix(q, parse_rows(tokens[1:], q, n))


def dumps_matrix(m: LogMatrix) -> str:
    lines = [f"{m.q} {m.n}"]
    lines += [" ".join(str(int(v)) for v in row) for row in m.entries]
    return "\n".join(lines) + "\n"


def read_matrix(fp: TextIO) -> LogMatrix:
    return loads_matrix(fp.read())

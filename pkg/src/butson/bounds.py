"""Covering-radius bounds for BH-codes and a comparison report."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, isqrt

from .bent import find_bent
from .bhcode import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RadiusReport,
    bh_code,
    covering_radius_exact,
    is_self_complementary,
    strength,
)
from .bhmatrix import LogMatrix
from .cyclo import euler_phi, is_prime
from .homweight import CUSTOM, HONOLD, WeightScaling


@dataclass(frozen=True)
class SurdBound:
    """The value lam * (n - sqrt(n)), kept exact.

    ``exact`` is set when n is a perfect square; ``ceil`` is always the exact
    integer ceiling.
    """

    lam: Fraction
    n: int
    exact: Fraction | None
    ceil: int

    def __float__(self) -> float:
        return float(self.lam) * (self.n - self.n**0.5)

    def at_most(self, value) -> bool:
        """Exactly decide lam*(n - sqrt(n)) <= value."""
        return _surd_le(self.lam, self.n, Fraction(value))


def _surd_le(lam: Fraction, n: int, value: Fraction) -> bool:
    # lam*n - value <= lam*sqrt(n); square only when the left side is positive
    t = lam * n - value
    return t <= 0 or t * t <= lam * lam * n


def _ceil_surd(lam: Fraction, n: int) -> int:
    m = floor(float(lam) * (n - n**0.5)) - 2
    while not _surd_le(lam, n, Fraction(m)):
        m += 1
    while _surd_le(lam, n, Fraction(m - 1)):
        m -= 1
    return m


def bent_lower_bound(n: int, q: int, s: WeightScaling) -> SurdBound:
    """lam * (n - sqrt(n)); lam = phi(q) under Honold scaling."""
    if s.q != q:
        raise ValueError(f"scaling is for q={s.q}, got q={q}")
    r = isqrt(n)
    exact = s.lam * (n - r) if r * r == n else None
    return SurdBound(s.lam, n, exact, _ceil_surd(s.lam, n))


def strength1_upper_bound(n: int, q: int, s: WeightScaling) -> Fraction:
    if s.q != q:
        raise ValueError(f"scaling is for q={s.q}, got q={q}")
    return n * s.lam


def _ceil_n_sqrt_ratio(n: int, p: int, size: int) -> int:
    """Smallest m >= 0 with m^2 * size >= p * n^2, i.e. ceil(n*sqrt(p/size))."""
    num = p * n * n
    m = isqrt(num // size)
    while m * m * size < num:
        m += 1
    while m > 0 and (m - 1) ** 2 * size >= num:
        m -= 1
    return m


def norse_upper_bound(n: int, p: int, code_size: int) -> int:
    """n(p-1) - ceil(n*sqrt(p/|C|)), Honold scaling over Z_p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if code_size < 1:
        raise ValueError("code size must be positive")
    return n * (p - 1) - _ceil_n_sqrt_ratio(n, p, code_size)


def norse_upper_bound_literal(n: int, p: int, code_size: int) -> int:
    """n(p-1-ceil(sqrt(p/|C|))), with the ceiling taken inside."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    inner = isqrt(p // code_size) if code_size <= p else 0
    while inner * inner * code_size < p:
        inner += 1
    return n * (p - 1 - inner)


@dataclass
class BoundsReport:
    n: int
    q: int
    code_size: int
    scaling: WeightScaling
    strengths: dict[str, bool]
    self_complementary: bool
    lower_bent: SurdBound
    upper_strength1: Fraction
    upper_norse: Fraction | None = None
    upper_norse_paper_literal: Fraction | None = None
    exact_radius: RadiusReport | None = None
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        lb = self.lower_bent
        out = {
            "code_size": self.code_size,
            "flags": sorted(self.flags),
            "lower_bent": lb.exact if lb.exact is not None else float(lb),
            "lower_bent_ceil": lb.ceil,
            "n": self.n,
            "q": self.q,
            "scaling": self.scaling.label(),
            "self_complementary": self.self_complementary,
            "strengths": {"s1": self.strengths["s1"], "s2": self.strengths["s2"]},
            "upper_norse": self.upper_norse,
            "upper_norse_paper_literal": self.upper_norse_paper_literal,
            "upper_strength1": self.upper_strength1,
        }
        if self.exact_radius is not None:
            out["exact_radius"] = self.exact_radius.radius
        return dict(sorted(out.items()))


def _from_honold(value: int, s: WeightScaling) -> Fraction:
    # Honold weights are phi(q)/lam times the weights of any other scaling
    scaled = Fraction(value) * s.lam / euler_phi(s.q)
    # built-in scalings give integer radii, so the integer part is still a bound
    return scaled if s.kind == CUSTOM else Fraction(floor(scaled))


def bounds_report(
    m: LogMatrix,
    s: WeightScaling,
    with_exact: bool = False,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    check_bent: bool = True,
) -> BoundsReport:
    """Evaluate every applicable bound for bh_code(m), optionally against the exact radius.

    Raises AssertionError if all hypotheses were verified and the exact radius
    falls outside the bounds.
    """
    code = bh_code(m)
    q, n = m.q, m.n
    s1 = strength(code, 1)
    s2 = n >= 2 and strength(code, 2)
    sc = is_self_complementary(code)
    flags = []

    bent_found = False
    if check_bent:
        try:
            bent_found = bool(find_bent(m, "any", limit=1, budget=budget, workers=workers).found)
            if not bent_found:
                flags.append("no-bent-vector")
        except BudgetExceeded:
            flags.append("bent-hypothesis-unverified")
    else:
        flags.append("bent-hypothesis-unverified")
    if not s1:
        flags.append("strength1-fails")

    report = BoundsReport(
        n=n,
        q=q,
        code_size=len(code),
        scaling=s,
        strengths={"s1": s1, "s2": bool(s2)},
        self_complementary=sc,
        lower_bent=bent_lower_bound(n, q, s),
        upper_strength1=strength1_upper_bound(n, q, s),
        flags=flags,
    )
    if not is_prime(q):
        flags.append("norse-requires-prime")
    elif not (sc and s2):
        flags.append("norse-hypothesis-fails")
    else:
        u = norse_upper_bound(n, q, len(code))
        lit = norse_upper_bound_literal(n, q, len(code))
        report.upper_norse = _from_honold(u, s)
        report.upper_norse_paper_literal = _from_honold(lit, s)
        if s.kind != HONOLD:
            flags.append("norse-rescaled-from-honold")

    if with_exact:
        rr = covering_radius_exact(code, s, budget=budget, workers=workers)
        report.exact_radius = rr
        r = rr.radius
        if bent_found:
            assert report.lower_bent.at_most(r), "bent lower bound violated"
        if s1:
            assert r <= report.upper_strength1, "strength-1 bound violated"
        if report.upper_norse is not None:
            assert r <= report.upper_norse, "norse bound violated"
            if r > report.upper_norse_paper_literal:
                flags.append("paper-literal-norse-exceeded")
        flags.append("sandwich-verified")
    return report

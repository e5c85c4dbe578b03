"""Recompute the small-prime BH-code table: Norse bounds and exact radii."""
from __future__ import annotations

from .bhcode import BudgetExceeded, bh_code, covering_radius_exact, covering_radius_sampled
from .bhmatrix import fourier, kronecker
from .bounds import bent_lower_bound, norse_upper_bound, norse_upper_bound_literal
from .homweight import WeightScaling

# (p, n, printed radius or None, printed upper bound)
PRINTED = [
    (2, 4, 1, 2),
    (3, 3, 2, 4),
    (3, 9, 10, 15),
    (5, 5, 12, 17),
    (5, 25, None, 95),
]

TABLE_BUDGET = 2**24


def table_matrix(p: int, n: int):
    f = fourier(p)
    if n == p:
        return f
    if n == p * p:
        return kronecker(f, f)
    raise ValueError(f"no construction for p={p}, n={n}")


def table1_rows(*, samples: int = 2000, seed: int = 0, workers: int = 1, budget: int = TABLE_BUDGET) -> list[dict]:
    rows = []
    for p, n, paper_radius, paper_upper in PRINTED:
        code = bh_code(table_matrix(p, n))
        upper = norse_upper_bound(n, p, len(code))
        row = {
            "code_size": len(code),
            "flags": [],
            "lower_bent_ceil_honold": bent_lower_bound(n, p, WeightScaling.honold(p)).ceil,
            "n": n,
            "p": p,
            "paper_radius": paper_radius,
            "paper_upper": paper_upper,
            "upper_agrees": upper == paper_upper,
            "upper_norse": upper,
            "upper_norse_paper_literal": norse_upper_bound_literal(n, p, len(code)),
        }
        for kind in ("honold", "standard"):
            s = WeightScaling(kind, p)
            try:
                rr = covering_radius_exact(code, s, budget=budget, workers=workers)
                row[f"radius_{kind}"] = rr.radius
                row[f"deep_hole_{kind}"] = list(rr.deep_hole)
                if paper_radius is not None and rr.radius != paper_radius:
                    row["flags"].append(f"paper-radius-mismatch-{kind}")
            except BudgetExceeded:
                rr = covering_radius_sampled(code, s, samples, seed, workers=workers)
                row[f"radius_{kind}"] = "skipped (budget)"
                row[f"sampled_lower_{kind}"] = rr.radius
        if not row["upper_agrees"]:
            row["flags"].append("paper-upper-mismatch")
        rows.append(row)
    return rows

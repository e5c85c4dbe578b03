"""Command-line interface: ``butson <command> ...``.

Exit codes: 0 success or passing verdict, 1 failing verdict, 2 usage,
3 parse error, 4 work budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .bent import MODES, find_bent
from .bhcode import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Code,
    bh_code,
    covering_radius_exact,
    covering_radius_sampled,
    dumps_code,
    loads_code,
    max_strength,
    strength,
)
from .bhmatrix import LogMatrix, ParseError, dumps_matrix, fourier, is_bh, kronecker, loads_matrix, sylvester
from .bounds import bounds_report
from .homweight import WeightScaling
from .table1 import table1_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3, 4


def _plain(obj):
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {k: _plain(obj[k]) for k in sorted(obj)}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def to_json(payload: dict, elapsed_ms: float | None = None) -> str:
    """Keys sorted at every level; elapsed_ms, when given, goes last."""
    out = _plain(payload)
    if elapsed_ms is not None:
        out["elapsed_ms"] = round(elapsed_ms, 3)
    return json.dumps(out)


def to_tsv(payload: dict) -> str:
    return "\n".join(f"{k}\t{json.dumps(v)}" for k, v in _plain(payload).items())


class Cli:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.t0 = time.perf_counter()

    def emit(self, payload: dict):
        a = self.args
        payload = dict(payload)
        for key in ("seed", "workers"):
            if hasattr(a, key):
                payload[key] = getattr(a, key)
        if getattr(a, "format", "json") == "tsv":
            text = to_tsv(payload)
        else:
            text = to_json(payload, (time.perf_counter() - self.t0) * 1e3)
        self.write(text + "\n")

    def write(self, text: str):
        out = getattr(self.args, "out", None)
        if out:
            Path(out).write_text(text)
        else:
            sys.stdout.write(text)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_matrix(path: str) -> LogMatrix:
    return loads_matrix(_read_text(path))


def _load_code(path: str, kind: str) -> Code:
    if kind == "matrix":
        return bh_code(_load_matrix(path))
    return loads_code(_read_text(path))


def _scaling(text: str, q: int) -> WeightScaling:
    try:
        return WeightScaling.parse(text, q)
    except (ValueError, ZeroDivisionError) as exc:
        raise _Usage(str(exc)) from exc


class _Usage(Exception):
    pass


# ---------------------------------------------------------------------------


def cmd_gen(cli: Cli):
    a = cli.args
    p = a.params
    try:
        if a.kind == "fourier" and len(p) == 1:
            text = dumps_matrix(fourier(int(p[0])))
        elif a.kind == "sylvester" and len(p) == 1:
            text = dumps_matrix(sylvester(int(p[0])))
        elif a.kind == "kron" and len(p) == 2:
            text = dumps_matrix(kronecker(_load_matrix(p[0]), _load_matrix(p[1])))
        elif a.kind == "code" and len(p) == 1:
            text = dumps_code(bh_code(_load_matrix(p[0])))
        else:
            raise _Usage(f"bad parameters for 'gen {a.kind}': {p}")
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise _Usage(str(exc)) from exc
    cli.write(text)
    return EXIT_OK


def cmd_verify(cli: Cli):
    m = _load_matrix(cli.args.file)
    v = is_bh(m)
    cli.emit({"failing_pair": v.failing_pair, "is_butson": v.is_butson, "n": m.n, "q": m.q})
    return EXIT_OK if v.is_butson else EXIT_FAIL


def cmd_radius(cli: Cli):
    a = cli.args
    code = _load_code(a.file, a.input)
    s = _scaling(a.scaling, code.q)
    if a.method == "exact":
        rr = covering_radius_exact(code, s, budget=a.budget, workers=a.workers)
    else:
        rr = covering_radius_sampled(code, s, a.samples, a.seed, workers=a.workers)
    cli.emit(rr.to_dict())
    return EXIT_OK


def cmd_bent(cli: Cli):
    a = cli.args
    m = _load_matrix(a.file)
    rep = find_bent(
        m, a.mode, a.limit, matrix_id=Path(a.file).name, budget=a.budget, workers=a.workers,
        use_symmetry=not a.full_space,
    )
    cli.emit(rep.to_dict())
    return EXIT_OK


def cmd_strength(cli: Cli):
    a = cli.args
    code = _load_code(a.file, a.input)
    if not 1 <= a.s <= code.n:
        raise _Usage(f"--s must lie in [1, {code.n}]")
    ok = strength(code, a.s)
    cli.emit({"max_strength": max_strength(code), "n": code.n, "q": code.q, "s": a.s,
              "size": len(code), "strength": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(cli: Cli):
    a = cli.args
    m = _load_matrix(a.file)
    s = _scaling(a.scaling, m.q)
    rep = bounds_report(m, s, a.with_exact, budget=a.budget, workers=a.workers)
    cli.emit(rep.to_dict())
    return EXIT_OK


def cmd_table1(cli: Cli):
    a = cli.args
    rows = table1_rows(samples=a.samples, seed=a.seed, workers=a.workers)
    if a.format == "tsv":
        cols = sorted({k for r in rows for k in r})
        lines = ["\t".join(cols)]
        for r in rows:
            cells = [r.get(c) for c in cols]
            lines.append("\t".join(v if isinstance(v, str) else json.dumps(_plain(v)) for v in cells))
        cli.write("\n".join(lines) + "\n")
    else:
        cli.emit({"rows": rows})
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="butson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, search=True):
        p.add_argument("--out", help="write output to PATH instead of stdout")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        if search:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--workers", type=int, default=1)
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    g = sub.add_parser("gen", help="write a matrix (fourier M | sylvester K | kron A B) or a BH-code (code MATRIX)")
    g.add_argument("kind", choices=("fourier", "kron", "sylvester", "code"))
    g.add_argument("params", nargs="+")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="exact Butson Hadamard check")
    v.add_argument("file")
    common(v, search=False)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radius", help="covering radius of a BH-code or code file")
    r.add_argument("file")
    r.add_argument("--input", choices=("matrix", "code"), default="matrix")
    r.add_argument("--scaling", required=True, help="honold | standard | custom:NUM/DEN")
    r.add_argument("--method", choices=("exact", "sample"), default="exact")
    r.add_argument("--samples", type=int, default=10000)
    common(r)
    r.set_defaults(func=cmd_radius)

    b = sub.add_parser("bent", help="exhaustive bent vector search")
    b.add_argument("file")
    b.add_argument("--mode", choices=MODES, default="any")
    b.add_argument("--limit", type=int)
    b.add_argument("--full-space", action="store_true", help="do not fix the first symbol")
    common(b)
    b.set_defaults(func=cmd_bent)

    st = sub.add_parser("strength", help="orthogonal-array strength check")
    st.add_argument("file")
    st.add_argument("--s", type=int, required=True)
    st.add_argument("--input", choices=("matrix", "code"), default="code")
    common(st, search=False)
    st.set_defaults(func=cmd_strength)

    bd = sub.add_parser("bounds", help="covering radius bounds for a BH matrix")
    bd.add_argument("file")
    bd.add_argument("--scaling", required=True, help="honold | standard | custom:NUM/DEN")
    bd.add_argument("--with-exact", action="store_true")
    common(bd)
    bd.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table1", help="recompute the small-prime radius/bound table")
    t.add_argument("--samples", type=int, default=2000)
    common(t)
    t.set_defaults(func=cmd_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cli = Cli(args)
    try:
        return args.func(cli)
    except ParseError as exc:
        sys.stderr.write(to_json({"error": "parse", "message": str(exc)}) + "\n")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        cli.emit({"error": "budget", "budget": exc.budget, "needed": exc.needed})
        return EXIT_BUDGET
    except _Usage as exc:
        sys.stderr.write(to_json({"error": "usage", "message": str(exc)}) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    orblab character --seed e8cubed --nmax 5
    orblab bn --group GL:2:2 --seed unit1 --nmax 4
    orblab fn --group S:6 --nmax 4
    orblab oligo --group GL:1:2 --Nmax 5 --nmax 4
    orblab constants --group S:3 --seed heis:2 --nmax 2 --format json
    orblab limit --group S:1 --seed unit1 --nmax 2
    orblab jacobi --seed heis:2 --nmax 2
    orblab twisted --group GL:3:2 --c 24
    orblab figure1 --seed e8cubed --group GL:4:2 --nmax 4

Exit status: 0 ok, 2 validation failure (witness on stderr), 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import scalar
from .errors import BudgetExceeded, ValidationError
from .groups import PermGroupHandle, cycle_index, parse_group_spec
from .orbits import bn_table, fn_table, oligomorphic_check
from .series import (
    TruncatedSeries,
    cycle_index_character,
    e8cubed_character,
    sym_limit_character,
)
from .structure import (
    builtin_seed,
    fixed_point_table,
    freeness_report,
    jacobi_check,
    limit_table,
    load_seed,
)
from .twisted import min_twisted_weight

COMMANDS = ("character", "bn", "fn", "oligo", "constants", "limit", "jacobi", "twisted", "figure1")
N_MAX_GUARD = 64


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    seed: str | None = None  # default: e8cubed for figure1, unit1 otherwise
    n_max: int = 4
    N_max: int | None = None
    c: Fraction = Fraction(24)
    budget: int | None = None
    precision: int = 113
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.seed is None:
            self.seed = "e8cubed" if self.command == "figure1" else "unit1"
        if not 0 <= self.n_max <= N_MAX_GUARD:
            raise ValidationError(f"--nmax must be in 0..{N_MAX_GUARD}")
        if self.budget is not None and self.budget <= 0:
            raise ValidationError("--budget must be positive")
        if self.format not in ("csv", "json"):
            raise ValidationError("--format is csv or json")


# --- seeds ---------------------------------------------------------------------


def resolve_seed(name, order):
    """(character to ``order``, constant table or None) for a seed name or file."""
    if name == "e8cubed":
        return e8cubed_character(order), None
    try:
        if name.startswith("series:"):
            coeffs = [int(x) for x in name.split(":", 1)[1].split(",")]
            return TruncatedSeries.from_coeffs(coeffs, order), None
        if os.path.exists(name):
            with open(name) as fh:
                table = load_seed(fh.read())
        else:
            table = builtin_seed(name)
    except ValueError as exc:
        raise ValidationError(f"bad seed {name!r}: {exc}", witness=name) from None
    # the label set is finite, so its character is exact to any order
    counts = [0] * (order + 1)
    for w in table.labels.values():
        if w <= order:
            counts[w] += 1
    return TruncatedSeries.from_coeffs(counts, order), table


def _need_table(cfg, table):
    if table is None:
        raise ValidationError(f"seed {cfg.seed!r} has no structure-constant table")
    return table


def _group(cfg):
    if not cfg.group:
        raise ValidationError("--group is required for this command")
    try:
        return parse_group_spec(cfg.group)
    except ValueError as exc:
        raise ValidationError(str(exc), witness=cfg.group) from None


def _family(cfg):
    G = _group(cfg)
    N_max = cfg.N_max if cfg.N_max is not None else G.N
    return [G.with_N(N) for N in range(G.N, N_max + 1)]


# --- output --------------------------------------------------------------------


def _emit(cfg, header, rows, doc, notes=()):
    if cfg.format == "json":
        text = json.dumps(doc, indent=1, default=str) + "\n"
    else:
        buf = io.StringIO()
        for note in notes:
            buf.write(f"# {note}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ------------------------------------------------------------------


def cmd_character(cfg):
    a, _ = resolve_seed(cfg.seed, cfg.n_max)
    series, group = a, None
    if cfg.group:
        G = _group(cfg)
        series = cycle_index_character(cycle_index(G, cfg.budget), a, cfg.n_max)
        group = G.spec
    doc = series.to_json() | {"seed": cfg.seed, "group": group}
    rows = [(n, str(c)) for n, c in enumerate(series.coeffs)]
    _emit(cfg, ["n", "coeff"], rows, doc)


def _table_output(cfg, tables):
    records = [r for t in tables for r in t.as_records()]
    header = ["family", "seed", "n", "N", "count", "kind"]
    rows = [[r[k] for k in header] for r in records]
    _emit(cfg, header, rows, [t.to_json() for t in tables])


def cmd_bn(cfg):
    a, _ = resolve_seed(cfg.seed, cfg.n_max)
    _table_output(cfg, [bn_table(G, a, cfg.n_max, cfg.seed, cfg.budget) for G in _family(cfg)])


def cmd_fn(cfg):
    _table_output(cfg, [fn_table(G, cfg.n_max, budget=cfg.budget) for G in _family(cfg)])


def cmd_oligo(cfg):
    G = _group(cfg)
    a, _ = resolve_seed(cfg.seed, cfg.n_max)
    N_max = cfg.N_max if cfg.N_max is not None else G.N
    rep = oligomorphic_check(G.kind, a, cfg.n_max, N_max, q=G.q, N_min=G.N,
                             seed_name=cfg.seed, budget=cfg.budget)
    rows = []
    for n in range(cfg.n_max + 1):
        for N in sorted(rep.bn[n]):
            rows.append([rep.family, cfg.seed, n, N, rep.bn[n][N], rep.fn[n][N],
                         rep.bound_ok[(n, N)], rep.stabilized_at[n]])
    doc = {"family": rep.family, "seed": cfg.seed, "verdict": rep.verdict,
           "bn": rep.bn, "fn": rep.fn, "stabilized_at": rep.stabilized_at,
           "restriction_orders": rep.restriction_orders,
           "bound_ok": all(v is not False for v in rep.bound_ok.values())}
    _emit(cfg, ["family", "seed", "n", "N", "bn", "fn", "bound_ok", "stabilized_at"], rows, doc,
          notes=[f"verdict: {rep.verdict}"])


def _constants_output(cfg, table):
    rows = []
    for (a, b, c), v in sorted(table.constants.items()):
        j = v.to_json()
        rows.append([a, b, c, j if isinstance(j, str) else json.dumps(j)])
    _emit(cfg, ["a", "b", "c", "value"], rows, table.to_json())


def cmd_constants(cfg):
    _, table = resolve_seed(cfg.seed, cfg.n_max)
    table = _need_table(cfg, table)
    _constants_output(cfg, fixed_point_table(_group(cfg), table, cfg.n_max, budget=cfg.budget))


def cmd_limit(cfg):
    _, table = resolve_seed(cfg.seed, cfg.n_max)
    table = _need_table(cfg, table)
    G = _group(cfg)
    if G.kind not in ("symmetric", "general_linear"):
        raise ValidationError("large-N limits exist for S and GL families only", witness=G.spec)
    lt = limit_table(G.kind, table, cfg.n_max, q=G.q or 2, budget=cfg.budget)
    fr = freeness_report(G.kind, table, cfg.n_max, q=G.q or 2, budget=cfg.budget)
    sys.stderr.write(fr.summary() + "\n")
    _constants_output(cfg, lt)


def cmd_jacobi(cfg):
    _, table = resolve_seed(cfg.seed, cfg.n_max)
    table = _need_table(cfg, table)
    if cfg.group:
        table = fixed_point_table(_group(cfg), table, cfg.n_max, budget=cfg.budget)
    rep = jacobi_check(table, cap=cfg.n_max)
    doc = {"table": table.name, "passed": rep.passed, "checked": rep.checked, "cap": rep.cap,
           "failures": rep.failures[:20]}
    _emit(cfg, ["table", "cap", "identities", "passed"],
          [[table.name, rep.cap, rep.checked, rep.passed]], doc)
    if not rep.passed:
        raise ValidationError("Jacobi identity violated", witness=rep.failures[0])


def cmd_twisted(cfg):
    header = ["group", "N", "q", "c", "min_rho_num", "min_rho_den", "bound_num", "bound_den",
              "attained_by_cycle_type"]
    rows, docs = [], []
    for G in _family(cfg):
        rep = min_twisted_weight(G, cfg.c, cfg.budget)
        row = rep.csv_row(G.N, G.q)
        rows.append([row[k] for k in header])
        docs.append(row | {"min_rho": str(rep.min_rho), "family_bound_equality":
                           rep.family_bound_equality, "element_bound_ok": rep.element_bound_ok})
    _emit(cfg, header, rows, docs)


S_COLUMN_NOTE = ("b_S is the N -> infinity fixed-point count for S_N; "
                 "S_N twisted sectors are not included")


def figure1_data(seed, n_max, gl_N, q=2, budget=None, precision=113):
    """Rows (n, b_S, b_GL, log b_S, log b_GL, log b_GL / n^2, provisional, gl_ge_s)."""
    a, _ = resolve_seed(seed, n_max)
    bS = sym_limit_character(a, n_max).as_ints()
    bGL = bn_table(PermGroupHandle("general_linear", gl_N, q), a, n_max, seed, budget).counts()
    rows = []
    with mpmath.workprec(precision):
        for n in range(n_max + 1):
            lS = mpmath.log(bS[n]) if bS[n] > 0 else None
            lG = mpmath.log(bGL[n]) if bGL[n] > 0 else None
            alpha = lG / (n * n) if (n and lG is not None) else None
            rows.append({
                "n": n, "b_S": bS[n], "b_GL": bGL[n],
                "log_b_S": None if lS is None else mpmath.nstr(lS, 15),
                "log_b_GL": None if lG is None else mpmath.nstr(lG, 15),
                "alpha_GL": None if alpha is None else mpmath.nstr(alpha, 15),
                "provisional": n > gl_N,
                "gl_ge_s": bGL[n] >= bS[n],
            })
    return rows


def cmd_figure1(cfg):
    gl = parse_group_spec(cfg.group) if cfg.group else PermGroupHandle("general_linear", 4, 2)
    if gl.kind != "general_linear":
        raise ValidationError("figure1 needs a GL:<N>:<q> group", witness=cfg.group)
    seed = cfg.seed
    rows = figure1_data(seed, cfg.n_max, gl.N, gl.q, cfg.budget, cfg.precision)
    header = list(rows[0])
    notes = [S_COLUMN_NOTE, f"b_GL from GL({gl.N},{gl.q}); rows with n > {gl.N} are provisional"]
    bad = [r["n"] for r in rows if not r["gl_ge_s"]]
    if bad:
        notes.append(f"GL column below S column at n = {bad}")
    _emit(cfg, header, [[r[k] for k in header] for r in rows],
          {"seed": seed, "gl": gl.spec, "note": notes, "rows": rows}, notes=notes)


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def dispatch(cfg):
    """Run one command; returns the process exit status."""
    scalar.PRECISION = cfg.precision
    try:
        HANDLERS[cfg.command](cfg)
    except ValidationError as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        if exc.witness is not None:
            sys.stderr.write(f"witness: {json.dumps(exc.witness, default=str)}\n")
        return 2
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return 3
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="orblab", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--group", help='"S:<N>", "Z:<N>" or "GL:<N>:<q>"')
    p.add_argument("--seed", default=None,
                   help="vac, unit1, heis:<cutoff>, e8cubed, series:a0,a1,... or a JSON file")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--Nmax", type=int, default=None)
    p.add_argument("--c", type=Fraction, default=Fraction(24), help="central charge")
    p.add_argument("--budget", type=int, default=None,
                   help="element budget (default: $ORBLAB_BUDGET or 2e7)")
    p.add_argument("--precision", type=int, default=113, help="float precision in bits")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.group, args.seed, args.nmax, args.Nmax, args.c,
                        args.budget, args.precision, args.out, args.format)
    except ValidationError as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        return 2
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())

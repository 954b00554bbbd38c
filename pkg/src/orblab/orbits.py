"""Orbit counting on weighted functions and subsets, plus oligomorphy checks.

Two independent routes count orbits of weight-n functions: the cycle-index
substitution (Burnside) in :func:`bn_table`, and a direct sweep over all
functions in :func:`orbit_representatives`.  Tests hold them equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import mpmath

from .errors import BudgetExceeded
from .groups import cycle_index, stabilizers
from .series import TruncatedSeries, cycle_index_character

STATE_BUDGET = 10**7


@dataclass(frozen=True, order=True)
class WeightedFunction:
    """A function from points to seed labels, vacuum outside its support.

    ``items`` is sorted by point.  The function makes sense on every point
    set containing its support, which is how it embeds from X_N into X_{N+1}.
    """

    items: tuple
    weight: int = 0

    @classmethod
    def from_dict(cls, mapping, label_weights):
        items = tuple(sorted(mapping.items()))
        return cls(items, sum(label_weights[l] for _, l in items))

    @property
    def support(self):
        return tuple(p for p, _ in self.items)

    @property
    def labels(self):
        return tuple(l for _, l in self.items)

    def as_dict(self):
        return dict(self.items)

    def key(self):
        return (self.support, self.labels)

    def act(self, perm):
        """sigma g: the label at point k moves to perm[k]."""
        return WeightedFunction(tuple(sorted((perm[p], l) for p, l in self.items)), self.weight)

    def relabel_points(self, mapping):
        return WeightedFunction(tuple(sorted((mapping[p], l) for p, l in self.items)), self.weight)

    def __str__(self):
        if not self.items:
            return "vac"
        return "|".join(f"{p}:{l}" for p, l in self.items)


VACUUM = WeightedFunction((), 0)


def labels_from_series(a, n_max):
    """Synthetic label set with a_w labels of weight w (w = 1..n_max)."""
    out = {}
    for w in range(1, min(n_max, a.order) + 1):
        aw = a[w]
        if aw.denominator != 1 or aw < 0:
            raise ValueError(f"a_{w} must be a nonnegative integer")
        for i in range(int(aw)):
            out[f"w{w}.{i}"] = w
    return out


def _word_counts(label_weights, n):
    """words[s][w] = number of label sequences of length s and total weight w."""
    ws = list(label_weights.values())
    words = [[0] * (n + 1) for _ in range(n + 1)]
    words[0][0] = 1
    for s in range(1, n + 1):
        for w in range(n + 1):
            words[s][w] = sum(words[s - 1][w - x] for x in ws if x <= w)
    return words


def count_functions(degree, label_weights, n):
    words = _word_counts(label_weights, n)
    return sum(comb(degree, s) * words[s][n] for s in range(min(n, degree) + 1))


def enumerate_functions(degree, label_weights, n, budget=STATE_BUDGET):
    """All weight-n functions on ``degree`` points, sorted by ``key()``."""
    total = count_functions(degree, label_weights, n)
    if total > budget:
        raise BudgetExceeded(f"{total} weight-{n} functions exceed state budget {budget}")
    labels = sorted(label_weights)
    out = []
    for s in range(min(n, degree) + 1):
        words = [
            w for w in itertools.product(labels, repeat=s) if sum(label_weights[l] for l in w) == n
        ]
        if not words:
            continue
        for pts in itertools.combinations(range(degree), s):
            for w in words:
                out.append(WeightedFunction(tuple(zip(pts, w)), n))
    out.sort(key=WeightedFunction.key)
    return out


def orbit_representatives(g, label_weights, n, budget=STATE_BUDGET, group_budget=None):
    """Minimal (by ``key()``) representative of each orbit on weight-n functions."""
    funcs = enumerate_functions(g.degree, label_weights, n, budget)
    elements = g.element_list(group_budget)
    seen = set()
    reps = []
    for f in funcs:
        k = f.key()
        if k in seen:
            continue
        reps.append(f)
        for p in elements:
            seen.add(f.act(p).key())
    return reps


def count_orbits_direct(g, label_weights, n, budget=STATE_BUDGET):
    return len(orbit_representatives(g, label_weights, n, budget))


def count_subset_orbits_direct(g, n, budget=STATE_BUDGET, group_budget=None):
    total = comb(g.degree, n)
    if total > budget:
        raise BudgetExceeded(f"{total} {n}-subsets exceed state budget {budget}")
    elements = g.element_list(group_budget)
    seen = set()
    count = 0
    for S in itertools.combinations(range(g.degree), n):
        if S in seen:
            continue
        count += 1
        for p in elements:
            seen.add(tuple(sorted(p[x] for x in S)))
    return count


@dataclass
class OrbitTable:
    family: str
    seed: str
    kind: str  # "bn" or "fn"
    rows: list = field(default_factory=list)  # (n, N, count)

    def counts(self, N=None):
        rows = [r for r in self.rows if N is None or r[1] == N]
        return [c for _, _, c in sorted(rows)]

    def as_records(self):
        return [
            {"family": self.family, "seed": self.seed, "n": n, "N": N, "count": c, "kind": self.kind}
            for n, N, c in self.rows
        ]

    def to_json(self):
        return {"family": self.family, "seed": self.seed, "kind": self.kind,
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, doc):
        return cls(doc["family"], doc["seed"], doc["kind"], [tuple(r) for r in doc["rows"]])


def bn_table(g, a, n_max, seed_name="seed", budget=None):
    """b_n(G) for n <= n_max from the cycle index."""
    Z = cycle_index(g, budget)
    chi = cycle_index_character(Z, a, n_max)
    return OrbitTable(g.spec, seed_name, "bn", [(n, g.N, int(chi[n])) for n in range(n_max + 1)])


def fn_table(g, n_max, method="auto", budget=None):
    """f_n(G): orbits on n-element subsets (f_0 = 1)."""
    n_top = min(n_max, g.degree)
    if g.kind == "symmetric" and method in ("auto", "closed_form"):
        counts = [1] * (n_top + 1)
    elif method == "direct" or (
        method == "auto"
        and all(comb(g.degree, n) * g.order <= STATE_BUDGET for n in range(n_top + 1))
    ):
        counts = [count_subset_orbits_direct(g, n, group_budget=budget) for n in range(n_top + 1)]
    else:
        # subsets are weight-n functions with a single weight-1 label
        one_label = TruncatedSeries.from_coeffs([1, 1], n_top)
        chi = cycle_index_character(cycle_index(g, budget), one_label, n_top)
        counts = [int(chi[n]) for n in range(n_top + 1)]
    return OrbitTable(g.spec, "-", "fn", [(n, g.N, c) for n, c in enumerate(counts)])


@dataclass(frozen=True)
class FnBounds:
    lower: int
    upper: int
    heuristic: bool  # odd n: lower bound uses floor(n/2) in both slots


def gl_fn_bounds(n, q):
    """Bounds on f_n(GL(N, q)) for N >= n.

    upper = sum_K q^(K(n-K)); lower = C(q^h, h) with h = floor(n/2).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    h = n // 2
    lower = comb(q**h, h)
    upper = sum(q ** (K * (n - K)) for K in range(n + 1))
    return FnBounds(lower, upper, heuristic=bool(n % 2))


# --- nested oligomorphy diagnostics -----------------------------------------


def _family_member(kind, N, q):
    from .groups import PermGroupHandle

    return PermGroupHandle(kind, N, q if kind == "general_linear" else None)


def _sample_subsets(kind, N, q, k_max):
    """Subsets used for the restriction-group check, all inside X_1 .. X_N."""
    if kind == "general_linear":
        basis = [q**i for i in range(N)]
        out = {"{0}": (0,)}
        for k in range(1, min(k_max, N) + 1):
            out[f"e1..e{k}"] = tuple(basis[:k])
        return out
    return {f"first {k}": tuple(range(k)) for k in range(1, min(k_max, N) + 1)}


@dataclass
class OligoReport:
    family: str
    seed: str
    n_max: int
    N_range: tuple
    bn: dict  # n -> {N: b_n}
    fn: dict  # n -> {N: f_n}
    stabilized_at: dict  # n -> N or None
    growing: dict  # n -> bool, last three values with N >= n strictly increasing
    bound_ok: dict  # (n, N) -> b_n <= A(n)^n f_n, None when f_n = 0
    restriction_orders: dict  # subset name -> {N: |G(K)_N|}
    restriction_stable: dict
    verdict: str

    def summary(self):
        lines = [f"{self.family} seed={self.seed} N={self.N_range[0]}..{self.N_range[1]}"]
        for n in range(self.n_max + 1):
            vals = [self.bn[n][N] for N in sorted(self.bn[n])]
            lines.append(f"  n={n}: b_n={vals} stabilized_at={self.stabilized_at[n]}")
        lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)


def oligomorphic_check(kind, a, n_max, N_max, q=None, N_min=1, seed_name="seed",
                       k_max=2, budget=None):
    """Finite evidence for (or against) nested oligomorphy of a group family.

    Stabilization needs at least two consecutive equal values ending at
    N_max; a verdict of "consistent with" is never a proof.
    """
    kind = {"S": "symmetric", "Z": "cyclic", "GL": "general_linear"}.get(kind, kind)
    Ns = list(range(N_min, N_max + 1))
    bn = {n: {} for n in range(n_max + 1)}
    fn = {n: {} for n in range(n_max + 1)}
    restriction_orders = {}
    for N in Ns:
        g = _family_member(kind, N, q)
        b = bn_table(g, a, n_max, seed_name, budget).counts()
        f = fn_table(g, n_max, budget=budget).counts()
        for n in range(n_max + 1):
            bn[n][N] = b[n]
            fn[n][N] = f[n] if n < len(f) else 0
        for name, K in _sample_subsets(kind, N, q, k_max).items():
            st = stabilizers(g, K, budget)
            restriction_orders.setdefault(name, {})[N] = st.restriction.order

    stabilized_at, growing = {}, {}
    for n in range(n_max + 1):
        vals = [bn[n][N] for N in Ns]
        if len(vals) >= 2 and vals[-1] == vals[-2]:
            i = len(vals) - 1
            while i > 0 and vals[i - 1] == vals[-1]:
                i -= 1
            stabilized_at[n] = Ns[i]
        else:
            stabilized_at[n] = None
        # growth only counts once N >= n, where a weight-n support always fits
        tail = [bn[n][N] for N in Ns if N >= n][-3:]
        growing[n] = len(tail) == 3 and tail[0] < tail[1] < tail[2]

    A = [sum(int(a[j]) for j in range(min(n, a.order) + 1)) for n in range(n_max + 1)]
    # no n-subsets at all (N too small) leaves the bound without content
    bound_ok = {(n, N): (bn[n][N] <= A[n] ** n * fn[n][N]) if fn[n][N] else None
                for n in bn for N in Ns}
    restriction_stable = {
        name: len(v) >= 2 and list(v.values())[-1] == list(v.values())[-2]
        for name, v in restriction_orders.items()
    }

    if any(growing.values()):
        verdict = "not oligomorphic"
    elif all(v is not None for v in stabilized_at.values()) and all(restriction_stable.values()):
        verdict = "consistent with nested oligomorphic"
    else:
        verdict = "inconclusive"
    family = {"symmetric": "S", "cyclic": "Z", "general_linear": f"GL(q={q})"}[kind]
    return OligoReport(family, seed_name, n_max, (N_min, N_max), bn, fn, stabilized_at,
                       growing, bound_ok, restriction_orders, restriction_stable, verdict)


@dataclass(frozen=True)
class GrowthEstimate:
    n: int
    log_bn: object  # mpmath.mpf
    alpha: object  # log(b_n) / n^2
    delta: object  # alpha_n - alpha_{n-1}, None for the first entry


def growth_exponent(counts, precision=53, n_min=1):
    """log(b_n)/n^2 for n >= n_min and its successive differences.

    ``counts`` is a list indexed by n or an OrbitTable (first N only).
    """
    if isinstance(counts, OrbitTable):
        Ns = sorted({N for _, N, _ in counts.rows})
        counts = counts.counts(Ns[0])
    entries = [(n, c) for n, c in enumerate(counts) if n >= n_min]
    if any(c <= 0 for _, c in entries):
        raise ValueError("growth exponent needs positive counts")
    if len(entries) < 3:
        raise ValueError("need at least three positive entries")
    out = []
    prev = None
    with mpmath.workprec(precision):
        for n, c in entries:
            lg = mpmath.log(mpmath.mpf(c))
            alpha = lg / (n * n)
            out.append(GrowthEstimate(n, lg, alpha, None if prev is None else alpha - prev))
            prev = alpha
    return out

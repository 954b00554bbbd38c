"""Fixed-point structure constants via coset classes, their large-N limits,
computed constant tables and the freeness diagnostic."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log

from ..errors import ValidationError
from ..groups import PermGroupHandle, span_dim
from ..orbits import VACUUM, WeightedFunction, orbit_representatives
from ..scalar import ONE, ZERO, Scalar
from .cosets import coset_analysis, gl_m_squared, sn_m_squared
from .seed import VAC, SeedTable
from .states import bruteforce_constant, normalization, tensor_constant


def _relabelings(state, embedding):
    """Counter of functions e(s g) for s in the restriction group of supp g."""
    K = state.rep.support
    labels = state.rep.labels
    emb = dict(zip(K, embedding))
    pos = {k: i for i, k in enumerate(state.restriction.points)}
    out = Counter()
    for perm in state.restriction.perms:
        items = tuple(sorted((emb[perm[pos[k]]], l) for k, l in zip(K, labels)))
        out[WeightedFunction(items, state.rep.weight)] += 1
    return out


def class_inner_sum(cls, states, seed):
    """sum over prod_i G(K_i) of C(e_A s g) for one class."""
    r = [_relabelings(s, e) for s, e in zip(states, cls.embeddings)]
    total = ZERO
    for h1, m1 in r[0].items():
        for h2, m2 in r[1].items():
            for h3, m3 in r[2].items():
                c = tensor_constant(h1, h2, h3, seed)
                if c:
                    total = total + (m1 * m2 * m3) * c
    return total


def _norm_factor(states):
    out = ONE
    for s in states:
        out = out * Scalar.inv_sqrt(s.A)
    return out


def factored_constant(g1, g2, g3, G, seed, budget=None, method="auto"):
    """Fixed-point constant as a sum over coset classes.

    f = prod A(g_i)^(-1/2) * sum_classes (M / stab) * sum_s C(e_A s g)
    """
    states = [normalization(g, G, budget) for g in (g1, g2, g3)]
    classes = coset_analysis(*(s.rep.support for s in states), G, method=method, budget=budget)
    total = ZERO
    for cls in classes:
        inner = class_inner_sum(cls, states, seed)
        if inner:
            total = total + Scalar.sqrt(cls.M_squared) * inner / cls.stab
    return total * _norm_factor(states)


def fixed_point_constant(g1, g2, g3, G, seed, method="factored", budget=None):
    if method == "bruteforce":
        return bruteforce_constant(g1, g2, g3, G, seed, budget=budget)
    return factored_constant(g1, g2, g3, G, seed, budget=budget)


# --- computed tables -----------------------------------------------------------


def _table_from(states_by_id, value, name, cutoff, meta):
    labels = {sid: rep.weight for sid, rep in states_by_id.items()}
    constants = {}
    ids = list(states_by_id)
    for a, b, c in itertools.product(ids, repeat=3):
        v = value(states_by_id[a], states_by_id[b], states_by_id[c])
        if v:
            constants[(a, b, c)] = v
    return SeedTable(name, cutoff, labels, constants, meta)


def _state_ids(reps):
    return {(VAC if not r.items else str(r)): r for r in reps}


def fixed_point_table(G, seed, cutoff=None, method="factored", budget=None):
    """Constant table of V^G on all states of weight <= min(cutoff, seed cutoff)."""
    cutoff = seed.cutoff if cutoff is None else min(cutoff, seed.cutoff)
    reps = [VACUUM]
    for n in range(1, cutoff + 1):
        reps += orbit_representatives(G, seed.label_weights, n)
    states = _state_ids(reps)
    return _table_from(
        states,
        lambda x, y, z: fixed_point_constant(x, y, z, G, seed, method, budget),
        f"{seed.name}^{G.spec}", cutoff, {"N": G.N, "group": G.spec},
    )


# --- large-N limits --------------------------------------------------------------


@dataclass
class ClassRecord:
    A: tuple
    n3: int
    decay: int
    rate: str
    status: str  # kept | decays | degenerate
    inner: Scalar
    stab: int
    M_squared_ref: Fraction
    union: int
    dims: tuple | None

    def as_dict(self):
        return {"A": [list(a) for a in self.A], "n3": self.n3, "decay": self.decay,
                "rate": self.rate, "status": self.status, "inner": self.inner.to_json(),
                "stab": self.stab, "M_squared_ref": str(self.M_squared_ref)}


@dataclass
class LimitResult:
    value: Scalar
    family: str
    N_ref: int
    norm: Scalar  # prod A(g_i)^(-1/2)
    classes: list = field(default_factory=list)

    @property
    def certificate(self):
        return [c.as_dict() for c in self.classes]

    def finite(self, N, q=2):
        """Factored value at finite N from the reference classes and closed-form M."""
        total = ZERO
        for c in self.classes:
            if not c.inner:
                continue
            if self.family == "symmetric":
                if c.union > N:
                    continue
                K = [len(a) for a in c.A]
                M2 = sn_m_squared(*K, c.union, N)
            else:
                if c.dims[3] > N:
                    continue
                M2 = gl_m_squared(*c.dims, N, q)
            total = total + Scalar.sqrt(M2) * c.inner / c.stab
        return total * self.norm


def _ambient_N(reps, q):
    top = max((p for r in reps for p in r.support), default=0)
    N = 1
    while q**N <= top:
        N += 1
    return N


def _family_kind(kind):
    return {"S": "symmetric", "GL": "general_linear"}.get(kind, kind)


def _rate(kind, e):
    if e == 0:
        return "1"
    if e < 0:
        return "grows"
    return f"N^(-{e}/2)" if kind == "symmetric" else f"q^(-{e}N/2)"


def limit_constant(g1, g2, g3, kind, seed, q=2, N_ref=None, budget=None):
    """N -> infinity constant for the S_N or GL(N, q) family plus its certificate.

    Classes whose M tends to 1 are kept, those with M -> 0 are dropped with
    their decay rate, and classes with zero inner sum are listed as
    degenerate.  A class with growing M and nonzero inner sum is an error.
    """
    kind = _family_kind(kind)
    reps = (g1, g2, g3)
    if kind == "symmetric":
        sumK = sum(len(r.support) for r in reps)
        top = max((p for r in reps for p in r.support), default=-1) + 1
        N_ref = N_ref or max(sumK, top, 1)
        G = PermGroupHandle("symmetric", N_ref)
    elif kind == "general_linear":
        amb = _ambient_N(reps, q)
        sumd = sum(span_dim(r.support, amb, q) for r in reps)
        N_ref = N_ref or max(amb, ceil(sumd / 2), 2)
        G = PermGroupHandle("general_linear", N_ref, q)
    else:
        raise ValueError(f"no large-N limit implemented for family {kind!r}")
    states = [normalization(g, G, budget) for g in reps]
    norm = _norm_factor(states)
    records = []
    total = ZERO
    for cls in coset_analysis(*(g.support for g in reps), G, budget=budget):
        inner = class_inner_sum(cls, states, seed)
        e = cls.decay
        rate = _rate(kind, e)
        if not inner:
            status = "degenerate"
        elif e == 0:
            status = "kept"
            total = total + inner / cls.stab
        elif e > 0:
            status = "decays"
        else:
            raise ValidationError("class with growing multiplicity and nonzero contribution",
                                  witness={"A": cls.A, "decay": e})
        records.append(ClassRecord(cls.A, cls.n3, e, rate, status, inner, cls.stab,
                                   cls.M_squared, cls.union, cls.dims))
    return LimitResult(total * norm, kind, N_ref, norm, records)


def limit_table(kind, seed, cutoff=None, q=2, budget=None):
    """Constant table of the large-N limit on states of weight <= cutoff.

    Orbit representatives are taken at N = cutoff, where weight-n orbit
    counts have stabilized for both families.
    """
    kind = _family_kind(kind)
    cutoff = seed.cutoff if cutoff is None else min(cutoff, seed.cutoff)
    N = max(cutoff, 1)
    G = PermGroupHandle(kind, N, q if kind == "general_linear" else None)
    reps = [VACUUM]
    for n in range(1, cutoff + 1):
        reps += orbit_representatives(G, seed.label_weights, n)
    family = "S" if kind == "symmetric" else f"GL:q={q}"
    return _table_from(
        _state_ids(reps),
        lambda x, y, z: limit_constant(x, y, z, kind, seed, q, budget=budget).value,
        f"{seed.name}^{family}-limit", cutoff, {"group": family},
    )


# --- freeness ------------------------------------------------------------------------


@dataclass
class FreenessReport:
    family: str
    seed: str
    cap: int
    rows: list  # (ids, limit value)
    verdict: str
    scaling: list  # (ids, N1, N2, exponent estimate)

    def summary(self):
        nz = [r for r in self.rows if r[1]]
        lines = [f"{self.family} seed={self.seed} cap={self.cap}: {self.verdict}",
                 f"  single-trace triples: {len(self.rows)}, nonzero limits: {len(nz)}"]
        for ids, N1, N2, ex in self.scaling:
            lines.append(f"  {ids}: finite-N exponent {ex:.4f} from N={N1},{N2}")
        return "\n".join(lines)


def single_trace_states(kind, seed, cap, q=2):
    kind = _family_kind(kind)
    points = (0,) if kind == "symmetric" else (0, 1)
    out = []
    for l, w in sorted(seed.label_weights.items()):
        if w <= cap:
            for p in points:
                out.append(WeightedFunction(((p, l),), w))
    return out


def freeness_report(kind, seed, cap=None, q=2, N_pair=None, budget=None):
    """Limit constants of all single-trace triples and finite-N scaling.

    For S_N the exponent is log|f(N2)/f(N1)| / log(N2/N1); for GL(N, q) it is
    the per-unit-N exponent log_q|f(N2)/f(N1)| / (N2 - N1).
    """
    kind = _family_kind(kind)
    cap = seed.cutoff if cap is None else cap
    if N_pair is None:
        N_pair = (8, 32) if kind == "symmetric" else (2, 3)
    sts = single_trace_states(kind, seed, cap, q)
    rows, scaling = [], []
    for g1, g2, g3 in itertools.product(sts, repeat=3):
        res = limit_constant(g1, g2, g3, kind, seed, q, budget=budget)
        ids = (str(g1), str(g2), str(g3))
        rows.append((ids, res.value))
        N1, N2 = N_pair
        v1, v2 = res.finite(N1, q), res.finite(N2, q)
        if v1 and v2 and not res.value:
            r = abs(float(v2) / float(v1))
            ex = log(r) / log(N2 / N1) if kind == "symmetric" else log(r, q) / (N2 - N1)
            scaling.append((ids, N1, N2, ex))
    verdict = "free" if all(not v for _, v in rows) else "not free"
    family = "S" if kind == "symmetric" else f"GL(q={q})"
    return FreenessReport(family, seed.name, cap, rows, verdict, scaling)

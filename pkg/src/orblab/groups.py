"""Concrete permutation actions: S_N, Z_N and GL(N, q) acting on F_q^N.

Points are 0-based.  A permutation is a tuple ``images`` with
``images[x] = x . sigma`` (right action).  A function g on points is moved
by ``(sigma g)(x) = g(x . sigma^-1)``, i.e. the label sitting at ``k`` ends
up at ``images[k]``.

For GL(N, q) a vector v = (v_1, ..., v_N) is the point sum v_i q^(i-1), so
F_q^(N-1) sits inside F_q^N as the first q^(N-1) points.  A matrix with rows
r_1..r_N acts on row vectors, v -> v A = sum v_i r_i.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, prod

import numpy as np

from .errors import BudgetExceeded, ValidationError
from .series import CycleIndex, CycleType

DEFAULT_BUDGET = 2 * 10**7


def default_budget():
    env = os.environ.get("ORBLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def is_prime(q):
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def gl_order(N, q):
    return prod(q**N - q**i for i in range(N))


@dataclass(frozen=True)
class PermGroupHandle:
    kind: str  # "symmetric" | "cyclic" | "general_linear"
    N: int
    q: int | None = None

    def __post_init__(self):
        if self.kind not in ("symmetric", "cyclic", "general_linear"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.kind == "general_linear":
            if self.q is None or not is_prime(self.q):
                raise ValueError(f"GL needs a prime q, got {self.q}")
        elif self.q is not None:
            raise ValueError("q only applies to general_linear")

    @property
    def degree(self):
        return self.q**self.N if self.kind == "general_linear" else self.N

    @property
    def order(self):
        if self.kind == "symmetric":
            return factorial(self.N)
        if self.kind == "cyclic":
            return self.N
        return gl_order(self.N, self.q)

    @property
    def spec(self):
        return {"symmetric": f"S:{self.N}", "cyclic": f"Z:{self.N}"}.get(
            self.kind, f"GL:{self.N}:{self.q}"
        )

    def with_N(self, N):
        return PermGroupHandle(self.kind, N, self.q)

    def __str__(self):
        return self.spec

    def elements(self, budget=None):
        """Stream every element as an image tuple, in a fixed order.

        S_N: lexicographic on images.  Z_N: rotations x -> x + s, s = 0..N-1.
        GL: matrices with lexicographically increasing row tuples, each row
        chosen outside the span of the previous rows.
        """
        budget = default_budget() if budget is None else budget
        if self.order > budget:
            raise BudgetExceeded(f"{self.spec} has {self.order} elements > budget {budget}")
        if self.kind == "symmetric":
            yield from itertools.permutations(range(self.N))
        elif self.kind == "cyclic":
            n = self.N
            for s in range(n):
                yield tuple((x + s) % n for x in range(n))
        else:
            tables = field_tables(self.N, self.q)
            for rows in _gl_row_tuples(self.N, self.q):
                yield gl_matrix_perm(rows, tables)

    def element_list(self, budget=None):
        return _element_list(self, default_budget() if budget is None else budget)


@lru_cache(maxsize=32)
def _element_list(g, budget):
    return tuple(g.elements(budget))


def build_group(kind, N, q=None):
    aliases = {"S": "symmetric", "Z": "cyclic", "GL": "general_linear"}
    return PermGroupHandle(aliases.get(kind, kind), N, q)


def parse_group_spec(spec):
    """``S:<N>``, ``Z:<N>`` or ``GL:<N>:<q>``."""
    parts = spec.strip().split(":")
    try:
        if parts[0] in ("S", "Z") and len(parts) == 2:
            return build_group(parts[0], int(parts[1]))
        if parts[0] == "GL" and len(parts) == 3:
            return build_group("GL", int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"malformed group spec {spec!r}: {exc}") from None
    raise ValueError(f"malformed group spec {spec!r}")


# --- F_q^N arithmetic on encoded points -------------------------------------


@dataclass(frozen=True)
class FieldTables:
    N: int
    q: int
    add: np.ndarray = field(repr=False)  # add[x, y]
    smul: np.ndarray = field(repr=False)  # smul[c, x]
    hi_pos: np.ndarray = field(repr=False)  # highest nonzero digit of x
    hi_dig: np.ndarray = field(repr=False)
    rest: np.ndarray = field(repr=False)  # x minus its highest digit term


def digits(x, N, q):
    out = []
    for _ in range(N):
        out.append(x % q)
        x //= q
    return out


def encode(v, q):
    return sum(int(c) * q**i for i, c in enumerate(v))


@lru_cache(maxsize=None)
def field_tables(N, q):
    deg = q**N
    dig = np.array([digits(x, N, q) for x in range(deg)], dtype=np.int64).reshape(deg, N)
    weights = q ** np.arange(N, dtype=np.int64)
    add = ((dig[:, None, :] + dig[None, :, :]) % q) @ weights
    smul = np.stack([((c * dig) % q) @ weights for c in range(q)])
    hi_pos = np.zeros(deg, dtype=np.int64)
    hi_dig = np.zeros(deg, dtype=np.int64)
    rest = np.zeros(deg, dtype=np.int64)
    for x in range(1, deg):
        i = max(j for j in range(N) if dig[x, j])
        hi_pos[x] = i
        hi_dig[x] = dig[x, i]
        rest[x] = x - dig[x, i] * q**i
    for arr in (add, smul, hi_pos, hi_dig, rest):
        arr.setflags(write=False)
    return FieldTables(N, q, add, smul, hi_pos, hi_dig, rest)


def span_points(points, N, q):
    """All points in the F_q-span of ``points`` (as a frozenset)."""
    t = field_tables(N, q)
    span = {0}
    for p in points:
        if p in span:
            continue
        span = {int(t.add[s, t.smul[c, p]]) for s in span for c in range(q)}
    return frozenset(span)


def span_dim(points, N, q):
    size = len(span_points(points, N, q))
    d = 0
    while q**d < size:
        d += 1
    return d


def _gl_row_tuples(N, q):
    deg = q**N
    t = field_tables(N, q)

    def rec(rows, span):
        if len(rows) == N:
            yield tuple(rows)
            return
        for r in range(deg):
            if r in span:
                continue
            new_span = {int(t.add[s, t.smul[c, r]]) for s in span for c in range(q)}
            yield from rec(rows + [r], new_span)

    yield from rec([], {0})


def gl_matrix_perm(rows, tables=None):
    """Permutation of F_q^N induced by v -> v A where A has the given rows."""
    N = len(rows)
    t = tables
    q = t.q
    deg = q**N
    perm = [0] * deg
    for x in range(1, deg):
        perm[x] = int(t.add[perm[t.rest[x]], t.smul[t.hi_dig[x], rows[t.hi_pos[x]]]])
    return tuple(perm)


# --- cycle types and cycle indices ------------------------------------------


def cycle_type(images):
    n = len(images)
    seen = [False] * n
    counts = Counter()
    for x in range(n):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = images[y]
            length += 1
        counts[length] += 1
    if sorted(images) != list(range(n)):
        raise ValueError("not a permutation")
    return CycleType(tuple(counts.items()))


def partitions(n, max_part=None):
    """Partitions of n as nonincreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def z_lambda(ct):
    """Centralizer order prod k^m_k m_k! of a cycle type in S_n."""
    return prod(k**m * factorial(m) for k, m in ct.parts)


def _euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cycle_index_by_enumeration(g, budget=None):
    hist = Counter(cycle_type(p) for p in g.elements(budget))
    return CycleIndex.from_histogram(g.degree, hist)


def cycle_type_histogram(g, budget=None):
    """Exact count of group elements per cycle type."""
    budget = default_budget() if budget is None else budget
    if g.kind == "symmetric":
        out = {}
        for lam in partitions(g.N):
            ct = CycleType(tuple(Counter(lam).items()))
            out[ct] = factorial(g.N) // z_lambda(ct)
        return out
    if g.kind == "cyclic":
        n = g.N
        return {CycleType(((d, n // d),)): _euler_phi(d) for d in range(1, n + 1) if n % d == 0}
    if g.order > budget:
        raise BudgetExceeded(f"{g.spec} has {g.order} elements > budget {budget}")
    return dict(_gl_histogram(g.N, g.q))


@lru_cache(maxsize=None)
def _gl_histogram(N, q):
    from ._glkernel import gl_cycle_histogram

    t = field_tables(N, q)
    types, counts, total = gl_cycle_histogram(N, q, t.add, t.smul, t.hi_pos, t.hi_dig, t.rest)
    if total != gl_order(N, q):
        raise RuntimeError(f"GL({N},{q}) stream produced {total} elements")
    hist = {}
    for row, c in zip(types, counts):
        ct = CycleType(tuple((k, int(m)) for k, m in enumerate(row) if k and m))
        hist[ct] = int(c)
    return tuple(sorted(hist.items()))


def cycle_index(g, budget=None):
    """Exact cycle index: partitions for S_N, divisors for Z_N, streaming for GL."""
    return CycleIndex.from_histogram(g.degree, cycle_type_histogram(g, budget))


# --- stabilizers --------------------------------------------------------------


@dataclass(frozen=True)
class Restriction:
    """Permutation group on the sorted point tuple ``points``.

    Each element of ``perms`` lists the image of ``points[i]`` at index i.
    """

    points: tuple
    perms: frozenset

    @property
    def order(self):
        return len(self.perms)


@dataclass(frozen=True)
class Stabilizers:
    setwise: int
    pointwise: int
    restriction: Restriction


GL_ENUMERATION_LIMIT = 200_000


def stabilizers(g, K, budget=None, method="auto"):
    """Setwise/pointwise stabilizer orders of K and the group induced on K."""
    K = tuple(sorted(set(K)))
    if any(not 0 <= k < g.degree for k in K):
        raise ValueError("subset not inside the point set")
    if g.kind == "symmetric" and method != "enumerate":
        n, k = g.N, len(K)
        perms = frozenset(itertools.permutations(K))
        return Stabilizers(factorial(k) * factorial(n - k), factorial(n - k), Restriction(K, perms))
    if g.kind == "general_linear" and (
        method == "closed_form" or (method == "auto" and g.order > GL_ENUMERATION_LIMIT)
    ):
        return gl_stabilizers_closed_form(g, K)
    Kset = set(K)
    setwise = pointwise = 0
    restr = set()
    for p in g.elements(budget):
        if all(p[k] in Kset for k in K):
            setwise += 1
            img = tuple(p[k] for k in K)
            restr.add(img)
            if img == K:
                pointwise += 1
    return Stabilizers(setwise, pointwise, Restriction(K, frozenset(restr)))


def gl_stabilizers_closed_form(g, K):
    """Stabilizers in GL(N, q) via the span W of K.

    Fixing K pointwise means fixing W pointwise: order q^(d(N-d)) |GL(N-d, q)|.
    Any linear automorphism of W preserving K extends to F_q^N, so the
    restriction group is the set of such automorphisms acting on K.
    """
    N, q = g.N, g.q
    K = tuple(sorted(set(K)))
    t = field_tables(N, q)
    basis = []
    span = {0}
    for k in K:
        if k not in span:
            basis.append(k)
            span = {int(t.add[s, t.smul[c, k]]) for s in span for c in range(q)}
    d = len(basis)
    # coordinates of each point of K in the chosen basis
    coords = {}
    for combo in itertools.product(range(q), repeat=d):
        v = 0
        for c, b in zip(combo, basis):
            v = int(t.add[v, t.smul[c, b]])
        coords[v] = combo
    Kset = set(K)
    perms = set()
    for images in itertools.permutations(K, d):
        if span_dim(images, N, q) != d:
            continue

        def apply(v, images=images):
            out = 0
            for c, b in zip(coords[v], images):
                out = int(t.add[out, t.smul[c, b]])
            return out

        img = tuple(apply(k) for k in K)
        if set(img) == Kset:
            perms.add(img)
    pointwise = q ** (d * (N - d)) * gl_order(N - d, q) if d < N else 1
    restriction = Restriction(K, frozenset(perms))
    return Stabilizers(pointwise * restriction.order, pointwise, restriction)


def gl_order_asymptotic(N, q):
    """|GL(N,q)| against its main term q^(N^2) phi(1/q).

    ``ratio`` uses phi truncated at N factors (exactly 1 by the product
    formula); ``ratio_infinite`` uses the full Euler function and shows the
    1 + O(q^-N) approach.
    """
    import mpmath

    exact = gl_order(N, q)
    phi_n = prod(1 - Fraction(1, q**n) for n in range(1, N + 1))
    ratio = Fraction(exact) / (Fraction(q) ** (N * N) * phi_n)
    phi_inf = mpmath.qp(mpmath.mpf(1) / q)
    ratio_inf = mpmath.mpf(exact) / (mpmath.mpf(q) ** (N * N) * phi_inf)
    return exact, ratio, float(ratio_inf)


def restriction_to_subset(perm, points):
    """Restriction of a permutation to a set it preserves, or None."""
    pset = set(points)
    img = tuple(perm[p] for p in points)
    return img if set(img) == pset else None


def check_permutation(images):
    if sorted(images) != list(range(len(images))):
        raise ValidationError("not a bijection", witness=images)
    return tuple(images)

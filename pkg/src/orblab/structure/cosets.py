"""Diagonal orbits of support triples and their multiplicity factors.

For supports K_1, K_2, K_3 of three orbit representatives, a class is a
diagonal G-orbit of triples (A_1, A_2, A_3) with A_i in the G-orbit of K_i.
Each class carries

  M^2  = prod_i |pointwise stab K_i| / (|G| * |pointwise stab of union|^2)
  stab = |setwise stab of all A_i| / |pointwise stab of union|

and contributes M / stab times the sum over relabelings in prod_i G(K_i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..errors import ValidationError
from ..groups import gl_order, span_dim, span_points, stabilizers


@dataclass(frozen=True)
class CosetClass:
    A: tuple  # (A_1, A_2, A_3), sorted point tuples
    embeddings: tuple  # embeddings[i][j] = image of K_i[j] in A_i
    n3: int
    M_squared: Fraction
    stab: int
    union: int  # number of points in A_1 u A_2 u A_3
    admissible: bool  # every union point lies in at least two A_i
    decay: int | None  # N-exponent: S_N sum K - 2U, GL sum dim - 2 dim(union); None otherwise
    dims: tuple | None = None  # GL only: (d_1, d_2, d_3, d_union)


def _admissible(A):
    pts = set().union(*map(set, A))
    return all(sum(x in a for a in A) >= 2 for x in pts)


def sn_m_closed_form(K1, K2, K3, n3, N):
    """M^2 for S_N with union size (K1+K2+K3-n3)/2."""
    twice = K1 + K2 + K3 - n3
    if twice % 2:
        raise ValidationError("non-integral union size: configuration contributes zero",
                              witness=(K1, K2, K3, n3))
    U = twice // 2
    if U > N or max(K1, K2, K3) > U:
        raise ValueError(f"union size {U} impossible for N={N}")
    return sn_m_squared(K1, K2, K3, U, N)


def sn_m_squared(K1, K2, K3, U, N):
    num = factorial(N - K1) * factorial(N - K2) * factorial(N - K3)
    return Fraction(num, factorial(N) * factorial(N - U) ** 2)


def gl_pointwise_order(d, N, q):
    return q ** (d * (N - d)) * gl_order(N - d, q)


def gl_m_squared(d1, d2, d3, du, N, q):
    num = gl_pointwise_order(d1, N, q) * gl_pointwise_order(d2, N, q) * gl_pointwise_order(d3, N, q)
    return Fraction(num, gl_order(N, q) * gl_pointwise_order(du, N, q) ** 2)


def _n3(G, A):
    if G.kind == "general_linear":
        common = None
        for a in A:
            s = span_points(a, G.N, G.q)
            common = s if common is None else common & s
        size, d = len(common), 0
        while size > 1:
            size //= G.q
            d += 1
        return d
    return len(set(A[0]) & set(A[1]) & set(A[2]))


def _finish(G, A, emb, setwise_A, pointwise_K):
    union = tuple(sorted(set().union(*map(set, A))))
    pw_union = stabilizers(G, union).pointwise
    M2 = Fraction(pointwise_K[0] * pointwise_K[1] * pointwise_K[2], G.order * pw_union**2)
    if setwise_A % pw_union:
        raise RuntimeError("stabilizer orders inconsistent")
    dims, decay = None, None
    if G.kind == "symmetric":
        decay = sum(len(a) for a in A) - 2 * len(union)
    elif G.kind == "general_linear":
        ds = tuple(span_dim(a, G.N, G.q) for a in A)
        du = span_dim(union, G.N, G.q)
        dims = ds + (du,)
        decay = sum(ds) - 2 * du
    return CosetClass(A, emb, _n3(G, A), M2, setwise_A // pw_union, len(union),
                      _admissible(A), decay, dims)


def coset_analysis(K1, K2, K3, G, method="auto", budget=None):
    """All classes for supports K1, K2, K3 in G, sorted by their triples."""
    Ks = [tuple(sorted(set(K))) for K in (K1, K2, K3)]
    if G.kind == "symmetric" and method in ("auto", "closed_form"):
        return _sn_classes(Ks, G)
    return _enumerated_classes(Ks, G, budget)


def _enumerated_classes(Ks, G, budget):
    elements = G.element_list(budget)
    orbits = []
    for K in Ks:
        orb = {}
        for p in elements:
            A = tuple(sorted(p[x] for x in K))
            if A not in orb:
                orb[A] = tuple(p[x] for x in K)
        orbits.append(orb)
    K1set = set(Ks[0])
    H = [p for p in elements if all(p[x] in K1set for x in Ks[0])]
    pointwise_K = [stabilizers(G, K, budget).pointwise for K in Ks]
    seen = set()
    out = []
    for A2 in sorted(orbits[1]):
        for A3 in sorted(orbits[2]):
            if (A2, A3) in seen:
                continue
            orb = set()
            for p in H:
                orb.add((tuple(sorted(p[x] for x in A2)), tuple(sorted(p[x] for x in A3))))
            seen |= orb
            A = (Ks[0], A2, A3)
            emb = (Ks[0], orbits[1][A2], orbits[2][A3])
            out.append(_finish(G, A, emb, len(H) // len(orb), pointwise_K))
    return out


def _sn_classes(Ks, G):
    """Classes for S_N from Venn-region sizes; no group enumeration."""
    N = G.N
    k1, k2, k3 = map(len, Ks)
    pointwise_K = [stabilizers(G, K).pointwise for K in Ks]
    out = []
    for r123 in range(min(k1, k2, k3) + 1):
        for r12 in range(min(k1, k2) - r123 + 1):
            for r13 in range(min(k1 - r123 - r12, k3 - r123) + 1):
                r1 = k1 - r123 - r12 - r13
                for r23 in range(min(k2 - r123 - r12, k3 - r123 - r13) + 1):
                    r2 = k2 - r123 - r12 - r23
                    r3 = k3 - r123 - r13 - r23
                    sizes = (r123, r12, r13, r23, r1, r2, r3)
                    U = sum(sizes)
                    if U > N:
                        continue
                    members = ((0, 1, 2), (0, 1), (0, 2), (1, 2), (0,), (1,), (2,))
                    A = [[], [], []]
                    pt = 0
                    for size, mem in zip(sizes, members):
                        for _ in range(size):
                            for i in mem:
                                A[i].append(pt)
                            pt += 1
                    A = tuple(tuple(a) for a in A)
                    setwise = factorial(N - U)
                    for r in sizes:
                        setwise *= factorial(r)
                    out.append(_finish(G, A, A, setwise, pointwise_K))
    return sorted(out, key=lambda c: c.A)


def class_signature(c):
    """Invariants of a class that do not depend on the chosen representative."""
    return (c.n3, c.M_squared, c.stab, c.union, c.admissible)


def all_subset_triples(max_size, N):
    """(K1, K2, K3) as initial segments of sizes <= max_size inside N points."""
    for sizes in itertools.product(range(max_size + 1), repeat=3):
        if max(sizes) <= N:
            yield tuple(tuple(range(s)) for s in sizes)

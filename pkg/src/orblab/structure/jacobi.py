"""Exhaustive Borcherds (Jacobi) identity check on a structure-constant table.

Expanding x_p y = sum_d f_{dxy} d, the identity for states (e, a, b, c)
and integers (m, n, k) with wt(e) = wt(a)+wt(b)+wt(c)-m-n-k-2 reads

  sum_d C(m, j1) f_{edc} f_{dab}
    = sum_d (-1)^j2 C(n, j2) f_{ead} f_{dbc}
      - sum_d (-1)^(j3+n) C(n, j3) f_{ebd} f_{dac}

with j1 = wa+wb-wd-n-1, j2 = wb+wc-wd-k-1, j3 = wa+wc-wd-m-1 and each sum
over d with j >= 0.  A triple (m, n, k) is checked only when every such sum
runs over weights the table covers completely.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from ..scalar import ZERO, Scalar


def gbinom(m, j):
    """Binomial C(m, j) for any integer m; zero for j < 0."""
    if j < 0:
        return 0
    num, den = 1, 1
    for i in range(j):
        num *= m - i
        den *= i + 1
    return num // den


@dataclass
class JacobiReport:
    passed: bool
    checked: int
    cap: int
    cutoff: int
    failures: list = field(default_factory=list)

    def __str__(self):
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"jacobi cap={self.cap} cutoff={self.cutoff} identities={self.checked}: {status}"


def _weight_sum(terms):
    out = ZERO
    for coef, x, y in terms:
        out = out + coef * (x * y)
    return out


def jacobi_check(table, cap=None, stop_at_first=False):
    """Check every identity with external weights <= cap (default: table cutoff)."""
    cutoff = table.cutoff
    cap = cutoff if cap is None else min(cap, cutoff)
    wt = table.labels
    const = table.constants
    # out[(x, y)] = [(d, f_{dxy}), ...] nonzero only
    out = defaultdict(list)
    for (d, x, y), v in const.items():
        out[(x, y)].append((d, v))
    ext = [l for l, w in wt.items() if w <= cap]

    failures = []
    checked = 0
    for e, a, b, c in itertools.product(ext, repeat=4):
        we, wa, wb, wc = wt[e], wt[a], wt[b], wt[c]
        S = wa + wb + wc - we - 2
        m_lo = wa + wc - cutoff - 1
        n_lo = wa + wb - cutoff - 1
        k_lo = wb + wc - cutoff - 1
        for m in range(m_lo, S - n_lo - k_lo + 1):
            for n in range(n_lo, S - m - k_lo + 1):
                k = S - m - n
                top1, top2, top3 = wa + wb - n - 1, wb + wc - k - 1, wa + wc - m - 1
                if max(top1, top2, top3) < 0:
                    continue  # every sum is empty
                lhs = ZERO
                for d, v in out[(a, b)]:
                    j1 = top1 - wt[d]
                    if j1 >= 0:
                        x = const.get((e, d, c))
                        if x is not None:
                            lhs = lhs + gbinom(m, j1) * (x * v)
                rhs = ZERO
                for d, v in out[(b, c)]:
                    j2 = top2 - wt[d]
                    if j2 >= 0:
                        x = const.get((e, a, d))
                        if x is not None:
                            rhs = rhs + _sign(j2) * gbinom(n, j2) * (x * v)
                for d, v in out[(a, c)]:
                    j3 = top3 - wt[d]
                    if j3 >= 0:
                        x = const.get((e, b, d))
                        if x is not None:
                            rhs = rhs - _sign(j3 + n) * gbinom(n, j3) * (x * v)
                checked += 1
                if not _equal(lhs, rhs):
                    failures.append(
                        {"e": e, "a": a, "b": b, "c": c, "m": m, "n": n, "k": k,
                         "lhs": repr(lhs), "rhs": repr(rhs)}
                    )
                    if stop_at_first:
                        return JacobiReport(False, checked, cap, cutoff, failures)
    return JacobiReport(not failures, checked, cap, cutoff, failures)


def _sign(j):
    return -1 if j % 2 else 1


def _equal(x, y):
    if isinstance(x, Scalar) and isinstance(y, Scalar):
        return x == y
    return Scalar(x) == Scalar(y)

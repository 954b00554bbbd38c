"""Exact truncated power series, cycle indices and seed characters.

Every coefficient is a :class:`fractions.Fraction`; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ValidationError


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly up to and including ``t**order``."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_coeffs(cls, coeffs, order=None):
        """Build from a (possibly short) coefficient list, zero-padding to ``order``."""
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, order):
        return cls.from_coeffs([1], order)

    def __getitem__(self, n):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other):
        o = min(self.order, other.order)
        return TruncatedSeries(o, tuple(self.coeffs[i] + other.coeffs[i] for i in range(o + 1)))

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.order, tuple(c * x for x in self.coeffs))
        o = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (o + 1)
        for i in range(o + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(o + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(o, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.recip() ** (-k)
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def recip(self):
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum(a[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s * inv0)
        return TruncatedSeries(self.order, tuple(out))

    def subs_power(self, k, order=None):
        """Return a(t**k), truncated at ``order`` (default: own order)."""
        if k < 1:
            raise ValueError("k must be positive")
        if order is None:
            order = self.order
        out = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i * k > order:
                break
            out[i * k] = c
        # a(t^k) is exact up to k*self.order + k - 1
        if order > k * self.order + k - 1:
            raise ValueError("substitution would create coefficients beyond the known order")
        return TruncatedSeries(order, tuple(out))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self):
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(int(doc["order"]), tuple(Fraction(c) for c in doc["coeffs"]))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(t^{self.order + 1}))"


def series_arith(a, b=None, op="add", k=None):
    """Dispatch helper: ``op`` is one of add, mul, pow, recip."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "pow":
        if k is None:
            raise ValueError("pow needs an exponent k")
        return a ** k
    if op == "recip":
        return a.recip()
    raise ValueError(f"unknown series op {op!r}")


@dataclass(frozen=True, order=True)
class CycleType:
    """Cycle counts of a permutation as sorted ``((k, m_k), ...)`` with m_k > 0."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(k), int(m)) for k, m in self.parts if m))
        for k, m in parts:
            if k < 1 or m < 0:
                raise ValueError(f"bad cycle entry {(k, m)}")
        if len({k for k, _ in parts}) != len(parts):
            raise ValueError("duplicate cycle length")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d.items()))

    def as_dict(self):
        return dict(self.parts)

    @property
    def degree(self):
        return sum(k * m for k, m in self.parts)

    @property
    def moved(self):
        return sum(k * m for k, m in self.parts if k > 1)

    def is_identity(self):
        return self.moved == 0

    def __str__(self):
        return " ".join(f"{k}^{m}" for k, m in self.parts) or "-"


@dataclass(frozen=True)
class CycleIndex:
    """Average of cycle-type monomials over a permutation group."""

    degree: int
    terms: dict

    def __post_init__(self):
        terms = {}
        for ct, w in self.terms.items():
            if not isinstance(ct, CycleType):
                ct = CycleType.from_dict(ct) if isinstance(ct, dict) else CycleType(ct)
            if ct.degree != self.degree:
                raise ValueError(f"cycle type {ct} does not cover {self.degree} points")
            w = Fraction(w)
            if w <= 0:
                raise ValueError("cycle index weights must be positive")
            terms[ct] = terms.get(ct, Fraction(0)) + w
        if sum(terms.values()) != 1:
            raise ValueError("cycle index weights must sum to 1")
        object.__setattr__(self, "terms", dict(sorted(terms.items())))

    @classmethod
    def from_histogram(cls, degree, hist):
        total = sum(hist.values())
        return cls(degree, {ct: Fraction(c, total) for ct, c in hist.items()})

    def evaluate(self, values):
        """Evaluate with s_k -> values[k] (a mapping or callable)."""
        get = values if callable(values) else values.__getitem__
        total = 0
        for ct, w in self.terms.items():
            term = w
            for k, m in ct.parts:
                term *= get(k) ** m
            total += term
        return total

    def to_json(self):
        return [
            {"cycles": {str(k): m for k, m in ct.parts}, "weight": str(w)}
            for ct, w in self.terms.items()
        ]

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        terms = {}
        for t in doc:
            ct = CycleType(tuple((int(k), int(m)) for k, m in t["cycles"].items()))
            terms[ct] = Fraction(t["weight"])
        degree = next(iter(terms)).degree
        return cls(degree, terms)


def cycle_index_character(Z, a, order):
    """Fixed-point character: substitute s_k -> a(t^k) into the cycle index."""
    if a[0] != 1:
        raise ValueError("seed character must have constant term 1")
    if order > a.order:
        raise ValueError(f"seed known only to order {a.order}")
    a = a.truncate(order)
    substituted = {}
    powers = {}

    def power(k, m):
        key = (k, m)
        if key not in powers:
            if k not in substituted:
                substituted[k] = a.subs_power(k, order)
            powers[key] = substituted[k] ** m
        return powers[key]

    total = TruncatedSeries.from_coeffs([0], order)
    for ct, w in Z.terms.items():
        term = TruncatedSeries.one(order)
        for k, m in ct.parts:
            if k > order:
                # a(t^k) = 1 + O(t^k): contributes nothing below t^k
                continue
            term = term * power(k, m)
        total = total + term * w
    if not total.is_integral():
        bad = [i for i, c in enumerate(total.coeffs) if c.denominator != 1]
        raise ValidationError(
            "non-integral orbit count: cycle index inconsistent with a group",
            witness={"coefficients": bad},
        )
    return total


def eta_product(order, power=1):
    """prod_{n>=1} (1 - t^n)^power truncated at ``order``."""
    s = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        factor = TruncatedSeries.from_coeffs([1] + [0] * (n - 1) + [-1], order)
        s = s * factor
    return s ** power


@lru_cache(maxsize=None)
def _e8_shell_counts(max_norm2):
    """Number of E8 vectors with |x|^2 = 2m for m = 0..max_norm2.

    E8 = D8 u (D8 + (1/2)^8).  In doubled coordinates y = 2x both cosets are
    integer vectors with all-even or all-odd entries and sum(y) = 0 mod 4;
    |x|^2 / 2 = sum(y^2) / 8.
    """
    limit = 8 * max_norm2
    counts = [0] * (max_norm2 + 1)
    for parity in (0, 1):
        coords = [y for y in range(-limit, limit + 1) if y % 2 == parity and y * y <= limit]
        # state: (sum mod 4, sum of squares) -> number of partial vectors
        states = {(0, 0): 1}
        for _ in range(8):
            nxt = {}
            for (s, q), c in states.items():
                for y in coords:
                    q2 = q + y * y
                    if q2 > limit:
                        continue
                    key = ((s + y) % 4, q2)
                    nxt[key] = nxt.get(key, 0) + c
            states = nxt
        for (s, q), c in states.items():
            if s == 0 and q % 8 == 0:
                counts[q // 8] += c
    return tuple(counts)


def e8_theta(order):
    """Theta series of E8 in t = q: sum over lattice vectors of t^(|x|^2/2)."""
    return TruncatedSeries.from_coeffs(list(_e8_shell_counts(order)), order)


def e8cubed_character(order):
    """Shifted character of the c=24 lattice VOA of E8^3.

    a(t) = t * (theta_E8 / eta^8)^3 = theta_E8(t)^3 / prod (1-t^n)^24.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    theta = e8_theta(order)
    return theta ** 3 * eta_product(order, power=-24)


def sym_limit_character(a, order):
    """prod_{m>=1} (1 - t^m)^(-a_m): the N -> infinity limit of the S_N character."""
    if order > a.order:
        raise ValueError(f"seed known only to order {a.order}")
    if a[0] != 1:
        raise ValueError("seed character must have constant term 1")
    out = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        am = a[m]
        if am.denominator != 1 or am < 0:
            raise ValueError(f"a_{m} = {am} is not a nonnegative integer")
        am = int(am)
        if am == 0:
            continue
        # (1 - t^m)^(-am) = sum_j C(am + j - 1, j) t^(m j)
        coeffs = [0] * (order + 1)
        for j in range(order // m + 1):
            coeffs[m * j] = comb(am + j - 1, j)
        out = out * TruncatedSeries.from_coeffs(coeffs, order)
    return out

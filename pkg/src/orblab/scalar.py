"""Exact scalars of the form sum_i c_i sqrt(s_i), with a float fallback.

Each radicand s_i is a squarefree positive integer and each c_i a nonzero
Fraction, so the representation is canonical and ``==`` is exact equality
in the field Q(sqrt 2, sqrt 3, sqrt 5, ...).  A Scalar built from a Python
float (or divided by a multi-term value) drops to an mpmath float at
``PRECISION`` bits, and everything it touches stays float.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy import factorint

PRECISION = 113
FLOAT_RTOL = 2.0**-80


@lru_cache(maxsize=4096)
def squarefree_split(n):
    """Return (r, s) with n = r^2 s and s squarefree."""
    if n <= 0:
        raise ValueError("need a positive integer")
    r, s = 1, 1
    for p, e in factorint(n).items():
        r *= p ** (e // 2)
        if e % 2:
            s *= p
    return r, s


def _to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational")


class Scalar:
    __slots__ = ("_terms", "_float")

    def __init__(self, value=0):
        self._terms = None
        self._float = None
        if isinstance(value, Scalar):
            self._terms, self._float = value._terms, value._float
        elif isinstance(value, float):
            with mpmath.workprec(PRECISION):
                self._float = mpmath.mpf(value)
        elif isinstance(value, mpmath.mpf):
            self._float = value
        elif isinstance(value, dict):
            self._terms = {s: c for s, c in value.items() if c}
        else:
            c = _to_fraction(value)
            self._terms = {1: c} if c else {}

    # constructors ------------------------------------------------------
    @classmethod
    def radical(cls, coef, rad):
        """coef * sqrt(rad) for rational coef and rational rad >= 0."""
        coef = _to_fraction(coef)
        rad = _to_fraction(rad)
        if rad < 0:
            raise ValueError("negative radicand")
        if rad == 0 or coef == 0:
            return cls(0)
        # sqrt(p/q) = sqrt(p q) / q
        num = rad.numerator * rad.denominator
        r, s = squarefree_split(num)
        return cls({s: coef * Fraction(r, rad.denominator)})

    @classmethod
    def sqrt(cls, x):
        return cls.radical(1, x)

    @classmethod
    def inv_sqrt(cls, x):
        x = _to_fraction(x)
        if x <= 0:
            raise ValueError("inv_sqrt of a nonpositive number")
        return cls.radical(1, 1 / x)

    # introspection -----------------------------------------------------
    @property
    def is_exact(self):
        return self._float is None

    @property
    def terms(self):
        if not self.is_exact:
            raise ValueError("float scalar has no exact terms")
        return dict(self._terms)

    @property
    def is_rational(self):
        return self.is_exact and set(self._terms) <= {1}

    def rational(self):
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    def to_mpf(self):
        if self._float is not None:
            return self._float
        with mpmath.workprec(PRECISION):
            return mpmath.fsum(
                mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(s)
                for s, c in self._terms.items()
            ) if self._terms else mpmath.mpf(0)

    def __float__(self):
        return float(self.to_mpf())

    def square_exact(self):
        """Exact square as a Scalar; cheap check used by squared comparisons."""
        return self * self

    # arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other):
        return other if isinstance(other, Scalar) else Scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        if not (self.is_exact and other.is_exact):
            with mpmath.workprec(PRECISION):
                return Scalar(self.to_mpf() + other.to_mpf())
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        if not self.is_exact:
            return Scalar(-self._float)
        return Scalar({s: -c for s, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not (self.is_exact and other.is_exact):
            with mpmath.workprec(PRECISION):
                return Scalar(self.to_mpf() * other.to_mpf())
        if not self._terms or not other._terms:
            return Scalar(0)
        out = {}
        for s1, c1 in self._terms.items():
            for s2, c2 in other._terms.items():
                if s1 == 1:
                    s, c = s2, c1 * c2
                elif s2 == 1:
                    s, c = s1, c1 * c2
                else:
                    r, s = squarefree_split(s1 * s2)
                    c = c1 * c2 * r
                out[s] = out.get(s, 0) + c
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_exact and len(other._terms) == 1:
            (s, c), = other._terms.items()
            # 1 / (c sqrt s) = sqrt(s) / (c s)
            return self * Scalar({s: 1 / (c * s)})
        if other.is_exact and not other._terms:
            raise ZeroDivisionError("division by zero scalar")
        with mpmath.workprec(PRECISION):
            return Scalar(self.to_mpf() / other.to_mpf())

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = Scalar(1)
        for _ in range(k):
            out = out * self
        return out

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float, str, mpmath.mpf)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self._terms == other._terms
        return self.isclose(other)

    def isclose(self, other, rtol=FLOAT_RTOL):
        other = self._coerce(other)
        a, b = self.to_mpf(), other.to_mpf()
        scale = max(abs(a), abs(b))
        return abs(a - b) <= rtol * scale or scale == 0

    def __hash__(self):
        if self.is_exact:
            return hash(frozenset(self._terms.items()))
        return hash(float(self._float))

    def __bool__(self):
        return bool(self._terms) if self.is_exact else bool(self._float)

    def sign(self):
        if self.is_exact and not self._terms:
            return 0
        return 1 if self.to_mpf() > 0 else -1

    # serialization -----------------------------------------------------
    def to_json(self):
        if not self.is_exact:
            return float(self._float)
        if self.is_rational:
            return str(self.rational())
        items = [{"rad": str(s), "coef": str(c)} for s, c in sorted(self._terms.items())]
        return items[0] if len(items) == 1 else items

    @classmethod
    def from_json(cls, value):
        if isinstance(value, float):
            return cls(value)
        if isinstance(value, (int, str)):
            return cls(Fraction(value))
        if isinstance(value, dict):
            return cls.radical(value["coef"], value["rad"])
        if isinstance(value, list):
            out = cls(0)
            for item in value:
                out = out + cls.radical(item["coef"], item["rad"])
            return out
        raise TypeError(f"unreadable scalar {value!r}")

    def __repr__(self):
        if not self.is_exact:
            return f"Scalar({mpmath.nstr(self._float, 20)})"
        if not self._terms:
            return "0"
        parts = []
        for s, c in sorted(self._terms.items()):
            parts.append(str(c) if s == 1 else f"{c}*sqrt({s})")
        return " + ".join(parts)


ZERO = Scalar(0)
ONE = Scalar(1)

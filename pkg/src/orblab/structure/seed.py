"""Seed structure-constant tables: loading, validation, bundled seeds.

A table stores f_{abc} = <a, b_p c> on a real orthonormal basis, with
p = wt(b) + wt(c) - wt(a) - 1.  Only nonzero constants are stored; every
triple of labels in the table is defined (missing means zero), so a table
with cutoff w must contain *all* basis states of weight <= w.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ValidationError
from ..groups import partitions, z_lambda
from ..scalar import ONE, ZERO, Scalar
from ..series import CycleType, TruncatedSeries

VAC = "vac"
HEISENBERG_MAX_CUTOFF = 4


@dataclass
class SeedTable:
    name: str
    cutoff: int
    labels: dict  # id -> weight, includes VAC
    constants: dict  # (a, b, c) -> Scalar, zeros omitted
    meta: dict = field(default_factory=dict)

    def f(self, a, b, c):
        for x in (a, b, c):
            if x not in self.labels:
                raise ValidationError(
                    f"label {x!r} not in table {self.name!r} (cutoff {self.cutoff})", witness=x
                )
        return self.constants.get((a, b, c), ZERO)

    def wt(self, label):
        return self.labels[label]

    @property
    def label_weights(self):
        """Non-vacuum labels and their weights."""
        return {l: w for l, w in self.labels.items() if l != VAC}

    def labels_of_weight(self, w):
        return sorted(l for l, x in self.labels.items() if x == w)

    def character(self, order=None):
        order = self.cutoff if order is None else order
        if order > self.cutoff:
            raise ValueError(f"table only complete up to weight {self.cutoff}")
        counts = [0] * (order + 1)
        for w in self.labels.values():
            if w <= order:
                counts[w] += 1
        return TruncatedSeries.from_coeffs(counts, order)

    def to_json(self):
        doc = {
            "name": self.name,
            "cutoff": self.cutoff,
            "labels": [{"id": l, "wt": w} for l, w in self.labels.items()],
            "constants": [
                {"a": a, "b": b, "c": c, "value": v.to_json()}
                for (a, b, c), v in sorted(self.constants.items())
            ],
        }
        doc.update(self.meta)
        return doc

    def dumps(self):
        return json.dumps(self.to_json(), indent=1)


def _basic_checks(t):
    if VAC not in t.labels:
        raise ValidationError("seed has no vacuum label 'vac'")
    if t.labels[VAC] != 0:
        raise ValidationError("vacuum must have weight 0", witness=VAC)
    for l, w in t.labels.items():
        if l != VAC and not 1 <= w <= t.cutoff:
            raise ValidationError(f"label {l!r} has weight {w} outside 1..{t.cutoff}", witness=l)
    if t.f(VAC, VAC, VAC) != ONE:
        raise ValidationError("f(vac, vac, vac) must be 1", witness=(VAC, VAC, VAC))
    labels = list(t.labels)
    for x in labels:
        if x == VAC:
            continue
        for trip in ((VAC, VAC, x), (VAC, x, VAC), (x, VAC, VAC)):
            if t.f(*trip):
                raise ValidationError("two-vacuum constant must vanish", witness=trip)
    for a, b in itertools.product(labels, repeat=2):
        delta = ONE if a == b else ZERO
        if t.f(a, VAC, b) != delta:
            raise ValidationError("vacuum field must act as identity", witness=(a, VAC, b))
        if t.labels[a] <= t.labels[b] and t.f(a, b, VAC) != delta:
            raise ValidationError("creation property violated", witness=(a, b, VAC))
        # weight-one states are quasi-primary, so their vacuum pairing is
        # +-delta on an orthonormal basis; Jacobi alone cannot see a rescaling
        if t.labels[a] == t.labels[b] == 1:
            v = t.f(VAC, a, b)
            if (a == b and v != ONE and v != -ONE) or (a != b and v):
                raise ValidationError("weight-one pairing not orthonormal", witness=(VAC, a, b))


def validate_table(t, jacobi=True, cap=None):
    """Raise ValidationError (with witness) if ``t`` is not a consistent table."""
    _basic_checks(t)
    if jacobi:
        from .jacobi import jacobi_check

        rep = jacobi_check(t, cap=cap, stop_at_first=True)
        if not rep.passed:
            raise ValidationError("Jacobi identity violated", witness=rep.failures[0])
    return t


def load_seed(document, validate=True, jacobi_cap=None):
    """Build a SeedTable from a JSON document (dict or JSON text)."""
    doc = json.loads(document) if isinstance(document, str) else document
    try:
        labels = {}
        for item in doc["labels"]:
            if item["id"] in labels:
                raise ValidationError("duplicate label", witness=item["id"])
            labels[item["id"]] = int(item["wt"])
        constants = {}
        for item in doc.get("constants", []):
            key = (item["a"], item["b"], item["c"])
            for x in key:
                if x not in labels:
                    raise ValidationError(f"constant uses unknown label {x!r}", witness=key)
            if key in constants:
                raise ValidationError("duplicate constant", witness=key)
            v = Scalar.from_json(item["value"])
            if v:
                constants[key] = v
        cutoff = int(doc["cutoff"])
    except KeyError as exc:
        raise ValidationError(f"seed document missing field {exc}") from None
    meta = {k: doc[k] for k in ("N", "group") if k in doc}
    t = SeedTable(doc.get("name", "seed"), cutoff, labels, constants, meta)
    if validate:
        validate_table(t, cap=jacobi_cap)
    return t


# --- bundled seeds -----------------------------------------------------------


def vacuum_seed():
    return SeedTable("vac", 0, {VAC: 0}, {(VAC, VAC, VAC): ONE})


def unit1_seed():
    """One weight-1 label with the constants of a free boson truncated at weight 1."""
    c = {(VAC, VAC, VAC): ONE, (VAC, "a", "a"): ONE, ("a", VAC, "a"): ONE, ("a", "a", VAC): ONE}
    return SeedTable("unit1", 1, {VAC: 0, "a": 1}, c)


def _heis_label(parts):
    if not parts:
        return VAC
    if parts == (1,):
        return "a"
    return "a" + "".join(map(str, parts))


def _apply_modes(state, modes):
    """Apply a normal-ordered product of Heisenberg modes to a Fock vector.

    ``state`` maps sorted part tuples to coefficients.  Annihilators
    (n > 0) act first, then creators; a_0 vanishes on the zero-momentum
    Fock space, and [a_m, a_n] = m delta_{m+n,0}.
    """
    ann = [n for n in modes if n > 0]
    cre = [-n for n in modes if n < 0]
    out = {}
    for parts, coef in state.items():
        cur = {parts: coef}
        for n in ann:
            nxt = {}
            for p, c in cur.items():
                mult = p.count(n)
                if mult:
                    q = list(p)
                    q.remove(n)
                    key = tuple(q)
                    nxt[key] = nxt.get(key, 0) + c * n * mult
            cur = nxt
            if not cur:
                break
        for p, c in cur.items():
            key = tuple(sorted(p + tuple(cre), reverse=True))
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _heis_mode(b_parts, p, c_parts, w_out):
    """b_p applied to the (unnormalized) Fock monomial c, projected to weight w_out."""
    w_c = sum(c_parts)
    rng = [n for n in range(-w_out, w_c + 1) if n]
    result = {}
    ks = b_parts
    for ns in itertools.product(rng, repeat=len(ks)):
        if sum(n + k for n, k in zip(ns, ks)) != p + 1:
            continue
        coef = 1
        for n, k in zip(ns, ks):
            # d^(k-1) a(z) / (k-1)! has modes C(-n-1, k-1) a_n z^(-n-k)
            top = -n - 1
            num = 1
            for i in range(k - 1):
                num *= top - i
            coef *= Fraction(num, 1) / _fact(k - 1)
        if not coef:
            continue
        for key, v in _apply_modes({c_parts: 1}, ns).items():
            if sum(key) == w_out:
                result[key] = result.get(key, 0) + coef * v
    return result


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _z(parts):
    ct = CycleType.from_dict({k: parts.count(k) for k in set(parts)}) if parts else None
    return z_lambda(ct) if ct else 1


def heisenberg_seed(cutoff):
    """Rank-one free boson up to weight ``cutoff``, normalized partition basis."""
    if cutoff > HEISENBERG_MAX_CUTOFF:
        raise ValueError(f"Heisenberg seed supports cutoff <= {HEISENBERG_MAX_CUTOFF}")
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    basis = [()]
    for w in range(1, cutoff + 1):
        basis.extend(tuple(sorted(p, reverse=True)) for p in partitions(w))
    labels = {_heis_label(p): sum(p) for p in basis}
    constants = {}
    for A, B, C in itertools.product(basis, repeat=3):
        wa, wb, wc = sum(A), sum(B), sum(C)
        p = wb + wc - wa - 1
        vec = _heis_mode(B, p, C, wa)
        coef = vec.get(A, 0)
        if coef:
            val = Scalar.radical(coef, Fraction(_z(A), _z(B) * _z(C)))
            constants[(_heis_label(A), _heis_label(B), _heis_label(C))] = val
    return SeedTable(f"heis:{cutoff}", cutoff, labels, constants)


def builtin_seed(name):
    """Structure-constant seeds shipped with the package: vac, unit1, heis:<cutoff>."""
    if name == "vac":
        return vacuum_seed()
    if name == "unit1":
        return unit1_seed()
    if name.startswith("heis:"):
        return heisenberg_seed(int(name.split(":", 1)[1]))
    raise ValueError(f"no builtin structure-constant seed {name!r}")


"""Symmetrized fixed-point states, tensor constants and the brute-force sum."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ..errors import BudgetExceeded
from ..groups import Restriction, stabilizers
from ..orbits import VACUUM, WeightedFunction, orbit_representatives
from ..scalar import ONE, ZERO, Scalar
from .seed import VAC

BRUTEFORCE_MAX_ORDER = 200


@dataclass(frozen=True)
class SymmetrizedState:
    """phi_g = A_full^(-1/2) sum_{sigma in G} sigma g for an orbit representative g."""

    rep: WeightedFunction
    group: str
    N: int
    A: int  # restriction-group elements fixing g
    A_full: int  # A * |G| * |pointwise stabilizer of supp g|
    restriction: Restriction

    @property
    def weight(self):
        return self.rep.weight

    @property
    def id(self):
        return str(self.rep)


@lru_cache(maxsize=4096)
def _normalization(g, G, budget):
    K = g.support
    st = stabilizers(G, K, budget)
    labels = dict(g.items)
    A = sum(1 for perm in st.restriction.perms
            if all(labels[perm[i]] == labels[k] for i, k in enumerate(K)))
    return SymmetrizedState(g, G.spec, G.N, A, A * G.order * st.pointwise, st.restriction)


def normalization(g, G, budget=None):
    """A(g) from the restriction group G(K) and the full norm A_full(g, N)."""
    return _normalization(g, G, budget)


def fixed_point_states(G, seed, max_weight, budget=None):
    """Orthonormal basis states of V^G with weight <= max_weight, vacuum first."""
    if max_weight > seed.cutoff:
        raise ValueError(f"seed {seed.name} only known up to weight {seed.cutoff}")
    lw = seed.label_weights
    out = []
    for n in range(max_weight + 1):
        reps = [VACUUM] if n == 0 else orbit_representatives(G, lw, n)
        out.extend(normalization(r, G, budget) for r in reps)
    return out


def tensor_constant(h1, h2, h3, seed):
    """prod_x f_{h1(x) h2(x) h3(x)}; points where all three are vacuum give 1."""
    d1, d2, d3 = dict(h1.items), dict(h2.items), dict(h3.items)
    out = ONE
    for x in set(d1) | set(d2) | set(d3):
        v = seed.f(d1.get(x, VAC), d2.get(x, VAC), d3.get(x, VAC))
        if not v:
            return ZERO
        out = out * v
    return out


def _orbit_counter(g, elements):
    return Counter(g.act(p) for p in elements)


def bruteforce_constant(g1, g2, g3, G, seed, max_order=BRUTEFORCE_MAX_ORDER, budget=None):
    """(prod A_full)^(-1/2) sum over sigma in G^3 of C(sigma1 g1, sigma2 g2, sigma3 g3)."""
    if G.order > max_order:
        raise BudgetExceeded(f"brute-force sum limited to |G| <= {max_order}, got {G.order}")
    elements = G.element_list(budget)
    states = [normalization(g, G, budget) for g in (g1, g2, g3)]
    orbits = [_orbit_counter(g, elements) for g in (g1, g2, g3)]
    total = ZERO
    for h1, m1 in orbits[0].items():
        for h2, m2 in orbits[1].items():
            for h3, m3 in orbits[2].items():
                c = tensor_constant(h1, h2, h3, seed)
                if c:
                    total = total + (m1 * m2 * m3) * c
    norm = ONE
    for s in states:
        norm = norm * Scalar.inv_sqrt(s.A_full)
    return total * norm

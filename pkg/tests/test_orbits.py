from math import comb, log

import pytest
from hypothesis import given, settings, strategies as st

from orblab.errors import BudgetExceeded
from orblab.groups import build_group, parse_group_spec
from orblab.orbits import (
    OrbitTable,
    WeightedFunction,
    bn_table,
    count_orbits_direct,
    fn_table,
    gl_fn_bounds,
    growth_exponent,
    labels_from_series,
    oligomorphic_check,
    orbit_representatives,
)
from orblab.series import TruncatedSeries

T = TruncatedSeries.from_coeffs
ONE_LABEL = {"a": 1}


def test_weighted_function_action():
    g = WeightedFunction(((0, "a"), (2, "b")), 3)
    h = g.act((1, 2, 0))
    assert h.items == ((0, "b"), (1, "a"))
    assert h.weight == g.weight and len(h.support) <= h.weight


def test_bn_examples():
    assert bn_table(build_group("S", 3), T([1, 1], 3), 3).counts() == [1, 1, 1, 1]
    assert bn_table(build_group("GL", 2, 2), T([1, 1], 4), 4).counts() == [1, 2, 2, 2, 1]


@pytest.mark.parametrize("N", [4, 6, 8, 10, 12])
def test_zn_weight4_orbits_grow(N):
    b4 = bn_table(build_group("Z", N), T([1, 0, 1], 4), 4).counts()[4]
    assert b4 >= N / 2 - 1


def test_representative_examples():
    reps = orbit_representatives(build_group("S", 2), ONE_LABEL, 1)
    assert [r.items for r in reps] == [((0, "a"),)]
    reps = orbit_representatives(build_group("GL", 2, 2), ONE_LABEL, 1)
    assert [r.items for r in reps] == [((0, "a"),), ((1, "a"),)]
    # 3-subsets of F_2^3: {0,u,v}, a dependent triple u+v=w, an independent triple
    reps = orbit_representatives(build_group("GL", 3, 2), ONE_LABEL, 3)
    assert [r.support for r in reps] == [(0, 1, 2), (1, 2, 3), (1, 2, 4)]


def test_representatives_are_orbit_minima():
    G = build_group("Z", 5)
    lw = {"a": 1, "b": 1, "c": 2}
    for r in orbit_representatives(G, lw, 3):
        assert all(r.key() <= r.act(p).key() for p in G.elements())


def test_state_budget():
    with pytest.raises(BudgetExceeded):
        orbit_representatives(build_group("S", 6), {f"x{i}": 1 for i in range(30)}, 4, budget=1000)


def test_fn_examples():
    assert fn_table(build_group("S", 6), 4).counts() == [1, 1, 1, 1, 1]
    f = fn_table(build_group("GL", 3, 2), 3).counts()
    assert f[2] == 2 and f[3] == 3
    G = build_group("GL", 3, 2)
    assert fn_table(G, 4, method="direct").counts() == fn_table(G, 4, method="cycle_index").counts()


def test_fn_sn_closed_form_matches_direct():
    G = build_group("S", 5)
    assert fn_table(G, 5).counts() == fn_table(G, 5, method="direct").counts()


def test_gl_fn_bounds_examples():
    assert (gl_fn_bounds(2, 2).lower, gl_fn_bounds(2, 2).upper) == (2, 4)
    assert (gl_fn_bounds(0, 2).lower, gl_fn_bounds(0, 2).upper) == (1, 1)
    assert gl_fn_bounds(4, 2).upper == 34
    assert gl_fn_bounds(3, 2).heuristic and not gl_fn_bounds(4, 2).heuristic


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gl_fn_upper_bound(n):
    for N in range(n, 5):
        assert fn_table(build_group("GL", N, 2), n).counts()[n] <= gl_fn_bounds(n, 2).upper


def test_gl_fn_lower_bound_small_n():
    for n in (1, 2, 3):
        for N in range(n, 5):
            assert fn_table(build_group("GL", N, 2), n).counts()[n] >= gl_fn_bounds(n, 2).lower


def test_gl_f4_brute_force_value():
    # brute force over all 4-subsets of F_2^4: 5 orbits, below C(4, 2) = 6
    f4 = fn_table(build_group("GL", 4, 2), 4, method="direct").counts()[4]
    assert f4 == 5
    assert f4 < gl_fn_bounds(4, 2).lower


GROUPS = ["S:2", "S:3", "S:4", "Z:3", "Z:5", "Z:7", "GL:2:2", "GL:3:2", "GL:2:3"]


@settings(max_examples=30)
@given(st.sampled_from(GROUPS), st.lists(st.integers(0, 3), min_size=1, max_size=3),
       st.integers(0, 4))
def test_burnside_equals_direct(spec, tail, n):
    G = parse_group_spec(spec)
    a = T([1] + tail, 4)
    lw = labels_from_series(a, 4)
    try:
        direct = count_orbits_direct(G, lw, n, budget=2 * 10**5)
    except BudgetExceeded:
        return
    assert bn_table(G, a, 4).counts()[n] == direct


@pytest.mark.parametrize("spec", ["S:4", "Z:6", "GL:3:2"])
def test_burnside_equals_direct_to_weight6(spec):
    G = parse_group_spec(spec)
    a = T([1, 1, 1], 6)
    lw = labels_from_series(a, 6)
    b = bn_table(G, a, 6).counts()
    assert b == [count_orbits_direct(G, lw, n) for n in range(7)]


@pytest.mark.parametrize("spec", ["S:5", "Z:6", "GL:3:2"])
def test_fn_at_most_bn(spec):
    G = parse_group_spec(spec)
    f = fn_table(G, 4).counts()
    b = bn_table(G, T([1, 1, 1], 4), 4).counts()
    assert all(x <= y for x, y in zip(f, b))


@pytest.mark.parametrize("kind,q,Ns", [("S", None, range(1, 8)), ("GL", 2, range(1, 5))])
def test_bn_nondecreasing_for_nested_families(kind, q, Ns):
    a = T([1, 1, 1], 4)
    rows = [bn_table(build_group(kind, N, q), a, 4).counts() for N in Ns]
    for n in range(5):
        col = [r[n] for r in rows]
        assert col == sorted(col)


def test_oligo_sn():
    rep = oligomorphic_check("S", T([1, 1], 4), 4, 8)
    assert rep.stabilized_at == {n: max(n, 1) for n in range(5)}
    assert rep.verdict == "consistent with nested oligomorphic"
    assert all(v is not False for v in rep.bound_ok.values())


def test_oligo_zn():
    rep = oligomorphic_check("Z", T([1, 1, 1], 4), 4, 12)
    b4 = [rep.bn[4][N] for N in range(1, 13)]
    assert b4[-3] < b4[-2] < b4[-1]
    assert rep.verdict == "not oligomorphic"


def test_oligo_gl_inconclusive_when_too_short():
    rep = oligomorphic_check("GL", T([1, 1], 4), 4, 3, q=2)
    assert rep.verdict == "inconclusive"
    assert rep.stabilized_at[4] is None


def test_growth_exponent_examples():
    counts = [16 ** (n * n // 4) if n % 2 == 0 else 2 ** (n * n) for n in range(7)]
    for est in growth_exponent(counts):
        assert abs(float(est.alpha) - log(2)) < 1e-12
    for est in growth_exponent([1] * 6):
        assert est.alpha == 0
    with pytest.raises(ValueError):
        growth_exponent([1, 1, 0, 1])


def test_growth_exponent_from_table():
    t = bn_table(build_group("GL", 4, 2), T([1, 1], 4), 4)
    est = growth_exponent(t)
    assert [e.n for e in est] == [1, 2, 3, 4]
    assert est[0].delta is None and all(e.alpha > 0 for e in est)


def test_orbit_table_json():
    t = bn_table(build_group("Z", 5), T([1, 2], 3), 3, seed_name="x")
    assert OrbitTable.from_json(t.to_json()) == t
    assert t.as_records()[0]["kind"] == "bn"

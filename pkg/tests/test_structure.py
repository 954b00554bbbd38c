import itertools
import json
from fractions import Fraction

import pytest

from orblab.errors import BudgetExceeded, ValidationError
from orblab.groups import build_group
from orblab.orbits import VACUUM, WeightedFunction as W
from orblab.scalar import ONE, ZERO, Scalar
from orblab.structure import (
    SeedTable,
    bruteforce_constant,
    coset_analysis,
    factored_constant,
    fixed_point_states,
    fixed_point_table,
    freeness_report,
    heisenberg_seed,
    jacobi_check,
    limit_constant,
    limit_table,
    load_seed,
    normalization,
    sn_m_closed_form,
    tensor_constant,
    unit1_seed,
    vacuum_seed,
)

SQRT2 = Scalar.sqrt(2)


def a_at(*points, label="a", weight=1):
    return W(tuple((p, label) for p in points), weight * len(points))


def unit1_doc(override=None):
    consts = {("vac", "vac", "vac"): "1", ("vac", "a", "a"): "1",
              ("a", "vac", "a"): "1", ("a", "a", "vac"): "1"}
    consts.update(override or {})
    return {"name": "t", "cutoff": 1,
            "labels": [{"id": "vac", "wt": 0}, {"id": "a", "wt": 1}],
            "constants": [{"a": a, "b": b, "c": c, "value": v} for (a, b, c), v in consts.items()]}


# --- seeds -----------------------------------------------------------------------


def test_load_trivial_seed():
    t = load_seed(unit1_doc())
    assert t.f("a", "a", "a") == ZERO and t.f("vac", "a", "a") == ONE


def test_rescaled_pairing_rejected_with_witness():
    with pytest.raises(ValidationError) as exc:
        load_seed(unit1_doc({("vac", "a", "a"): "2"}))
    assert exc.value.witness == ("vac", "a", "a")


def test_missing_vacuum():
    doc = unit1_doc()
    doc["labels"] = [{"id": "a", "wt": 1}]
    doc["constants"] = []
    with pytest.raises(ValidationError):
        load_seed(doc)


def test_two_vacuum_constant_rejected():
    with pytest.raises(ValidationError):
        load_seed(unit1_doc({("a", "vac", "vac"): "1"}))


def test_unknown_label_in_constant():
    doc = unit1_doc()
    doc["constants"].append({"a": "b", "b": "a", "c": "a", "value": "1"})
    with pytest.raises(ValidationError):
        load_seed(doc)


def test_vacuum_seed_valid():
    t = load_seed(vacuum_seed().to_json())
    assert t.labels == {"vac": 0}


@pytest.mark.parametrize("cutoff", [0, 1, 2, 3])
def test_heisenberg_validates(cutoff):
    t = heisenberg_seed(cutoff)
    assert load_seed(t.dumps()).constants == t.constants


def test_heisenberg_examples():
    h1 = heisenberg_seed(1)
    assert set(h1.labels) == {"vac", "a"}
    assert h1.f("vac", "a", "a") == ONE and h1.f("a", "a", "a") == ZERO
    h2 = heisenberg_seed(2)
    assert h2.f("a11", "a", "a") == SQRT2
    assert h2.f("a2", "vac", "a2") == ONE
    # a2 is the normalized derivative of the current, not quasi-primary
    assert h2.f("vac", "a2", "a2") == -3
    with pytest.raises(ValueError):
        heisenberg_seed(5)


def test_heisenberg_character():
    assert list(heisenberg_seed(4).character().coeffs) == [1, 1, 2, 3, 5]


def test_unknown_label_lookup(unit1):
    with pytest.raises(ValidationError):
        unit1.f("a", "b", "vac")


def test_seed_json_round_trip(heis2):
    doc = json.loads(heis2.dumps())
    assert {"name", "cutoff", "labels", "constants"} <= set(doc)
    assert load_seed(doc).constants == heis2.constants


# --- states --------------------------------------------------------------------------


def test_tensor_constant_examples(unit1):
    assert tensor_constant(VACUUM, VACUUM, VACUUM, unit1) == ONE
    g1 = W(((0, "a"), (1, "a")), 2)
    assert tensor_constant(g1, a_at(0), a_at(1), unit1) == ONE
    assert tensor_constant(a_at(0), VACUUM, VACUUM, unit1) == ZERO


def test_normalization_examples(unit1):
    S2 = build_group("S", 2)
    s = normalization(a_at(0), S2)
    assert s.A == 1
    s = normalization(a_at(0, 1), S2)
    assert (s.A, s.A_full) == (2, 4)
    s = normalization(W(((0, "a"), (1, "b")), 2), S2)
    assert (s.A, s.A_full) == (1, 2)
    s = normalization(W(((0, "a2"), (1, "a11")), 4), S2)
    assert (s.A, s.A_full) == (1, 2)


def test_bruteforce_examples(unit1):
    aa, a = a_at(0, 1), a_at(0)
    assert bruteforce_constant(aa, a, a, build_group("S", 2), unit1) == ONE
    v = bruteforce_constant(aa, a, a, build_group("S", 3), unit1)
    assert v.square_exact() == Fraction(4, 3) and v.sign() > 0
    with pytest.raises(BudgetExceeded):
        bruteforce_constant(aa, a, a, build_group("S", 6), unit1)


@pytest.mark.parametrize("spec", [("S", 3), ("Z", 4), ("GL", 2, 2)])
def test_states_orthonormal(spec, heis2):
    G = build_group(*spec)
    states = fixed_point_states(G, heis2, 2)
    for s1, s2 in itertools.product(states, repeat=2):
        v = factored_constant(s1.rep, VACUUM, s2.rep, G, heis2)
        assert v == (ONE if s1.rep == s2.rep else ZERO)
        if s1.weight == s2.weight:
            assert factored_constant(s1.rep, s2.rep, VACUUM, G, heis2) == v


def test_factored_examples(unit1):
    S3 = build_group("S", 3)
    assert factored_constant(a_at(0), a_at(0), a_at(0), S3, unit1) == ZERO
    for g in (a_at(0), a_at(0, 1)):
        assert factored_constant(g, g, VACUUM, S3, unit1) == ONE


@pytest.mark.parametrize("spec", [("Z", 3), ("Z", 4), ("S", 4)])
def test_factored_matches_bruteforce_extra_groups(spec, heis2):
    G = build_group(*spec)
    reps = [s.rep for s in fixed_point_states(G, heis2, 2)]
    for g1, g2, g3 in itertools.product(reps, repeat=3):
        assert factored_constant(g1, g2, g3, G, heis2) == bruteforce_constant(g1, g2, g3, G, heis2)


# --- coset classes -----------------------------------------------------------------


def test_coset_singletons_s4():
    cls = coset_analysis((0,), (0,), (0,), build_group("S", 4))
    assert len(cls) == 5
    same = [c for c in cls if c.n3 == 1]
    assert len(same) == 1 and same[0].M_squared == Fraction(1, 4)


def test_coset_coincident_support():
    cls = coset_analysis((0,), (0,), (), build_group("S", 4))
    coincident = [c for c in cls if c.A[0] == c.A[1]]
    assert [c.M_squared for c in coincident] == [1]


def test_coset_gl22():
    cls = coset_analysis((1,), (1,), (1,), build_group("GL", 2, 2))
    assert len(cls) == 5
    assert all(c.M_squared > 0 for c in cls)
    assert [c.M_squared for c in cls if c.n3 == 1] == [Fraction(1, 3)]


def test_coset_enumerate_matches_venn():
    S5 = build_group("S", 5)
    for sizes in itertools.product(range(3), repeat=3):
        Ks = [tuple(range(s)) for s in sizes]
        a = coset_analysis(*Ks, S5, method="closed_form")
        b = coset_analysis(*Ks, S5, method="enumerate")
        key = lambda c: (c.n3, c.M_squared, c.stab, c.union)
        assert sorted(map(key, a)) == sorted(map(key, b))


def test_sn_m_closed_form_examples():
    for N in range(1, 9):
        assert sn_m_closed_form(1, 1, 0, 0, N) == 1
    assert sn_m_closed_form(1, 1, 1, 1, 4) == Fraction(1, 4)
    assert sn_m_closed_form(2, 2, 2, 0, 4) == Fraction(1, 3)
    with pytest.raises(ValidationError):
        sn_m_closed_form(1, 1, 1, 0, 4)
    with pytest.raises(ValueError):
        sn_m_closed_form(3, 3, 0, 0, 2)


def test_admissible_classes_have_integral_union():
    S6 = build_group("S", 6)
    for sizes in itertools.product(range(4), repeat=3):
        for c in coset_analysis(*(tuple(range(s)) for s in sizes), S6):
            if c.admissible:
                assert 2 * c.union == sum(sizes) - c.n3


# --- limits ------------------------------------------------------------------------------


def test_limit_sn_example(unit1):
    aa, a = a_at(0, 1), a_at(0)
    res = limit_constant(aa, a, a, "S", unit1)
    assert res.value == SQRT2
    assert [res.finite(N).square_exact() for N in (2, 3, 4)] == [1, Fraction(4, 3), Fraction(3, 2)]
    assert {c.status for c in res.classes} == {"kept", "degenerate"}
    # degenerate classes stay in the certificate
    assert len(res.certificate) == len(res.classes) > 1


def test_limit_gl_example(unit1):
    aa, a = a_at(1, 2), a_at(1)
    res = limit_constant(aa, a, a, "GL", unit1)
    assert res.value == SQRT2
    for N in (2, 3):
        finite = factored_constant(aa, a, a, build_group("GL", N, 2), unit1)
        assert finite == res.finite(N)
        assert finite.square_exact() == Fraction(2 * (2**N - 2), 2**N - 1)


def test_limit_single_trace_decays(unit1):
    res = limit_constant(a_at(0), a_at(0), a_at(0), "S", unit1)
    assert res.value == ZERO


def test_limit_gl_certificate_rates(heis2):
    g = W(((1, "a"),), 1)
    res = limit_constant(g, g, W(((1, "a11"),), 2), "GL", heis2)
    decays = [c for c in res.classes if c.status == "decays"]
    assert decays and all(c.rate.startswith("q^(-") for c in decays)


def test_limit_growing_class_is_error():
    bad = unit1_seed()
    bad.constants[("a", "vac", "vac")] = ONE
    with pytest.raises(ValidationError):
        limit_constant(a_at(0), VACUUM, VACUUM, "S", bad)


def test_limit_unknown_family(unit1):
    with pytest.raises(ValueError):
        limit_constant(a_at(0), a_at(0), VACUUM, "Z", unit1)


def test_limit_table_jacobi(heis2):
    for kind in ("S", "GL"):
        rep = jacobi_check(limit_table(kind, heis2, 2))
        assert rep.passed and rep.checked > 0


def test_fixed_point_table_round_trip(unit1):
    t = fixed_point_table(build_group("S", 2), unit1)
    doc = t.to_json()
    assert doc["N"] == 2 and doc["group"] == "S:2"
    assert load_seed(json.dumps(doc)).constants == t.constants


# --- freeness ---------------------------------------------------------------------------------


def test_freeness_sn(heis2):
    assert freeness_report("S", heis2).verdict == "free"
    assert freeness_report("S", vacuum_seed()).verdict == "free"


def test_freeness_injected_cubic():
    seed = unit1_seed()
    seed.constants[("a", "a", "a")] = ONE
    rep = freeness_report("S", seed)
    assert rep.verdict == "free"
    (ids, N1, N2, ex), = rep.scaling
    assert (N1, N2) == (8, 32) and abs(ex + 0.5) < 0.1


def test_freeness_gl_unit1(unit1):
    rep = freeness_report("GL", unit1)
    assert rep.verdict == "free"
    assert "free" in rep.summary()
